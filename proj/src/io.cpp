// Copyright 2026 The dlgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dlgames/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "dlgames/errors.hpp"

namespace dlgames {
namespace {

using nlohmann::json;

const std::set<std::string> kKeys = {"domain", "point", "individuals",
                                     "concepts", "roles"};

std::string as_string(const json& v, const std::string& field) {
  if (!v.is_string()) throw FormatError(field, "expected a string");
  return v.get<std::string>();
}

const json& as_object(const json& v, const std::string& field) {
  if (!v.is_object()) throw FormatError(field, "expected an object");
  return v;
}

const json& as_array(const json& v, const std::string& field) {
  if (!v.is_array()) throw FormatError(field, "expected a list");
  return v;
}

void claim_name(std::set<std::string>& used, const std::string& name,
                const std::string& field) {
  if (!used.insert(name).second) {
    throw FormatError(field, "name " + name + " is used for two kinds");
  }
}

}  // namespace

PointedInterpretation interpretation_from_json(const json& doc) {
  if (!doc.is_object()) throw FormatError("document", "expected an object");
  for (const auto& [key, value] : doc.items()) {
    if (!kKeys.count(key)) throw FormatError(key, "unknown key");
  }
  if (!doc.contains("domain")) throw FormatError("domain", "missing");

  PointedInterpretation p;
  Interpretation& i = p.interp;
  std::string first;
  for (const auto& e : as_array(doc.at("domain"), "domain")) {
    std::string name = as_string(e, "domain");
    if (!i.domain.insert(name).second) {
      throw FormatError("domain", "duplicate element " + name);
    }
    if (first.empty()) first = name;
  }
  if (i.domain.empty()) throw FormatError("domain", "must be nonempty");
  auto require_element = [&](const std::string& e, const std::string& field) {
    if (!i.domain.count(e)) {
      throw FormatError(field, "element " + e + " is not in the domain");
    }
  };

  std::set<std::string> used;
  if (doc.contains("individuals")) {
    for (const auto& [o, e] :
         as_object(doc.at("individuals"), "individuals").items()) {
      const std::string field = "individuals." + o;
      claim_name(used, o, field);
      std::string el = as_string(e, field);
      require_element(el, field);
      i.vocab.individuals.insert(o);
      i.individuals[o] = el;
    }
  }
  if (doc.contains("concepts")) {
    for (const auto& [c, ext] :
         as_object(doc.at("concepts"), "concepts").items()) {
      const std::string field = "concepts." + c;
      claim_name(used, c, field);
      i.vocab.concepts.insert(c);
      auto& set = i.concepts[c];
      for (const auto& e : as_array(ext, field)) {
        std::string el = as_string(e, field);
        require_element(el, field);
        set.insert(el);
      }
    }
  }
  if (doc.contains("roles")) {
    for (const auto& [r, ext] : as_object(doc.at("roles"), "roles").items()) {
      const std::string field = "roles." + r;
      claim_name(used, r, field);
      i.vocab.roles.insert(r);
      auto& set = i.roles[r];
      for (const auto& pair : as_array(ext, field)) {
        if (!pair.is_array() || pair.size() != 2) {
          throw FormatError(field, "expected pairs [from, to]");
        }
        std::string a = as_string(pair[0], field);
        std::string b = as_string(pair[1], field);
        require_element(a, field);
        require_element(b, field);
        set.emplace(a, b);
      }
    }
  }
  if (doc.contains("point")) {
    p.point = as_string(doc.at("point"), "point");
    require_element(p.point, "point");
  } else {
    p.point = first;
  }
  auto violations = validate_pointed(p);
  if (!violations.empty()) throw FormatError("document", violations.front());
  return p;
}

PointedInterpretation read_interpretation(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FormatError("document", std::string("not valid JSON: ") + e.what());
  }
  return interpretation_from_json(doc);
}

PointedInterpretation read_interpretation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("file", "cannot open " + path);
  return read_interpretation(in);
}

json interpretation_to_json(const PointedInterpretation& p) {
  const Interpretation& i = p.interp;
  json out = json::object();
  out["domain"] = json(std::vector<std::string>(i.domain.begin(),
                                                i.domain.end()));
  out["point"] = p.point;
  json inds = json::object();
  for (const auto& o : i.vocab.individuals) {
    auto it = i.individuals.find(o);
    if (it != i.individuals.end()) inds[o] = it->second;
  }
  out["individuals"] = inds;
  json concepts = json::object();
  for (const auto& c : i.vocab.concepts) {
    const auto& ext = i.concept_extent(c);
    concepts[c] = json(std::vector<std::string>(ext.begin(), ext.end()));
  }
  out["concepts"] = concepts;
  json roles = json::object();
  for (const auto& r : i.vocab.roles) {
    json pairs = json::array();
    for (const auto& [a, b] : i.role_extent(r)) pairs.push_back({a, b});
    roles[r] = pairs;
  }
  out["roles"] = roles;
  return out;
}

json vocabulary_to_json(const Vocabulary& v) {
  return json{
      {"individuals", std::vector<std::string>(v.individuals.begin(),
                                               v.individuals.end())},
      {"concepts",
       std::vector<std::string>(v.concepts.begin(), v.concepts.end())},
      {"roles", std::vector<std::string>(v.roles.begin(), v.roles.end())},
  };
}

json report_to_json(const ReductionReport& r) {
  json manifest = json::array();
  for (const auto& g : r.manifest) {
    manifest.push_back({{"kind", g.kind}, {"name", g.name}, {"stage", g.stage}});
  }
  return json{
      {"stages", r.stages},
      {"input_vocabulary", vocabulary_to_json(r.input)},
      {"output_vocabulary", vocabulary_to_json(r.output)},
      {"input_elements", r.input_elements},
      {"output_elements", r.output_elements},
      {"element_delta", r.element_delta()},
      {"manifest", manifest},
  };
}

std::string to_text(const json& doc) { return doc.dump(2) + "\n"; }

}  // namespace dlgames
