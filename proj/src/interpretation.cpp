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

#include "dlgames/interpretation.hpp"

#include <algorithm>
#include <deque>

#include "dlgames/errors.hpp"
#include "dlgames/model.hpp"

namespace dlgames {
namespace {

const std::set<Element> kNoElements;
const std::set<Edge> kNoEdges;

bool includes(const std::set<std::string>& sup,
              const std::set<std::string>& sub) {
  return std::includes(sup.begin(), sup.end(), sub.begin(), sub.end());
}

}  // namespace

std::vector<std::string> overlapping_names(const Vocabulary& v) {
  std::vector<std::string> out;
  auto check = [&](const std::set<std::string>& a,
                   const std::set<std::string>& b) {
    for (const auto& name : a) {
      if (b.count(name)) out.push_back(name);
    }
  };
  check(v.individuals, v.concepts);
  check(v.individuals, v.roles);
  check(v.concepts, v.roles);
  return out;
}

bool is_subvocabulary(const Vocabulary& sub, const Vocabulary& sup) {
  return includes(sup.individuals, sub.individuals) &&
         includes(sup.concepts, sub.concepts) && includes(sup.roles, sub.roles);
}

const std::set<Element>& Interpretation::concept_extent(
    const std::string& name) const {
  auto it = concepts.find(name);
  return it == concepts.end() ? kNoElements : it->second;
}

const std::set<Edge>& Interpretation::role_extent(
    const std::string& name) const {
  auto it = roles.find(name);
  return it == roles.end() ? kNoEdges : it->second;
}

bool Interpretation::has_edge(const std::string& role, const Element& from,
                              const Element& to) const {
  return role_extent(role).count({from, to}) > 0;
}

void Interpretation::add_concept_member(const std::string& concept_name,
                                        const Element& e) {
  vocab.concepts.insert(concept_name);
  domain.insert(e);
  concepts[concept_name].insert(e);
}

void Interpretation::add_edge(const std::string& role, const Element& from,
                              const Element& to) {
  vocab.roles.insert(role);
  domain.insert(from);
  domain.insert(to);
  roles[role].insert({from, to});
}

std::vector<std::string> validate_interpretation(const Interpretation& i) {
  std::vector<std::string> out;
  if (i.domain.empty()) out.push_back("empty domain");
  for (const auto& name : overlapping_names(i.vocab)) {
    out.push_back("name " + name + " is used in more than one name set");
  }
  for (const auto& [name, e] : i.individuals) {
    if (!i.vocab.individuals.count(name)) {
      out.push_back("individual " + name + " is not in the vocabulary");
    }
    if (!i.domain.count(e)) {
      out.push_back("individual " + name + " maps to non-domain element " + e);
    }
  }
  for (const auto& name : i.vocab.individuals) {
    if (!i.individuals.count(name)) {
      out.push_back("individual " + name + " is not mapped");
    }
  }
  for (const auto& [name, ext] : i.concepts) {
    if (!i.vocab.concepts.count(name)) {
      out.push_back("concept " + name + " is not in the vocabulary");
    }
    for (const auto& e : ext) {
      if (!i.domain.count(e)) {
        out.push_back("extent of " + name + " mentions non-domain element " +
                      e);
      }
    }
  }
  for (const auto& [name, ext] : i.roles) {
    if (!i.vocab.roles.count(name)) {
      out.push_back("role " + name + " is not in the vocabulary");
    }
    for (const auto& [a, b] : ext) {
      for (const auto& e : {a, b}) {
        if (!i.domain.count(e)) {
          out.push_back("extent of " + name + " mentions non-domain element " +
                        e);
        }
      }
    }
  }
  return out;
}

std::vector<std::string> validate_pointed(const PointedInterpretation& p) {
  auto out = validate_interpretation(p.interp);
  if (!p.interp.domain.count(p.point)) {
    out.push_back("point " + p.point + " is not in the domain");
  }
  return out;
}

void require_valid(const Interpretation& i) {
  auto v = validate_interpretation(i);
  if (!v.empty()) throw InvalidInterpretationError(v.front());
}

void require_valid(const PointedInterpretation& p) {
  auto v = validate_pointed(p);
  if (!v.empty()) throw InvalidInterpretationError(v.front());
}

Interpretation reduct(const Interpretation& i, const Vocabulary& keep) {
  if (!is_subvocabulary(keep, i.vocab)) {
    throw UnknownNameError("reduct vocabulary mentions names outside " +
                           std::string("the interpretation's vocabulary"));
  }
  Interpretation out;
  out.vocab = keep;
  out.domain = i.domain;
  for (const auto& [name, e] : i.individuals) {
    if (keep.individuals.count(name)) out.individuals.emplace(name, e);
  }
  for (const auto& [name, ext] : i.concepts) {
    if (keep.concepts.count(name)) out.concepts.emplace(name, ext);
  }
  for (const auto& [name, ext] : i.roles) {
    if (keep.roles.count(name)) out.roles.emplace(name, ext);
  }
  return out;
}

PointedInterpretation reduct(const PointedInterpretation& p,
                             const Vocabulary& keep) {
  return {reduct(p.interp, keep), p.point};
}

std::set<Element> reachable(const Interpretation& i, const Element& from) {
  if (!i.domain.count(from)) {
    throw UnknownElementError("unknown element " + from);
  }
  std::map<Element, std::vector<Element>> adjacent;
  for (const auto& [name, ext] : i.roles) {
    for (const auto& [a, b] : ext) {
      adjacent[a].push_back(b);
      adjacent[b].push_back(a);
    }
  }
  std::set<Element> seen{from};
  std::deque<Element> queue{from};
  while (!queue.empty()) {
    Element cur = queue.front();
    queue.pop_front();
    for (const auto& next : adjacent[cur]) {
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen;
}

Interpretation restrict_to(const Interpretation& i,
                           const std::set<Element>& keep) {
  Interpretation out;
  out.vocab = i.vocab;
  for (const auto& e : keep) {
    if (!i.domain.count(e)) throw UnknownElementError("unknown element " + e);
  }
  out.domain = keep;
  for (const auto& [name, e] : i.individuals) {
    if (keep.count(e)) out.individuals.emplace(name, e);
  }
  for (const auto& [name, ext] : i.concepts) {
    auto& dst = out.concepts[name];
    for (const auto& e : ext) {
      if (keep.count(e)) dst.insert(e);
    }
  }
  for (const auto& [name, ext] : i.roles) {
    auto& dst = out.roles[name];
    for (const auto& edge : ext) {
      if (keep.count(edge.first) && keep.count(edge.second)) dst.insert(edge);
    }
  }
  return out;
}

bool check_morphism(const MorphismWitness& h, const PointedInterpretation& src,
                    const PointedInterpretation& dst) {
  Model a(src);
  Model b(dst);
  std::vector<Index> map;
  try {
    map = to_index_map(a, b, h);
  } catch (const Error&) {
    return false;
  }
  return is_morphism(a, b, map, h.kind);
}

}  // namespace dlgames
