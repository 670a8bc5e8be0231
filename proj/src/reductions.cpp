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

#include "dlgames/reductions.hpp"

#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <set>

#include "dlgames/errors.hpp"

namespace dlgames {
namespace {

constexpr std::size_t kMaxBooleanRoles = 16;
constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

void require_fresh_names(const Vocabulary& v, const Vocabulary& added) {
  for (const auto* names : {&added.individuals, &added.concepts,
                            &added.roles}) {
    for (const auto& n : *names) {
      if (v.individuals.count(n) || v.concepts.count(n) || v.roles.count(n)) {
        throw NameCollisionError("generated name " + n +
                                 " is already in the vocabulary");
      }
    }
  }
}

// Vocabulary names a stage adds on top of v.
Vocabulary added_names(const Vocabulary& v, ReductionTag tag,
                       const NominalOptions& options) {
  Vocabulary out;
  switch (tag) {
    case ReductionTag::kSelf:
      for (const auto& r : v.roles) out.concepts.insert(self_concept_name(r));
      break;
    case ReductionTag::kInverse:
      for (const auto& r : v.roles) out.roles.insert(inverse_role_name(r));
      break;
    case ReductionTag::kBoolean: {
      if (v.roles.size() > kMaxBooleanRoles) {
        throw PreconditionError("boolean role enrichment supports at most " +
                                std::to_string(kMaxBooleanRoles) +
                                " role names");
      }
      std::vector<std::string> roles(v.roles.begin(), v.roles.end());
      const std::size_t subsets = std::size_t{1} << roles.size();
      for (std::size_t mask = 1; mask < subsets; ++mask) {
        std::vector<std::string> s;
        for (std::size_t i = 0; i < roles.size(); ++i) {
          if (mask >> i & 1) s.push_back(roles[i]);
        }
        out.roles.insert(subset_role_name(s));
      }
      break;
    }
    case ReductionTag::kNominal:
      for (const auto& o : v.individuals) {
        for (const auto& r : v.roles) {
          out.concepts.insert(trampoline_concept_name(o, r));
        }
        if (options.mark_named) out.concepts.insert(marker_concept_name(o));
        out.roles.insert(distance_role_name(o));
      }
      break;
  }
  return out;
}

Vocabulary merged(const Vocabulary& a, const Vocabulary& b) {
  Vocabulary out = a;
  out.individuals.insert(b.individuals.begin(), b.individuals.end());
  out.concepts.insert(b.concepts.begin(), b.concepts.end());
  out.roles.insert(b.roles.begin(), b.roles.end());
  return out;
}

// Records the stage in the report and adds vocabulary names to the manifest.
void note_stage(ReductionReport* report, ReductionTag tag,
                const Vocabulary& added) {
  if (!report) return;
  report->stages.push_back(to_string(tag));
  for (const auto& c : added.concepts) {
    report->manifest.push_back({"concept", c, to_string(tag)});
  }
  for (const auto& r : added.roles) {
    report->manifest.push_back({"role", r, to_string(tag)});
  }
}

// Starts a report for a top-level call; nested stages only append.
class ReportScope {
 public:
  ReportScope(ReductionReport* report, const PointedInterpretation& p)
      : report_(report) {
    if (report_ && report_->stages.empty()) {
      report_->input = p.interp.vocab;
      report_->input_elements = p.interp.domain.size();
    }
  }
  void finish(const PointedInterpretation& out) {
    if (!report_) return;
    report_->output = out.interp.vocab;
    report_->output_elements = out.interp.domain.size();
  }

 private:
  ReductionReport* report_;
};

// Undirected adjacency over the whole interpretation.
std::map<Element, std::set<Element>> gaifman(const Interpretation& i) {
  std::map<Element, std::set<Element>> adj;
  for (const auto& e : i.domain) adj[e];
  for (const auto& [r, edges] : i.roles) {
    for (const auto& [a, b] : edges) {
      adj[a].insert(b);
      adj[b].insert(a);
    }
  }
  return adj;
}

std::map<Element, std::set<Element>> forward(const Interpretation& i) {
  std::map<Element, std::set<Element>> adj;
  for (const auto& e : i.domain) adj[e];
  for (const auto& [r, edges] : i.roles) {
    for (const auto& [a, b] : edges) adj[a].insert(b);
  }
  return adj;
}

std::map<Element, std::size_t> bfs(
    const std::map<Element, std::set<Element>>& adj, const Element& from,
    const std::set<Element>* allowed = nullptr) {
  std::map<Element, std::size_t> dist{{from, 0}};
  std::deque<Element> queue{from};
  while (!queue.empty()) {
    Element x = queue.front();
    queue.pop_front();
    for (const auto& y : adj.at(x)) {
      if (allowed && !allowed->count(y)) continue;
      if (dist.emplace(y, dist[x] + 1).second) queue.push_back(y);
    }
  }
  return dist;
}

}  // namespace

const char* to_string(ReductionTag t) {
  switch (t) {
    case ReductionTag::kSelf:
      return "Self";
    case ReductionTag::kInverse:
      return "I";
    case ReductionTag::kBoolean:
      return "b";
    case ReductionTag::kNominal:
      return "O";
  }
  return "?";
}

std::string self_concept_name(const std::string& role) {
  return "@self:" + role;
}
std::string inverse_role_name(const std::string& role) {
  return "@inv:" + role;
}
std::string subset_role_name(const std::vector<std::string>& sorted_roles) {
  std::string out = "@b:{";
  for (std::size_t i = 0; i < sorted_roles.size(); ++i) {
    if (i) out += ',';
    out += sorted_roles[i];
  }
  return out + "}";
}
std::string trampoline_concept_name(const std::string& individual,
                                    const std::string& role) {
  return "@nom:" + individual + ":" + role;
}
std::string marker_concept_name(const std::string& individual) {
  return "@is:" + individual;
}
std::string distance_role_name(const std::string& individual) {
  return "@dist:" + individual;
}

Vocabulary vocab_map(const Vocabulary& v, ReductionTag tag,
                     const NominalOptions& options) {
  Vocabulary added = added_names(v, tag, options);
  require_fresh_names(v, added);
  return merged(v, added);
}

Vocabulary vocab_map(const Vocabulary& v, const LogicSelector& logic,
                     const NominalOptions& options) {
  Vocabulary out = v;
  if (logic.self) out = vocab_map(out, ReductionTag::kSelf, options);
  if (logic.inverse) out = vocab_map(out, ReductionTag::kInverse, options);
  if (logic.boolean_roles) {
    out = vocab_map(out, ReductionTag::kBoolean, options);
  }
  if (logic.nominals) out = vocab_map(out, ReductionTag::kNominal, options);
  return out;
}

PointedInterpretation tau_self(const PointedInterpretation& p,
                               ReductionReport* report) {
  require_valid(p);
  ReportScope scope(report, p);
  Vocabulary added = added_names(p.interp.vocab, ReductionTag::kSelf, {});
  require_fresh_names(p.interp.vocab, added);
  PointedInterpretation out = p;
  out.interp.vocab = merged(p.interp.vocab, added);
  for (const auto& r : p.interp.vocab.roles) {
    auto& ext = out.interp.concepts[self_concept_name(r)];
    for (const auto& [a, b] : p.interp.role_extent(r)) {
      if (a == b) ext.insert(a);
    }
  }
  note_stage(report, ReductionTag::kSelf, added);
  scope.finish(out);
  return out;
}

PointedInterpretation tau_inv(const PointedInterpretation& p,
                              ReductionReport* report) {
  require_valid(p);
  ReportScope scope(report, p);
  Vocabulary added = added_names(p.interp.vocab, ReductionTag::kInverse, {});
  require_fresh_names(p.interp.vocab, added);
  PointedInterpretation out = p;
  out.interp.vocab = merged(p.interp.vocab, added);
  for (const auto& r : p.interp.vocab.roles) {
    auto& ext = out.interp.roles[inverse_role_name(r)];
    for (const auto& [a, b] : p.interp.role_extent(r)) ext.emplace(b, a);
  }
  note_stage(report, ReductionTag::kInverse, added);
  scope.finish(out);
  return out;
}

PointedInterpretation tau_b(const PointedInterpretation& p,
                            ReductionReport* report) {
  require_valid(p);
  ReportScope scope(report, p);
  Vocabulary added = added_names(p.interp.vocab, ReductionTag::kBoolean, {});
  require_fresh_names(p.interp.vocab, added);
  PointedInterpretation out = p;
  out.interp.vocab = merged(p.interp.vocab, added);
  // Role sets per ordered pair; roles iterate in sorted order.
  std::map<Edge, std::vector<std::string>> types;
  for (const auto& r : p.interp.vocab.roles) {
    for (const auto& e : p.interp.role_extent(r)) types[e].push_back(r);
  }
  for (const auto& [e, s] : types) {
    out.interp.roles[subset_role_name(s)].insert(e);
  }
  note_stage(report, ReductionTag::kBoolean, added);
  scope.finish(out);
  return out;
}

PointedInterpretation tau_o(const PointedInterpretation& p,
                            const NominalOptions& options,
                            ReductionReport* report) {
  require_valid(p);
  ReportScope scope(report, p);
  const Interpretation& in = p.interp;
  Vocabulary added = added_names(in.vocab, ReductionTag::kNominal, options);
  require_fresh_names(in.vocab, added);

  const auto undirected = gaifman(in);
  const auto gaifman_dist = bfs(undirected, p.point);
  for (const auto& [o, e] : in.individuals) {
    if (!gaifman_dist.count(e)) {
      throw UnreachableNominalError("individual " + o + " names " + e +
                                    ", which is not reachable from the point " +
                                    p.point);
    }
  }
  std::map<Element, std::size_t> forward_dist;
  if (options.forward_distance) forward_dist = bfs(forward(in), p.point);

  std::set<Element> generated;
  auto fresh_element = [&](const std::string& name) {
    if (in.domain.count(name) || !generated.insert(name).second) {
      throw NameCollisionError("generated element " + name +
                               " is already in use");
    }
    if (report) report->manifest.push_back({"element", name, "O"});
    return name;
  };

  // (A) the part connected to the point.
  std::set<Element> kept;
  for (const auto& [e, d] : gaifman_dist) kept.insert(e);
  Interpretation j = restrict_to(in, kept);
  j.individuals = in.individuals;

  // Named elements and the individuals naming them.
  std::map<Element, std::vector<std::string>> names_of;
  for (const auto& [o, e] : in.individuals) names_of[e].push_back(o);

  // (B) one trampoline per r-edge into a named element and per name.
  for (const auto& r : in.vocab.roles) {
    for (const auto& [x, y] : in.role_extent(r)) {
      if (!kept.count(x)) continue;
      auto it = names_of.find(y);
      if (it == names_of.end()) continue;
      for (const auto& o : it->second) {
        Element t = fresh_element("@tramp:" + x + ":" + o + ":" + r);
        j.domain.insert(t);
        j.concepts[trampoline_concept_name(o, r)].insert(t);
        j.roles[r].emplace(x, t);
      }
    }
  }

  // (C) components rooted at the point and at each named element. The
  // point's component keeps the original element names.
  Interpretation out;
  out.vocab = merged(in.vocab, added);
  const auto j_adj = gaifman(j);
  std::set<Element> roots{p.point};
  for (const auto& [e, names] : names_of) roots.insert(e);
  std::map<Element, Element> root_copy;
  for (const auto& root : roots) {
    std::set<Element> allowed;
    for (const auto& e : j.domain) {
      if (e == root || !names_of.count(e)) allowed.insert(e);
    }
    std::map<Element, Element> copy;
    for (const auto& [e, d] : bfs(j_adj, root, &allowed)) {
      copy[e] = root == p.point ? e : fresh_element("@copy:" + root + ":" + e);
      out.domain.insert(copy[e]);
    }
    root_copy[root] = copy[root];
    for (const auto& [c, ext] : j.concepts) {
      for (const auto& e : ext) {
        if (copy.count(e)) out.concepts[c].insert(copy.at(e));
      }
    }
    for (const auto& [r, ext] : j.roles) {
      for (const auto& [a, b] : ext) {
        if (copy.count(a) && copy.count(b)) {
          out.roles[r].emplace(copy.at(a), copy.at(b));
        }
      }
    }
  }
  for (const auto& [o, e] : in.individuals) {
    out.individuals[o] = root_copy.at(e);
    if (options.mark_named) {
      out.concepts[marker_concept_name(o)].insert(root_copy.at(e));
    }
  }

  // (D) a dummy path of length dist_o from the point to o's copy.
  for (const auto& [o, e] : in.individuals) {
    std::size_t dist = gaifman_dist.at(e);
    if (options.forward_distance) {
      auto it = forward_dist.find(e);
      dist = it == forward_dist.end() ? kUnreachable : it->second;
    }
    if (dist == 0) continue;
    const std::string role = distance_role_name(o);
    auto& ext = out.roles[role];
    if (dist == kUnreachable) {
      Element d = fresh_element("@dummy:" + o + ":1");
      out.domain.insert(d);
      ext.emplace(p.point, d);
      ext.emplace(d, d);
      continue;
    }
    Element prev = p.point;
    for (std::size_t i = 1; i < dist; ++i) {
      Element d = fresh_element("@dummy:" + o + ":" + std::to_string(i));
      out.domain.insert(d);
      ext.emplace(prev, d);
      prev = d;
    }
    ext.emplace(prev, root_copy.at(e));
  }

  // Drop empty extent entries so equal interpretations compare equal.
  for (auto it = out.concepts.begin(); it != out.concepts.end();) {
    it = it->second.empty() ? out.concepts.erase(it) : std::next(it);
  }
  for (auto it = out.roles.begin(); it != out.roles.end();) {
    it = it->second.empty() ? out.roles.erase(it) : std::next(it);
  }

  PointedInterpretation result{std::move(out), p.point};
  note_stage(report, ReductionTag::kNominal, added);
  scope.finish(result);
  return result;
}

PointedInterpretation tau_phi(const PointedInterpretation& p,
                              const LogicSelector& logic,
                              const NominalOptions& options,
                              ReductionReport* report) {
  require_valid(p);
  for (const auto* names : {&p.interp.vocab.individuals,
                            &p.interp.vocab.concepts, &p.interp.vocab.roles}) {
    for (const auto& n : *names) {
      if (!n.empty() && n.front() == '@') {
        throw NameCollisionError("name " + n +
                                 " uses the reserved '@' prefix");
      }
    }
  }
  ReportScope scope(report, p);
  PointedInterpretation cur = p;
  if (logic.self) cur = tau_self(cur, report);
  if (logic.inverse) cur = tau_inv(cur, report);
  if (logic.boolean_roles) cur = tau_b(cur, report);
  if (logic.nominals) cur = tau_o(cur, options, report);
  scope.finish(cur);
  return cur;
}

}  // namespace dlgames
