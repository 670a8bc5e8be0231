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

#include "oracles.hpp"

#include <functional>
#include <map>
#include <tuple>

#include "dlgames/bisim.hpp"
#include "dlgames/model.hpp"

namespace dlgames::testing {

bool oracle_role_holds(const Role& r, const Interpretation& i,
                       const Element& x, const Element& y) {
  switch (r.kind()) {
    case Role::Kind::kAtomic:
      return i.has_edge(r.name(), x, y);
    case Role::Kind::kInverse:
      return i.has_edge(r.name(), y, x);
    case Role::Kind::kUnion:
      return oracle_role_holds(r.lhs(), i, x, y) ||
             oracle_role_holds(r.rhs(), i, x, y);
    case Role::Kind::kIntersection:
      return oracle_role_holds(r.lhs(), i, x, y) &&
             oracle_role_holds(r.rhs(), i, x, y);
    case Role::Kind::kDifference:
      return oracle_role_holds(r.lhs(), i, x, y) &&
             !oracle_role_holds(r.rhs(), i, x, y);
  }
  return false;
}

bool oracle_holds(const Concept& c, const Interpretation& i,
                  const Element& x) {
  switch (c.kind()) {
    case Concept::Kind::kName:
      return i.concept_extent(c.symbol()).count(x) > 0;
    case Concept::Kind::kNominal:
      return i.individuals.at(c.symbol()) == x;
    case Concept::Kind::kNot:
      return !oracle_holds(c.child(), i, x);
    case Concept::Kind::kAnd:
      return oracle_holds(c.child(), i, x) && oracle_holds(c.rhs(), i, x);
    case Concept::Kind::kExists:
      for (const auto& y : i.domain) {
        if (oracle_role_holds(c.role(), i, x, y) &&
            oracle_holds(c.child(), i, y)) {
          return true;
        }
      }
      return false;
    case Concept::Kind::kExistsSelf:
      return oracle_role_holds(c.role(), i, x, x);
  }
  return false;
}

std::set<Element> oracle_extent(const Concept& c, const Interpretation& i) {
  std::set<Element> out;
  for (const auto& x : i.domain) {
    if (oracle_holds(c, i, x)) out.insert(x);
  }
  return out;
}

bool oracle_harmony(const Interpretation& i, const Element& a,
                    const Interpretation& j, const Element& b,
                    const LogicSelector& logic) {
  for (const auto& c : i.vocab.concepts) {
    if (i.concept_extent(c).count(a) != j.concept_extent(c).count(b)) {
      return false;
    }
  }
  if (logic.nominals) {
    for (const auto& o : i.vocab.individuals) {
      if ((i.individuals.at(o) == a) != (j.individuals.at(o) == b)) {
        return false;
      }
    }
  }
  if (logic.self) {
    for (const auto& r : i.vocab.roles) {
      if (i.has_edge(r, a, a) != j.has_edge(r, b, b)) return false;
    }
  }
  return true;
}

namespace {

class GameSearch {
 public:
  GameSearch(const Interpretation& i, const Interpretation& j,
             const LogicSelector& logic)
      : i_(i), j_(j), logic_(logic) {}

  // Duplicator survives `k` more rounds from (a, b).
  bool duplicator(const Element& a, const Element& b, std::size_t k) {
    if (!oracle_harmony(i_, a, j_, b, logic_)) return false;
    if (k == 0) return true;
    auto key = std::make_tuple(a, b, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = spoiler_blocked(i_, a, j_, b, k, false) &&
                  spoiler_blocked(j_, b, i_, a, k, true);
    memo_[key] = result;
    return result;
  }

 private:
  std::set<std::string> two_type(const Interpretation& m, const Element& x,
                                 const Element& y) const {
    std::set<std::string> out;
    for (const auto& r : m.vocab.roles) {
      if (m.has_edge(r, x, y)) out.insert(r);
    }
    return out;
  }

  bool step(const Interpretation& m, const std::string& r, bool backward,
            const Element& x, const Element& y) const {
    return backward ? m.has_edge(r, y, x) : m.has_edge(r, x, y);
  }

  // Every Spoiler move in `s` (from x) has a reply in `d` (from y).
  // `swapped` means s is the right interpretation.
  bool spoiler_blocked(const Interpretation& s, const Element& x,
                       const Interpretation& d, const Element& y,
                       std::size_t k, bool swapped) {
    for (const auto& r : s.vocab.roles) {
      for (bool backward : {false, true}) {
        if (backward && !logic_.inverse) continue;
        for (const auto& x2 : s.domain) {
          if (!step(s, r, backward, x, x2)) continue;
          bool answered = false;
          for (const auto& y2 : d.domain) {
            if (!step(d, r, backward, y, y2)) continue;
            if (logic_.boolean_roles) {
              if (two_type(s, x, x2) != two_type(d, y, y2)) continue;
              if (logic_.inverse &&
                  two_type(s, x2, x) != two_type(d, y2, y)) {
                continue;
              }
            }
            bool ok = swapped ? duplicator(y2, x2, k - 1)
                              : duplicator(x2, y2, k - 1);
            if (ok) {
              answered = true;
              break;
            }
          }
          if (!answered) return false;
        }
      }
    }
    return true;
  }

  const Interpretation& i_;
  const Interpretation& j_;
  LogicSelector logic_;
  std::map<std::tuple<Element, Element, std::size_t>, bool> memo_;
};

std::size_t count_from(const Interpretation& i, const Element& x,
                       std::size_t k) {
  std::size_t n = 1;
  if (k == 0) return n;
  for (const auto& r : i.vocab.roles) {
    for (const auto& y : i.domain) {
      if (i.has_edge(r, x, y)) n += count_from(i, y, k - 1);
    }
  }
  return n;
}

// Concept label sets occurring in the tree; a strong embedding maps each
// path position to a node with exactly its label set.
std::vector<std::set<std::string>> labels_in(const UnravelTree& t) {
  std::set<std::set<std::string>> seen;
  const Model& m = t.model();
  for (Index e = 0; e < m.size(); ++e) {
    std::set<std::string> label;
    for (Index c = 0; c < m.concept_names().size(); ++c) {
      if (m.member(c, e)) label.insert(m.concept_names()[c]);
    }
    seen.insert(label);
  }
  return {seen.begin(), seen.end()};
}

// Every point-preserving embedding of `path` into `tree`, by enumerating
// all maps that fix the point and testing each one.
std::vector<std::vector<Index>> embeddings(const Model& path,
                                           const Model& tree) {
  std::vector<std::vector<Index>> out;
  std::vector<Index> map(path.size(), 0);
  // Path elements are p0 < p1 < ... in index order; p0 is the point and
  // is pinned to the root.
  std::function<void(Index)> extend = [&](Index i) {
    if (i == path.size()) {
      if (is_morphism(path, tree, map, MorphismKind::kEmbedding, true)) {
        out.push_back(map);
      }
      return;
    }
    for (Index n = 0; n < tree.size(); ++n) {
      map[i] = n;
      extend(i + 1);
    }
  };
  map[path.point()] = tree.point();
  extend(1);
  return out;
}

}  // namespace

bool oracle_duplicator_wins(const PointedInterpretation& p,
                            const PointedInterpretation& q,
                            const LogicSelector& logic, std::size_t rounds) {
  if (rounds == StratifiedBisim::kOmega) {
    rounds = p.interp.domain.size() * q.interp.domain.size() + 1;
  }
  GameSearch search(p.interp, q.interp, logic);
  return search.duplicator(p.point, q.point, rounds);
}

std::size_t oracle_sequence_count(const PointedInterpretation& p,
                                  std::size_t k) {
  return count_from(p.interp, p.point, k);
}

std::vector<std::vector<bool>> oracle_w_literal(const UnravelTree& left,
                                                const UnravelTree& right,
                                                std::size_t max_steps) {
  std::vector<std::vector<bool>> w(left.size(),
                                   std::vector<bool>(right.size(), false));
  const Model& lm = left.model();
  const Model& rm = right.model();
  // Tree interpretations are named by path; map them back to node indices.
  std::map<std::string, Index> left_node;
  std::map<std::string, Index> right_node;
  for (Index n = 0; n < left.size(); ++n) left_node[left.path_name(n)] = n;
  for (Index n = 0; n < right.size(); ++n) right_node[right.path_name(n)] = n;

  const auto labels = labels_in(left);
  std::vector<std::string> roles(lm.role_names());
  Vocabulary vocab = lm.vocabulary();

  // Enumerate paths p0 -r1-> p1 ... -rm-> pm with arbitrary label sets.
  std::vector<std::size_t> label_of;
  std::vector<std::size_t> role_of;
  std::function<void(std::size_t)> grow = [&](std::size_t steps) {
    PointedInterpretation path;
    path.interp.vocab = vocab;
    for (std::size_t i = 0; i <= steps; ++i) {
      Element e = "p" + std::to_string(i);
      path.interp.domain.insert(e);
      for (const auto& c : labels[label_of[i]]) {
        path.interp.add_concept_member(c, e);
      }
      if (i > 0) {
        path.interp.add_edge(roles[role_of[i - 1]],
                             "p" + std::to_string(i - 1), e);
      }
    }
    path.point = "p0";
    Model pm(path);
    auto el = embeddings(pm, lm);
    auto er = embeddings(pm, rm);
    for (const auto& a : el) {
      for (const auto& b : er) {
        for (Index i = 0; i < pm.size(); ++i) {
          w[left_node.at(lm.element_name(a[i]))]
           [right_node.at(rm.element_name(b[i]))] = true;
        }
      }
    }
    if (steps == max_steps) return;
    for (std::size_t r = 0; r < roles.size(); ++r) {
      for (std::size_t l = 0; l < labels.size(); ++l) {
        role_of.push_back(r);
        label_of.push_back(l);
        grow(steps + 1);
        role_of.pop_back();
        label_of.pop_back();
      }
    }
  };
  for (std::size_t l = 0; l < labels.size(); ++l) {
    label_of = {l};
    role_of.clear();
    grow(0);
  }
  return w;
}

NodeMap oracle_coextend(const NodeMap& f, const UnravelTree& tp,
                        const UnravelTree& tq) {
  std::map<std::vector<std::string>, Index> by_sequence;
  for (Index n = 0; n < tq.size(); ++n) by_sequence[tq.sequence(n)] = n;
  const Model& q = tq.source();
  NodeMap out(tp.size());
  for (Index s = 0; s < tp.size(); ++s) {
    auto seq = tp.sequence(s);
    // Prefix nodes of s, root first.
    std::vector<Index> chain;
    for (Index n = s; n != UnravelNode::kNoParent; n = tp.node(n).parent) {
      chain.insert(chain.begin(), n);
    }
    std::vector<std::string> image;
    for (std::size_t i = 0; i < chain.size(); ++i) {
      if (i > 0) image.push_back(seq[2 * i - 1]);
      image.push_back(q.element_name(f[chain[i]]));
    }
    auto it = by_sequence.find(image);
    if (it == by_sequence.end()) return {};
    out[s] = it->second;
  }
  return out;
}

}  // namespace dlgames::testing
