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

#include "dlgames/bnf.hpp"

#include <cstdint>
#include <memory>
#include <unordered_map>

#include "dlgames/errors.hpp"

namespace dlgames {
namespace {

bool same_labels(const Model& a, Index x, const Model& b, Index y) {
  for (Index c = 0; c < a.concept_names().size(); ++c) {
    if (a.member(c, x) != b.member(c, y)) return false;
  }
  return true;
}

void require_compatible(const UnravelTree& left, const UnravelTree& right) {
  if (left.source().concept_names() != right.source().concept_names() ||
      left.source().role_names() != right.source().role_names()) {
    throw VocabularyMismatchError(
        "the two unravellings use different vocabularies");
  }
}

class Solver {
 public:
  Solver(const UnravelTree& l, const UnravelTree& r) : l_(l), r_(r) {}

  // Duplicator survives from (s, t), a pair already in W.
  bool wins(Index s, Index t) {
    const std::uint64_t key = static_cast<std::uint64_t>(s) * r_.size() + t;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    ++explored_;
    bool result = solve(s, t);
    memo_.emplace(key, result);
    return result;
  }

  std::size_t explored() const { return explored_; }

 private:
  bool solve(Index s, Index t) {
    const auto& sn = l_.node(s).children;
    const auto& tn = r_.node(t).children;
    for (Index s2 : sn) {
      if (!answered(s2, tn, false)) return false;
    }
    for (Index t2 : tn) {
      if (!answered(t2, sn, true)) return false;
    }
    return true;
  }

  // Some reply among `options` keeps the pair in W and wins from there.
  bool answered(Index moved, const std::vector<Index>& options,
                bool moved_right) {
    for (Index o : options) {
      Index s = moved_right ? o : moved;
      Index t = moved_right ? moved : o;
      if (step_in_w(s, t) && wins(s, t)) return true;
    }
    return false;
  }

  // W for children of a W pair: the new step agrees in role and labels.
  bool step_in_w(Index s, Index t) const {
    const UnravelNode& a = l_.node(s);
    const UnravelNode& b = r_.node(t);
    return a.role == b.role &&
           same_labels(l_.source(), a.element, r_.source(), b.element);
  }

  const UnravelTree& l_;
  const UnravelTree& r_;
  std::size_t explored_ = 0;
  std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

bool w_membership(const UnravelTree& left, Index s, const UnravelTree& right,
                  Index t) {
  require_compatible(left, right);
  if (s >= left.size() || t >= right.size()) {
    throw PreconditionError("node index out of range");
  }
  for (;;) {
    const UnravelNode& a = left.node(s);
    const UnravelNode& b = right.node(t);
    if (a.depth != b.depth) return false;
    if (!same_labels(left.source(), a.element, right.source(), b.element)) {
      return false;
    }
    if (a.parent == UnravelNode::kNoParent) return true;
    if (a.role != b.role) return false;
    s = a.parent;
    t = b.parent;
  }
}

BnfResult bnf_solve(const UnravelTree& left, const UnravelTree& right) {
  require_compatible(left, right);
  if (left.depth() != right.depth()) {
    throw PreconditionError("the game needs unravellings of equal depth");
  }
  BnfResult out;
  out.left_nodes = left.size();
  out.right_nodes = right.size();
  Solver solver(left, right);
  out.duplicator_wins = w_membership(left, 0, right, 0) && solver.wins(0, 0);
  out.positions_explored = solver.explored();
  return out;
}

BnfResult bnf_game(const PointedInterpretation& p,
                   const PointedInterpretation& q, const LogicSelector& logic,
                   std::size_t k, const NominalOptions& options) {
  if (!(p.interp.vocab == q.interp.vocab)) {
    throw VocabularyMismatchError(
        "the two interpretations have different vocabularies");
  }
  UnravelTree left = unravel(tau_phi(p, logic, options), k);
  UnravelTree right = unravel(tau_phi(q, logic, options), k);
  return bnf_solve(left, right);
}

}  // namespace dlgames
