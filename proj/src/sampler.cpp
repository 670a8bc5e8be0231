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

#include "dlgames/sampler.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "dlgames/errors.hpp"

namespace dlgames {
namespace {

class Sampler {
 public:
  Sampler(const Vocabulary& v, const LogicSelector& logic, std::uint64_t seed)
      : logic_(logic), rng_(seed) {
    atoms_.assign(v.concepts.begin(), v.concepts.end());
    if (logic.nominals) {
      nominals_.assign(v.individuals.begin(), v.individuals.end());
    }
    roles_.assign(v.roles.begin(), v.roles.end());
  }

  bool has_atoms() const { return !atoms_.empty() || !nominals_.empty(); }

  Concept concept_of(std::size_t rank, std::size_t budget) {
    enum Choice { kLeaf, kNot, kAnd, kExists, kSelf };
    std::vector<Choice> choices;
    std::vector<double> weights;
    auto offer = [&](Choice c, double w) {
      choices.push_back(c);
      weights.push_back(w);
    };
    offer(kLeaf, 2.0);
    if (budget >= 2) offer(kNot, 2.0);
    if (budget >= 3) offer(kAnd, 2.0);
    if (!roles_.empty() && rank >= 1 && budget >= 3) offer(kExists, 3.0);
    if (!roles_.empty() && logic_.self && budget >= 2) offer(kSelf, 1.0);

    std::discrete_distribution<std::size_t> pick(weights.begin(),
                                                 weights.end());
    switch (choices[pick(rng_)]) {
      case kLeaf:
        return leaf();
      case kNot:
        return Concept::negation(concept_of(rank, budget - 1));
      case kAnd: {
        std::size_t left = uniform(1, budget - 2);
        Concept lhs = concept_of(rank, left);
        return Concept::conjunction(lhs,
                                    concept_of(rank, budget - 1 - lhs.size()));
      }
      case kExists: {
        Role r = role_of(uniform(1, std::min<std::size_t>(budget - 2, 5)));
        return Concept::exists(r, concept_of(rank - 1, budget - 1 - r.size()));
      }
      case kSelf:
        return Concept::exists_self(
            role_of(uniform(1, std::min<std::size_t>(budget - 1, 5))));
    }
    return leaf();
  }

 private:
  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }

  Concept leaf() {
    std::size_t i = uniform(0, atoms_.size() + nominals_.size() - 1);
    if (i < atoms_.size()) return Concept::name(atoms_[i]);
    return Concept::nominal(nominals_[i - atoms_.size()]);
  }

  Role role_of(std::size_t budget) {
    const std::string& name = roles_[uniform(0, roles_.size() - 1)];
    if (logic_.boolean_roles && budget >= 3 && uniform(0, 2) != 0) {
      std::size_t left = uniform(1, budget - 2);
      Role lhs = role_of(left);
      Role rhs = role_of(budget - 1 - lhs.size());
      switch (uniform(0, 2)) {
        case 0:
          return Role::union_of(lhs, rhs);
        case 1:
          return Role::intersection_of(lhs, rhs);
        default:
          return Role::difference_of(lhs, rhs);
      }
    }
    if (logic_.inverse && uniform(0, 1) == 1) return Role::inverse(name);
    return Role::atomic(name);
  }

  LogicSelector logic_;
  std::mt19937_64 rng_;
  std::vector<std::string> atoms_;
  std::vector<std::string> nominals_;
  std::vector<std::string> roles_;
};

}  // namespace

Concept random_concept(const Vocabulary& v, const LogicSelector& logic,
                       std::size_t max_rank, std::size_t size_budget,
                       std::uint64_t seed) {
  if (size_budget == 0) throw PreconditionError("size budget must be >= 1");
  Sampler s(v, logic, seed);
  if (!s.has_atoms()) {
    throw EmptyVocabularyError(
        "no concept name or nominal available to build a concept");
  }
  return s.concept_of(max_rank, size_budget);
}

}  // namespace dlgames
