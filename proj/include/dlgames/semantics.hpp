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

// Set-theoretic semantics of concepts and roles. The free functions work on
// Interpretation values directly; Evaluator is the compiled, memoising
// variant used in bulk sampling.

#ifndef DLGAMES_SEMANTICS_HPP_
#define DLGAMES_SEMANTICS_HPP_

#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "dlgames/concept.hpp"
#include "dlgames/interpretation.hpp"
#include "dlgames/model.hpp"

namespace dlgames {

// Throws UnknownNameError for role names outside i.vocab.
std::set<Edge> role_extent(const Role& r, const Interpretation& i);

// Throws UnknownNameError for names outside i.vocab and
// UndefinedIndividualError for a nominal whose individual is unmapped.
std::set<Element> extent(const Concept& c, const Interpretation& i);

bool satisfies(const PointedInterpretation& p, const Concept& c);

class Evaluator {
 public:
  explicit Evaluator(const Model& m) : model_(&m) {}

  // Row-major n*n membership matrix of the role.
  std::vector<std::uint8_t> role_matrix(const Role& r) const;
  // Membership vector indexed by element; memoised per shared AST node.
  const std::vector<std::uint8_t>& extent(const Concept& c);
  bool holds(const Concept& c, Index e) { return extent(c)[e] != 0; }
  bool holds_at_point(const Concept& c) { return holds(c, model_->point()); }

 private:
  struct Entry {
    Concept keep_alive;
    std::vector<std::uint8_t> bits;
  };
  const Model* model_;
  std::unordered_map<const void*, Entry> memo_;
};

}  // namespace dlgames

#endif  // DLGAMES_SEMANTICS_HPP_
