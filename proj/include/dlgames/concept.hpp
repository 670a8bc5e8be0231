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

// Abstract syntax for ALC_Self I b O concepts and simple roles. Nodes are
// immutable and shared, so copying a Concept or Role is cheap.

#ifndef DLGAMES_CONCEPT_HPP_
#define DLGAMES_CONCEPT_HPP_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "dlgames/logic.hpp"

namespace dlgames {

class Role {
 public:
  enum class Kind { kAtomic, kInverse, kUnion, kIntersection, kDifference };

  static Role atomic(std::string name);
  // Inverse is only defined on role names.
  static Role inverse(std::string name);
  static Role union_of(Role lhs, Role rhs);
  static Role intersection_of(Role lhs, Role rhs);
  static Role difference_of(Role lhs, Role rhs);

  Kind kind() const;
  bool is_binary() const;
  // Role name; atomic and inverse roles only.
  const std::string& name() const;
  // Operands; binary roles only.
  const Role& lhs() const;
  const Role& rhs() const;

  std::size_t size() const;
  // Smallest logic whose role grammar contains this role.
  LogicSelector required_logic() const;

  friend bool operator==(const Role& a, const Role& b);

 private:
  struct Node;
  explicit Role(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

class Concept {
 public:
  enum class Kind { kName, kNominal, kNot, kAnd, kExists, kExistsSelf };

  static Concept name(std::string concept_name);
  static Concept nominal(std::string individual);
  static Concept negation(Concept c);
  static Concept conjunction(Concept lhs, Concept rhs);
  static Concept exists(Role role, Concept filler);
  static Concept exists_self(Role role);

  // Macros over the grammar: a ⊔ b = ¬(¬a ⊓ ¬b); bottom(A) = A ⊓ ¬A;
  // top(A) = ¬bottom(A). Empty conjunction / disjunction of `parts` become
  // top(witness) / bottom(witness).
  static Concept disjunction(Concept lhs, Concept rhs);
  static Concept bottom(const std::string& witness);
  static Concept top(const std::string& witness);
  static Concept conjunction_of(const std::vector<Concept>& parts,
                                const std::string& witness);
  static Concept disjunction_of(const std::vector<Concept>& parts,
                                const std::string& witness);

  Kind kind() const;
  // Concept name (kName) or individual name (kNominal).
  const std::string& symbol() const;
  // Operand of kNot / filler of kExists; lhs of kAnd.
  const Concept& child() const;
  const Concept& rhs() const;
  // Role of kExists / kExistsSelf.
  const Role& role() const;

  // Number of concept and role nodes.
  std::size_t size() const;
  // Smallest logic whose grammar contains this concept.
  LogicSelector required_logic() const;
  // Identity of the shared node; used for memoising evaluation.
  const void* id() const { return node_.get(); }

  friend bool operator==(const Concept& a, const Concept& b);

 private:
  struct Node;
  explicit Concept(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Maximal nesting depth of existential restrictions. ∃s.Self counts as
// rank 0: it inspects the current element only, like a concept name.
std::size_t rank(const Concept& c);

// Canonical concrete syntax; parse(print(c)) == c.
std::string print(const Concept& c);
std::string print(const Role& r);

}  // namespace dlgames

#endif  // DLGAMES_CONCEPT_HPP_
