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

#include "dlgames/concept.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "dlgames/errors.hpp"

namespace dlgames {

struct Role::Node {
  Kind kind;
  std::string name;
  std::optional<Role> lhs;
  std::optional<Role> rhs;
};

struct Concept::Node {
  Kind kind;
  std::string symbol;
  std::optional<Concept> lhs;
  std::optional<Concept> rhs;
  std::optional<Role> role;
};

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  for (char ch : s) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) {
      return false;
    }
  }
  return s != "exists" && s != "Self";
}

std::string quote(const std::string& name) {
  return is_identifier(name) ? name : "`" + name + "`";
}

}  // namespace

// ---- Role -------------------------------------------------------------

Role Role::atomic(std::string name) {
  return Role(std::make_shared<const Node>(
      Node{Kind::kAtomic, std::move(name), std::nullopt, std::nullopt}));
}

Role Role::inverse(std::string name) {
  return Role(std::make_shared<const Node>(
      Node{Kind::kInverse, std::move(name), std::nullopt, std::nullopt}));
}

Role Role::union_of(Role lhs, Role rhs) {
  return Role(std::make_shared<const Node>(
      Node{Kind::kUnion, {}, std::move(lhs), std::move(rhs)}));
}

Role Role::intersection_of(Role lhs, Role rhs) {
  return Role(std::make_shared<const Node>(Node{
      Kind::kIntersection, {}, std::move(lhs), std::move(rhs)}));
}

Role Role::difference_of(Role lhs, Role rhs) {
  return Role(std::make_shared<const Node>(Node{
      Kind::kDifference, {}, std::move(lhs), std::move(rhs)}));
}

Role::Kind Role::kind() const { return node_->kind; }

bool Role::is_binary() const {
  return kind() != Kind::kAtomic && kind() != Kind::kInverse;
}

const std::string& Role::name() const {
  if (is_binary()) throw PreconditionError("compound role has no name");
  return node_->name;
}

const Role& Role::lhs() const {
  if (!is_binary()) throw PreconditionError("role has no operands");
  return *node_->lhs;
}

const Role& Role::rhs() const {
  if (!is_binary()) throw PreconditionError("role has no operands");
  return *node_->rhs;
}

std::size_t Role::size() const {
  return is_binary() ? 1 + lhs().size() + rhs().size() : 1;
}

LogicSelector Role::required_logic() const {
  LogicSelector out;
  switch (kind()) {
    case Kind::kAtomic:
      break;
    case Kind::kInverse:
      out.inverse = true;
      break;
    default: {
      auto a = lhs().required_logic();
      auto b = rhs().required_logic();
      out = LogicSelector::from_mask(a.mask() | b.mask());
      out.boolean_roles = true;
    }
  }
  return out;
}

bool operator==(const Role& a, const Role& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  if (!a.is_binary()) return a.name() == b.name();
  return a.lhs() == b.lhs() && a.rhs() == b.rhs();
}

// ---- Concept ----------------------------------------------------------

Concept Concept::name(std::string concept_name) {
  return Concept(std::make_shared<const Node>(
      Node{Kind::kName, std::move(concept_name), std::nullopt, std::nullopt,
           std::nullopt}));
}

Concept Concept::nominal(std::string individual) {
  return Concept(std::make_shared<const Node>(
      Node{Kind::kNominal, std::move(individual), std::nullopt, std::nullopt,
           std::nullopt}));
}

Concept Concept::negation(Concept c) {
  return Concept(std::make_shared<const Node>(
      Node{Kind::kNot, {}, std::move(c), std::nullopt, std::nullopt}));
}

Concept Concept::conjunction(Concept lhs, Concept rhs) {
  return Concept(std::make_shared<const Node>(Node{
      Kind::kAnd, {}, std::move(lhs), std::move(rhs), std::nullopt}));
}

Concept Concept::exists(Role role, Concept filler) {
  return Concept(std::make_shared<const Node>(Node{
      Kind::kExists, {}, std::move(filler), std::nullopt, std::move(role)}));
}

Concept Concept::exists_self(Role role) {
  return Concept(std::make_shared<const Node>(
      Node{Kind::kExistsSelf, {}, std::nullopt, std::nullopt, std::move(role)}));
}

Concept Concept::disjunction(Concept lhs, Concept rhs) {
  return negation(conjunction(negation(std::move(lhs)),
                              negation(std::move(rhs))));
}

Concept Concept::bottom(const std::string& witness) {
  return conjunction(name(witness), negation(name(witness)));
}

Concept Concept::top(const std::string& witness) {
  return negation(bottom(witness));
}

Concept Concept::conjunction_of(const std::vector<Concept>& parts,
                                const std::string& witness) {
  if (parts.empty()) return top(witness);
  Concept out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out = conjunction(out, parts[i]);
  }
  return out;
}

Concept Concept::disjunction_of(const std::vector<Concept>& parts,
                                const std::string& witness) {
  if (parts.empty()) return bottom(witness);
  if (parts.size() == 1) return parts.front();
  std::vector<Concept> negated;
  negated.reserve(parts.size());
  for (const auto& p : parts) negated.push_back(negation(p));
  return negation(conjunction_of(negated, witness));
}

Concept::Kind Concept::kind() const { return node_->kind; }

const std::string& Concept::symbol() const {
  if (kind() != Kind::kName && kind() != Kind::kNominal) {
    throw PreconditionError("concept has no symbol");
  }
  return node_->symbol;
}

const Concept& Concept::child() const {
  if (!node_->lhs) throw PreconditionError("concept has no child");
  return *node_->lhs;
}

const Concept& Concept::rhs() const {
  if (!node_->rhs) throw PreconditionError("concept has no right operand");
  return *node_->rhs;
}

const Role& Concept::role() const {
  if (!node_->role) throw PreconditionError("concept has no role");
  return *node_->role;
}

std::size_t Concept::size() const {
  switch (kind()) {
    case Kind::kName:
    case Kind::kNominal:
      return 1;
    case Kind::kNot:
      return 1 + child().size();
    case Kind::kAnd:
      return 1 + child().size() + rhs().size();
    case Kind::kExists:
      return 1 + role().size() + child().size();
    case Kind::kExistsSelf:
      return 1 + role().size();
  }
  return 1;
}

LogicSelector Concept::required_logic() const {
  switch (kind()) {
    case Kind::kName:
      return {};
    case Kind::kNominal: {
      LogicSelector out;
      out.nominals = true;
      return out;
    }
    case Kind::kNot:
      return child().required_logic();
    case Kind::kAnd:
      return LogicSelector::from_mask(child().required_logic().mask() |
                                      rhs().required_logic().mask());
    case Kind::kExists:
      return LogicSelector::from_mask(role().required_logic().mask() |
                                      child().required_logic().mask());
    case Kind::kExistsSelf: {
      LogicSelector out = role().required_logic();
      out.self = true;
      return out;
    }
  }
  return {};
}

bool operator==(const Concept& a, const Concept& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Concept::Kind::kName:
    case Concept::Kind::kNominal:
      return a.symbol() == b.symbol();
    case Concept::Kind::kNot:
      return a.child() == b.child();
    case Concept::Kind::kAnd:
      return a.child() == b.child() && a.rhs() == b.rhs();
    case Concept::Kind::kExists:
      return a.role() == b.role() && a.child() == b.child();
    case Concept::Kind::kExistsSelf:
      return a.role() == b.role();
  }
  return false;
}

std::size_t rank(const Concept& c) {
  switch (c.kind()) {
    case Concept::Kind::kName:
    case Concept::Kind::kNominal:
    case Concept::Kind::kExistsSelf:
      return 0;
    case Concept::Kind::kNot:
      return rank(c.child());
    case Concept::Kind::kAnd:
      return std::max(rank(c.child()), rank(c.rhs()));
    case Concept::Kind::kExists:
      return 1 + rank(c.child());
  }
  return 0;
}

// ---- printing ---------------------------------------------------------

namespace {

char op_symbol(Role::Kind k) {
  switch (k) {
    case Role::Kind::kUnion:
      return '|';
    case Role::Kind::kIntersection:
      return '&';
    default:
      return '\\';
  }
}

void print_role(const Role& r, std::string& out);

void print_role_operand(const Role& r, Role::Kind parent, bool right,
                        std::string& out) {
  // Left operands may chain with the same operator; everything else binary
  // needs parentheses.
  bool parens = r.is_binary() && (right || r.kind() != parent);
  if (parens) out += '(';
  print_role(r, out);
  if (parens) out += ')';
}

void print_role(const Role& r, std::string& out) {
  switch (r.kind()) {
    case Role::Kind::kAtomic:
      out += quote(r.name());
      return;
    case Role::Kind::kInverse:
      out += quote(r.name());
      out += '-';
      return;
    default:
      print_role_operand(r.lhs(), r.kind(), false, out);
      out += ' ';
      out += op_symbol(r.kind());
      out += ' ';
      print_role_operand(r.rhs(), r.kind(), true, out);
  }
}

void print_concept(const Concept& c, std::string& out);

void print_unary(const Concept& c, std::string& out) {
  if (c.kind() == Concept::Kind::kAnd) {
    out += '(';
    print_concept(c, out);
    out += ')';
  } else {
    print_concept(c, out);
  }
}

void print_concept(const Concept& c, std::string& out) {
  switch (c.kind()) {
    case Concept::Kind::kName:
      out += quote(c.symbol());
      return;
    case Concept::Kind::kNominal:
      out += '{';
      out += quote(c.symbol());
      out += '}';
      return;
    case Concept::Kind::kNot:
      out += '!';
      print_unary(c.child(), out);
      return;
    case Concept::Kind::kAnd:
      print_concept(c.child(), out);
      out += " & ";
      print_unary(c.rhs(), out);
      return;
    case Concept::Kind::kExists:
      out += "exists ";
      print_role(c.role(), out);
      out += " . ";
      print_unary(c.child(), out);
      return;
    case Concept::Kind::kExistsSelf:
      out += "exists ";
      print_role(c.role(), out);
      out += " . Self";
      return;
  }
}

}  // namespace

std::string print(const Concept& c) {
  std::string out;
  print_concept(c, out);
  return out;
}

std::string print(const Role& r) {
  std::string out;
  print_role(r, out);
  return out;
}

}  // namespace dlgames
