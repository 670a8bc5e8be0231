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

#include "dlgames/semantics.hpp"

#include <algorithm>
#include <iterator>

#include "dlgames/errors.hpp"

namespace dlgames {

std::set<Edge> role_extent(const Role& r, const Interpretation& i) {
  switch (r.kind()) {
    case Role::Kind::kAtomic:
      if (!i.vocab.roles.count(r.name())) {
        throw UnknownNameError("unknown role name " + r.name());
      }
      return i.role_extent(r.name());
    case Role::Kind::kInverse: {
      if (!i.vocab.roles.count(r.name())) {
        throw UnknownNameError("unknown role name " + r.name());
      }
      std::set<Edge> out;
      for (const auto& [a, b] : i.role_extent(r.name())) out.emplace(b, a);
      return out;
    }
    default:
      break;
  }
  auto lhs = role_extent(r.lhs(), i);
  auto rhs = role_extent(r.rhs(), i);
  std::set<Edge> out;
  auto sink = std::inserter(out, out.end());
  switch (r.kind()) {
    case Role::Kind::kUnion:
      std::set_union(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), sink);
      break;
    case Role::Kind::kIntersection:
      std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                            sink);
      break;
    default:
      std::set_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                          sink);
  }
  return out;
}

std::set<Element> extent(const Concept& c, const Interpretation& i) {
  switch (c.kind()) {
    case Concept::Kind::kName:
      if (!i.vocab.concepts.count(c.symbol())) {
        throw UnknownNameError("unknown concept name " + c.symbol());
      }
      return i.concept_extent(c.symbol());
    case Concept::Kind::kNominal: {
      if (!i.vocab.individuals.count(c.symbol())) {
        throw UnknownNameError("unknown individual name " + c.symbol());
      }
      auto it = i.individuals.find(c.symbol());
      if (it == i.individuals.end()) {
        throw UndefinedIndividualError("individual " + c.symbol() +
                                       " is not mapped");
      }
      return {it->second};
    }
    case Concept::Kind::kNot: {
      auto inner = extent(c.child(), i);
      std::set<Element> out;
      std::set_difference(i.domain.begin(), i.domain.end(), inner.begin(),
                          inner.end(), std::inserter(out, out.end()));
      return out;
    }
    case Concept::Kind::kAnd: {
      auto a = extent(c.child(), i);
      auto b = extent(c.rhs(), i);
      std::set<Element> out;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::inserter(out, out.end()));
      return out;
    }
    case Concept::Kind::kExists: {
      auto edges = role_extent(c.role(), i);
      auto filler = extent(c.child(), i);
      std::set<Element> out;
      for (const auto& [a, b] : edges) {
        if (filler.count(b)) out.insert(a);
      }
      return out;
    }
    case Concept::Kind::kExistsSelf: {
      std::set<Element> out;
      for (const auto& [a, b] : role_extent(c.role(), i)) {
        if (a == b) out.insert(a);
      }
      return out;
    }
  }
  return {};
}

bool satisfies(const PointedInterpretation& p, const Concept& c) {
  if (!p.interp.domain.count(p.point)) {
    throw UnknownElementError("point " + p.point + " is not in the domain");
  }
  return extent(c, p.interp).count(p.point) != 0;
}

std::vector<std::uint8_t> Evaluator::role_matrix(const Role& r) const {
  const std::size_t n = model_->size();
  std::vector<std::uint8_t> out(n * n, 0);
  switch (r.kind()) {
    case Role::Kind::kAtomic:
    case Role::Kind::kInverse: {
      auto idx = model_->find_role(r.name());
      if (!idx) throw UnknownNameError("unknown role name " + r.name());
      const bool inv = r.kind() == Role::Kind::kInverse;
      for (Index a = 0; a < n; ++a) {
        for (Index b : model_->successors(*idx, a)) {
          out[inv ? b * n + a : a * n + b] = 1;
        }
      }
      return out;
    }
    default:
      break;
  }
  auto lhs = role_matrix(r.lhs());
  auto rhs = role_matrix(r.rhs());
  for (std::size_t x = 0; x < n * n; ++x) {
    switch (r.kind()) {
      case Role::Kind::kUnion:
        out[x] = lhs[x] | rhs[x];
        break;
      case Role::Kind::kIntersection:
        out[x] = lhs[x] & rhs[x];
        break;
      default:
        out[x] = lhs[x] & !rhs[x];
    }
  }
  return out;
}

const std::vector<std::uint8_t>& Evaluator::extent(const Concept& c) {
  if (auto it = memo_.find(c.id()); it != memo_.end()) return it->second.bits;
  const std::size_t n = model_->size();
  std::vector<std::uint8_t> bits(n, 0);
  switch (c.kind()) {
    case Concept::Kind::kName: {
      auto idx = model_->find_concept(c.symbol());
      if (!idx) throw UnknownNameError("unknown concept name " + c.symbol());
      for (Index e = 0; e < n; ++e) bits[e] = model_->member(*idx, e);
      break;
    }
    case Concept::Kind::kNominal: {
      auto idx = model_->find_individual(c.symbol());
      if (!idx) {
        throw UnknownNameError("unknown individual name " + c.symbol());
      }
      auto e = model_->individual(*idx);
      if (!e) {
        throw UndefinedIndividualError("individual " + c.symbol() +
                                       " is not mapped");
      }
      bits[*e] = 1;
      break;
    }
    case Concept::Kind::kNot: {
      const auto& inner = extent(c.child());
      for (Index e = 0; e < n; ++e) bits[e] = !inner[e];
      break;
    }
    case Concept::Kind::kAnd: {
      const auto& a = extent(c.child());
      const auto& b = extent(c.rhs());
      for (Index e = 0; e < n; ++e) bits[e] = a[e] & b[e];
      break;
    }
    case Concept::Kind::kExists: {
      auto rel = role_matrix(c.role());
      const auto& filler = extent(c.child());
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n && !bits[a]; ++b) {
          bits[a] = rel[a * n + b] & filler[b];
        }
      }
      break;
    }
    case Concept::Kind::kExistsSelf: {
      auto rel = role_matrix(c.role());
      for (Index a = 0; a < n; ++a) bits[a] = rel[a * n + a];
      break;
    }
  }
  auto [it, inserted] = memo_.emplace(c.id(), Entry{c, std::move(bits)});
  return it->second.bits;
}

}  // namespace dlgames
