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

#include "dlgames/model.hpp"

#include <algorithm>
#include <set>

#include "dlgames/errors.hpp"

namespace dlgames {
namespace {

template <typename T>
std::optional<Index> find_sorted(const std::vector<T>& v, const T& key) {
  auto it = std::lower_bound(v.begin(), v.end(), key);
  if (it == v.end() || *it != key) return std::nullopt;
  return static_cast<Index>(it - v.begin());
}

}  // namespace

Model::Model(const PointedInterpretation& p) {
  require_valid(p);
  const Interpretation& i = p.interp;
  vocab_ = i.vocab;
  elements_.assign(i.domain.begin(), i.domain.end());
  concepts_.assign(i.vocab.concepts.begin(), i.vocab.concepts.end());
  roles_.assign(i.vocab.roles.begin(), i.vocab.roles.end());
  individuals_.assign(i.vocab.individuals.begin(), i.vocab.individuals.end());
  const std::size_t n = elements_.size();

  concept_member_.assign(concepts_.size(), std::vector<std::uint8_t>(n, 0));
  for (Index c = 0; c < concepts_.size(); ++c) {
    for (const auto& e : i.concept_extent(concepts_[c])) {
      concept_member_[c][element(e)] = 1;
    }
  }

  adjacency_.assign(roles_.size(), std::vector<std::uint8_t>(n * n, 0));
  out_.assign(roles_.size(), std::vector<std::vector<Index>>(n));
  in_.assign(roles_.size(), std::vector<std::vector<Index>>(n));
  for (Index r = 0; r < roles_.size(); ++r) {
    for (const auto& [a, b] : i.role_extent(roles_[r])) {
      Index x = element(a);
      Index y = element(b);
      adjacency_[r][x * n + y] = 1;
    }
    // Sorted adjacency lists come from scanning the matrix in order.
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        if (adjacency_[r][x * n + y]) {
          out_[r][x].push_back(y);
          in_[r][y].push_back(x);
        }
      }
    }
  }

  individual_of_.assign(individuals_.size(), std::nullopt);
  for (Index o = 0; o < individuals_.size(); ++o) {
    auto it = i.individuals.find(individuals_[o]);
    if (it != i.individuals.end()) individual_of_[o] = element(it->second);
  }
  point_ = element(p.point);
}

std::optional<Index> Model::find_element(const std::string& name) const {
  return find_sorted(elements_, name);
}
std::optional<Index> Model::find_concept(const std::string& name) const {
  return find_sorted(concepts_, name);
}
std::optional<Index> Model::find_role(const std::string& name) const {
  return find_sorted(roles_, name);
}
std::optional<Index> Model::find_individual(const std::string& name) const {
  return find_sorted(individuals_, name);
}

Index Model::element(const std::string& name) const {
  auto e = find_element(name);
  if (!e) throw UnknownElementError("unknown element " + name);
  return *e;
}

Index Model::concept_index(const std::string& name) const {
  auto c = find_concept(name);
  if (!c) throw UnknownNameError("unknown concept name " + name);
  return *c;
}

Index Model::role(const std::string& name) const {
  auto r = find_role(name);
  if (!r) throw UnknownNameError("unknown role name " + name);
  return *r;
}

std::vector<Index> Model::role_set(Index from, Index to) const {
  std::vector<Index> out;
  for (Index r = 0; r < roles_.size(); ++r) {
    if (edge(r, from, to)) out.push_back(r);
  }
  return out;
}

std::vector<Index> to_index_map(const Model& src, const Model& dst,
                                const MorphismWitness& h) {
  std::vector<Index> map(src.size());
  for (Index e = 0; e < src.size(); ++e) {
    auto it = h.mapping.find(src.element_name(e));
    if (it == h.mapping.end()) {
      throw InvalidMorphismError("mapping is not total: missing " +
                                 src.element_name(e));
    }
    map[e] = dst.element(it->second);
  }
  return map;
}

bool is_morphism(const Model& src, const Model& dst,
                 const std::vector<Index>& mapping, MorphismKind kind,
                 bool preserve_point) {
  if (mapping.size() != src.size()) return false;
  for (Index m : mapping) {
    if (m >= dst.size()) return false;
  }
  if (preserve_point && mapping[src.point()] != dst.point()) return false;
  const bool strong = kind != MorphismKind::kHomomorphism;

  for (Index c = 0; c < src.concept_names().size(); ++c) {
    auto dc = dst.find_concept(src.concept_names()[c]);
    for (Index e = 0; e < src.size(); ++e) {
      bool in_dst = dc && dst.member(*dc, mapping[e]);
      if (src.member(c, e) && !in_dst) return false;
      if (strong && in_dst && !src.member(c, e)) return false;
    }
  }
  for (Index r = 0; r < src.role_names().size(); ++r) {
    auto dr = dst.find_role(src.role_names()[r]);
    for (Index a = 0; a < src.size(); ++a) {
      for (Index b : src.successors(r, a)) {
        if (!dr || !dst.edge(*dr, mapping[a], mapping[b])) return false;
      }
    }
    if (!strong || !dr) continue;
    for (Index a = 0; a < src.size(); ++a) {
      for (Index b = 0; b < src.size(); ++b) {
        if (dst.edge(*dr, mapping[a], mapping[b]) && !src.edge(r, a, b)) {
          return false;
        }
      }
    }
  }
  for (Index o = 0; o < src.individual_names().size(); ++o) {
    auto se = src.individual(o);
    if (!se) continue;
    auto doi = dst.find_individual(src.individual_names()[o]);
    if (!doi || dst.individual(*doi) != mapping[*se]) return false;
  }
  if (kind == MorphismKind::kEmbedding) {
    std::set<Index> image(mapping.begin(), mapping.end());
    if (image.size() != mapping.size()) return false;
  }
  return true;
}

}  // namespace dlgames
