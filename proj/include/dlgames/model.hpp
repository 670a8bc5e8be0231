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

// Index-based compiled form of a pointed interpretation. Elements and names
// are numbered by their sorted order, so two models compiled from the same
// vocabulary agree on concept, role and individual indices.

#ifndef DLGAMES_MODEL_HPP_
#define DLGAMES_MODEL_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlgames/interpretation.hpp"

namespace dlgames {

using Index = std::size_t;

class Model {
 public:
  Model() = default;

  // Throws InvalidInterpretationError if `p` is malformed.
  explicit Model(const PointedInterpretation& p);

  std::size_t size() const { return elements_.size(); }
  Index point() const { return point_; }
  const std::string& element_name(Index e) const { return elements_[e]; }
  const std::vector<std::string>& element_names() const { return elements_; }

  const std::vector<std::string>& concept_names() const { return concepts_; }
  const std::vector<std::string>& role_names() const { return roles_; }
  const std::vector<std::string>& individual_names() const {
    return individuals_;
  }
  const Vocabulary& vocabulary() const { return vocab_; }

  std::optional<Index> find_element(const std::string& name) const;
  std::optional<Index> find_concept(const std::string& name) const;
  std::optional<Index> find_role(const std::string& name) const;
  std::optional<Index> find_individual(const std::string& name) const;

  // Throwing variants of the lookups above.
  Index element(const std::string& name) const;
  Index concept_index(const std::string& name) const;
  Index role(const std::string& name) const;

  bool member(Index concept_idx, Index e) const {
    return concept_member_[concept_idx][e] != 0;
  }
  bool edge(Index role_idx, Index from, Index to) const {
    return adjacency_[role_idx][from * size() + to] != 0;
  }
  const std::vector<Index>& successors(Index role_idx, Index e) const {
    return out_[role_idx][e];
  }
  const std::vector<Index>& predecessors(Index role_idx, Index e) const {
    return in_[role_idx][e];
  }
  std::optional<Index> individual(Index individual_idx) const {
    return individual_of_[individual_idx];
  }

  // Roles r with (from, to) in r, in index order.
  std::vector<Index> role_set(Index from, Index to) const;

 private:
  Vocabulary vocab_;
  std::vector<std::string> elements_;
  std::vector<std::string> concepts_;
  std::vector<std::string> roles_;
  std::vector<std::string> individuals_;
  std::vector<std::vector<std::uint8_t>> concept_member_;
  std::vector<std::vector<std::uint8_t>> adjacency_;
  std::vector<std::vector<std::vector<Index>>> out_;
  std::vector<std::vector<std::vector<Index>>> in_;
  std::vector<std::optional<Index>> individual_of_;
  Index point_ = 0;
};

// Element-index maps between models; throws when a name is missing.
std::vector<Index> to_index_map(const Model& src, const Model& dst,
                                const MorphismWitness& h);

// Model-level morphism test; `mapping[e]` is the image of source element e.
bool is_morphism(const Model& src, const Model& dst,
                 const std::vector<Index>& mapping, MorphismKind kind,
                 bool preserve_point = true);

}  // namespace dlgames

#endif  // DLGAMES_MODEL_HPP_
