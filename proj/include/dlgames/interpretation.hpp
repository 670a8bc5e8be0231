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

// Finite interpretations over a vocabulary of individual, concept and role
// names. Elements are opaque string identifiers. These are the carrier objects
// of the games, reductions and unravellings elsewhere in the library.

#ifndef DLGAMES_INTERPRETATION_HPP_
#define DLGAMES_INTERPRETATION_HPP_

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace dlgames {

using Element = std::string;
using Edge = std::pair<Element, Element>;

struct Vocabulary {
  std::set<std::string> individuals;
  std::set<std::string> concepts;
  std::set<std::string> roles;

  bool operator==(const Vocabulary&) const = default;
};

// Names occurring in more than one of the three sets.
std::vector<std::string> overlapping_names(const Vocabulary& v);

// True iff every name set of `sub` is contained in the matching set of `sup`.
bool is_subvocabulary(const Vocabulary& sub, const Vocabulary& sup);

// A finite interpretation. Vocabulary names without an entry in the extent
// maps are interpreted as empty; individuals outside the vocabulary are
// undefined. Fields are public so that malformed inputs can be represented
// and reported by validate_interpretation().
struct Interpretation {
  Vocabulary vocab;
  std::set<Element> domain;
  std::map<std::string, Element> individuals;
  std::map<std::string, std::set<Element>> concepts;
  std::map<std::string, std::set<Edge>> roles;

  bool operator==(const Interpretation&) const = default;

  // Extent lookups; a vocabulary name without an entry yields the empty set.
  const std::set<Element>& concept_extent(const std::string& name) const;
  const std::set<Edge>& role_extent(const std::string& name) const;
  bool has_edge(const std::string& role, const Element& from,
                const Element& to) const;

  // Adds the element to the domain and the name to the vocabulary as needed.
  void add_concept_member(const std::string& concept_name, const Element& e);
  void add_edge(const std::string& role, const Element& from,
                const Element& to);
};

struct PointedInterpretation {
  Interpretation interp;
  Element point;

  bool operator==(const PointedInterpretation&) const = default;
};

// One human-readable line per violated invariant; empty iff well formed.
std::vector<std::string> validate_interpretation(const Interpretation& i);
std::vector<std::string> validate_pointed(const PointedInterpretation& p);

// Throws InvalidInterpretationError carrying the first violation.
void require_valid(const Interpretation& i);
void require_valid(const PointedInterpretation& p);

// The `keep`-reduct: symbols outside `keep` are dropped, domain unchanged.
// Throws UnknownNameError when `keep` mentions names outside i.vocab.
Interpretation reduct(const Interpretation& i, const Vocabulary& keep);
PointedInterpretation reduct(const PointedInterpretation& p,
                             const Vocabulary& keep);

// Elements connected to `from` in the undirected Gaifman graph, including
// `from` itself. Throws UnknownElementError for a non-domain start.
std::set<Element> reachable(const Interpretation& i, const Element& from);

// Induced substructure on `keep` (which must be a subset of the domain).
// Individuals mapped outside `keep` become unmapped.
Interpretation restrict_to(const Interpretation& i,
                           const std::set<Element>& keep);

enum class MorphismKind { kHomomorphism, kStrongHomomorphism, kEmbedding };

struct MorphismWitness {
  std::map<Element, Element> mapping;
  MorphismKind kind = MorphismKind::kHomomorphism;
};

// True iff `h` is a point-preserving morphism of the requested kind.
// Homomorphisms preserve concept membership, role edges and individual
// names mapped on the source side; strong homomorphisms also reflect concept
// membership and role edges; embeddings are injective strong homomorphisms.
bool check_morphism(const MorphismWitness& h, const PointedInterpretation& src,
                    const PointedInterpretation& dst);

}  // namespace dlgames

#endif  // DLGAMES_INTERPRETATION_HPP_
