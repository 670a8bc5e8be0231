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

// Seeded generators for small pointed interpretations, used by the property
// suites, the law checker and the benchmarks.

#ifndef DLGAMES_RANDOM_MODELS_HPP_
#define DLGAMES_RANDOM_MODELS_HPP_

#include <cstddef>
#include <random>
#include <utility>

#include "dlgames/interpretation.hpp"

namespace dlgames {

struct RandomModelSpec {
  std::size_t min_elements = 1;
  std::size_t max_elements = 4;
  double edge_probability = 0.3;
  double concept_probability = 0.4;
};

// Concept names A, B, C, ...; role names r, s, t, ...; individuals o, p, ...
Vocabulary standard_vocabulary(std::size_t concepts, std::size_t roles,
                               std::size_t individuals);

// A vocabulary with 1..max_concepts concept names, 1..max_roles role names
// and 0..max_individuals individuals.
Vocabulary random_vocabulary(std::size_t max_concepts, std::size_t max_roles,
                             std::size_t max_individuals,
                             std::mt19937_64& rng);

// Elements e0, e1, ...; the point is e0. Individuals are mapped to elements
// connected to the point in the Gaifman graph.
PointedInterpretation random_pointed(const Vocabulary& v,
                                     const RandomModelSpec& spec,
                                     std::mt19937_64& rng);

// Half the time two independent models; otherwise q is p with a few facts
// flipped, which yields many near-miss pairs.
std::pair<PointedInterpretation, PointedInterpretation> random_pair(
    const Vocabulary& v, const RandomModelSpec& spec, std::mt19937_64& rng);

// A homomorphic image of p: a random quotient of its domain with extra
// random facts added. `h` receives the quotient map.
PointedInterpretation random_image(const PointedInterpretation& p,
                                   std::size_t max_elements,
                                   double extra_probability,
                                   std::mt19937_64& rng,
                                   MorphismWitness* h = nullptr);

}  // namespace dlgames

#endif  // DLGAMES_RANDOM_MODELS_HPP_
