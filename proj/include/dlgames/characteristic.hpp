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

// Rank-k characteristic concepts for plain ALC. A pointed interpretation q
// over the same vocabulary satisfies characteristic_concept(p, k) iff
// Duplicator survives k rounds of the ALC game on (p, q).

#ifndef DLGAMES_CHARACTERISTIC_HPP_
#define DLGAMES_CHARACTERISTIC_HPP_

#include <cstddef>

#include "dlgames/concept.hpp"
#include "dlgames/interpretation.hpp"

namespace dlgames {

// Throws PreconditionError when the vocabulary has no concept name, since
// the empty disjunction is spelled A & !A.
Concept characteristic_concept(const PointedInterpretation& p, std::size_t k);

}  // namespace dlgames

#endif  // DLGAMES_CHARACTERISTIC_HPP_
