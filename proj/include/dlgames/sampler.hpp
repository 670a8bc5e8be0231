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

// Seeded random concepts, restricted to the constructors a logic licenses.

#ifndef DLGAMES_SAMPLER_HPP_
#define DLGAMES_SAMPLER_HPP_

#include <cstddef>
#include <cstdint>

#include "dlgames/concept.hpp"
#include "dlgames/interpretation.hpp"
#include "dlgames/logic.hpp"

namespace dlgames {

// rank(result) <= max_rank and result.size() <= size_budget. Nominals are
// drawn only when O is selected, inverses only with I, role combinations
// only with b, Self restrictions only with Self. Throws
// EmptyVocabularyError when neither a concept name nor a usable nominal
// exists, PreconditionError when size_budget is 0.
Concept random_concept(const Vocabulary& v, const LogicSelector& logic,
                       std::size_t max_rank, std::size_t size_budget,
                       std::uint64_t seed);

}  // namespace dlgames

#endif  // DLGAMES_SAMPLER_HPP_
