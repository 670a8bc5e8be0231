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

// Model transformations that trade a logic extension for extra vocabulary:
// after tau_phi(., logic) the plain ALC game on the images has the same
// outcome as the logic's game on the inputs.
//
// Generated names carry a reserved '@' prefix:
//   @self:r          concept, elements with an r-self-loop
//   @inv:r           role, the converse of r
//   @b:{r,s}         role, pairs whose role set is exactly {r, s}
//   @nom:o:r         concept, trampoline for an r-edge into o
//   @is:o            concept, the copy of the element named o
//   @dist:o          role, the dummy path from the point towards o
// and elements @tramp:x:o:r, @dummy:o:i and @copy:root:x.

#ifndef DLGAMES_REDUCTIONS_HPP_
#define DLGAMES_REDUCTIONS_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "dlgames/interpretation.hpp"
#include "dlgames/logic.hpp"

namespace dlgames {

enum class ReductionTag { kSelf, kInverse, kBoolean, kNominal };

const char* to_string(ReductionTag t);

// Knobs of the nominal reduction. The defaults give a construction whose
// ALC game agrees with the ALCO game. Turning both off measures distances in
// the undirected Gaifman graph and leaves named copies unmarked; that
// variant disagrees with the ALCO game when a nominal is reachable only
// against the edge direction, or when the point itself is named.
struct NominalOptions {
  // Dummy path length is the directed distance from the point; nominals
  // reachable only against edge direction get a dummy that loops forever.
  bool forward_distance = true;
  // The copy of o's element carries the concept @is:o.
  bool mark_named = true;
};

struct GeneratedName {
  std::string kind;   // "concept", "role" or "element"
  std::string name;
  std::string stage;  // "Self", "I", "b" or "O"
};

struct ReductionReport {
  Vocabulary input;
  Vocabulary output;
  std::size_t input_elements = 0;
  std::size_t output_elements = 0;
  std::vector<std::string> stages;
  std::vector<GeneratedName> manifest;

  long long element_delta() const {
    return static_cast<long long>(output_elements) -
           static_cast<long long>(input_elements);
  }
};

// Each stage throws NameCollisionError when a name it would generate is
// already in use. Reports, when given, are appended to.
PointedInterpretation tau_self(const PointedInterpretation& p,
                               ReductionReport* report = nullptr);
PointedInterpretation tau_inv(const PointedInterpretation& p,
                              ReductionReport* report = nullptr);
// Throws PreconditionError for more than 16 role names.
PointedInterpretation tau_b(const PointedInterpretation& p,
                            ReductionReport* report = nullptr);
// Throws UnreachableNominalError when a named element is not connected to
// the point in the Gaifman graph.
PointedInterpretation tau_o(const PointedInterpretation& p,
                            const NominalOptions& options = {},
                            ReductionReport* report = nullptr);

// Applies the selected stages in the order Self, I, b, O. Input vocabulary
// names starting with '@' are rejected with NameCollisionError.
PointedInterpretation tau_phi(const PointedInterpretation& p,
                              const LogicSelector& logic,
                              const NominalOptions& options = {},
                              ReductionReport* report = nullptr);

// Vocabulary produced by a single stage.
Vocabulary vocab_map(const Vocabulary& v, ReductionTag tag,
                     const NominalOptions& options = {});
// Vocabulary produced by tau_phi.
Vocabulary vocab_map(const Vocabulary& v, const LogicSelector& logic,
                     const NominalOptions& options = {});

// Generated-name helpers, exposed for tests and reports.
std::string self_concept_name(const std::string& role);
std::string inverse_role_name(const std::string& role);
std::string subset_role_name(const std::vector<std::string>& sorted_roles);
std::string trampoline_concept_name(const std::string& individual,
                                    const std::string& role);
std::string marker_concept_name(const std::string& individual);
std::string distance_role_name(const std::string& individual);

}  // namespace dlgames

#endif  // DLGAMES_REDUCTIONS_HPP_
