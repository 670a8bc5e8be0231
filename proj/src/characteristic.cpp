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

#include "dlgames/characteristic.hpp"

#include <set>
#include <string>
#include <vector>

#include "dlgames/errors.hpp"
#include "dlgames/model.hpp"

namespace dlgames {

Concept characteristic_concept(const PointedInterpretation& p, std::size_t k) {
  Model m(p);
  if (m.concept_names().empty()) {
    throw PreconditionError(
        "characteristic concepts need at least one concept name");
  }
  const std::string& witness = m.concept_names().front();
  const std::size_t n = m.size();

  // layer[e] is the rank-j characteristic concept of (p.interp, e).
  std::vector<Concept> layer;
  layer.reserve(n);
  for (Index e = 0; e < n; ++e) {
    std::vector<Concept> literals;
    for (Index c = 0; c < m.concept_names().size(); ++c) {
      Concept a = Concept::name(m.concept_names()[c]);
      literals.push_back(m.member(c, e) ? a : Concept::negation(a));
    }
    layer.push_back(Concept::conjunction_of(literals, witness));
  }
  const std::vector<Concept> profile = layer;

  for (std::size_t j = 1; j <= k; ++j) {
    std::vector<Concept> next;
    next.reserve(n);
    for (Index e = 0; e < n; ++e) {
      std::vector<Concept> parts{profile[e]};
      for (Index r = 0; r < m.role_names().size(); ++r) {
        Role role = Role::atomic(m.role_names()[r]);
        std::set<std::string> seen;
        std::vector<Concept> negated;
        for (Index succ : m.successors(r, e)) {
          const Concept& cls = layer[succ];
          if (!seen.insert(print(cls)).second) continue;
          parts.push_back(Concept::exists(role, cls));
          negated.push_back(Concept::negation(cls));
        }
        // No r-successor lies outside the classes listed above.
        parts.push_back(Concept::negation(
            Concept::exists(role, Concept::conjunction_of(negated, witness))));
      }
      next.push_back(Concept::conjunction_of(parts, witness));
    }
    layer = std::move(next);
  }
  return layer[m.point()];
}

}  // namespace dlgames
