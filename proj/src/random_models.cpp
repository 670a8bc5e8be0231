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

#include "dlgames/random_models.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace dlgames {
namespace {

bool coin(double p, std::mt19937_64& rng) {
  return std::bernoulli_distribution(p)(rng);
}

std::size_t uniform(std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string element_name(std::size_t i) { return "e" + std::to_string(i); }

// Maps every individual to a random element connected to the point.
void name_reachable(PointedInterpretation& p, std::mt19937_64& rng) {
  p.interp.individuals.clear();
  auto pool = reachable(p.interp, p.point);
  std::vector<Element> candidates(pool.begin(), pool.end());
  for (const auto& o : p.interp.vocab.individuals) {
    p.interp.individuals[o] = candidates[uniform(0, candidates.size() - 1, rng)];
  }
}

}  // namespace

Vocabulary standard_vocabulary(std::size_t concepts, std::size_t roles,
                               std::size_t individuals) {
  static const char* kConcepts[] = {"A", "B", "C", "D", "E", "F", "G", "H"};
  static const char* kRoles[] = {"r", "s", "t", "u", "v", "w", "x", "y"};
  static const char* kIndividuals[] = {"o", "p", "q", "n", "m", "l", "k", "j"};
  Vocabulary v;
  for (std::size_t i = 0; i < std::min<std::size_t>(concepts, 8); ++i) {
    v.concepts.insert(kConcepts[i]);
  }
  for (std::size_t i = 0; i < std::min<std::size_t>(roles, 8); ++i) {
    v.roles.insert(kRoles[i]);
  }
  for (std::size_t i = 0; i < std::min<std::size_t>(individuals, 8); ++i) {
    v.individuals.insert(kIndividuals[i]);
  }
  return v;
}

Vocabulary random_vocabulary(std::size_t max_concepts, std::size_t max_roles,
                             std::size_t max_individuals,
                             std::mt19937_64& rng) {
  std::size_t c = uniform(1, std::max<std::size_t>(max_concepts, 1), rng);
  std::size_t r = uniform(1, std::max<std::size_t>(max_roles, 1), rng);
  std::size_t o = uniform(0, max_individuals, rng);
  return standard_vocabulary(c, r, o);
}

PointedInterpretation random_pointed(const Vocabulary& v,
                                     const RandomModelSpec& spec,
                                     std::mt19937_64& rng) {
  PointedInterpretation p;
  p.interp.vocab = v;
  const std::size_t n = uniform(std::max<std::size_t>(spec.min_elements, 1),
                                std::max(spec.max_elements, spec.min_elements),
                                rng);
  for (std::size_t i = 0; i < n; ++i) p.interp.domain.insert(element_name(i));
  p.point = element_name(0);
  for (const auto& c : v.concepts) {
    auto& ext = p.interp.concepts[c];
    for (const auto& e : p.interp.domain) {
      if (coin(spec.concept_probability, rng)) ext.insert(e);
    }
  }
  for (const auto& r : v.roles) {
    auto& ext = p.interp.roles[r];
    for (const auto& a : p.interp.domain) {
      for (const auto& b : p.interp.domain) {
        if (coin(spec.edge_probability, rng)) ext.emplace(a, b);
      }
    }
  }
  name_reachable(p, rng);
  return p;
}

std::pair<PointedInterpretation, PointedInterpretation> random_pair(
    const Vocabulary& v, const RandomModelSpec& spec, std::mt19937_64& rng) {
  PointedInterpretation p = random_pointed(v, spec, rng);
  if (coin(0.5, rng)) return {p, random_pointed(v, spec, rng)};

  PointedInterpretation q = p;
  std::vector<Element> dom(q.interp.domain.begin(), q.interp.domain.end());
  const std::size_t flips = uniform(1, 2, rng);
  for (std::size_t f = 0; f < flips; ++f) {
    const bool flip_edge = !v.roles.empty() && (v.concepts.empty() ||
                                                coin(0.6, rng));
    if (flip_edge) {
      auto it = v.roles.begin();
      std::advance(it, uniform(0, v.roles.size() - 1, rng));
      Edge e{dom[uniform(0, dom.size() - 1, rng)],
             dom[uniform(0, dom.size() - 1, rng)]};
      auto& ext = q.interp.roles[*it];
      if (!ext.erase(e)) ext.insert(e);
    } else if (!v.concepts.empty()) {
      auto it = v.concepts.begin();
      std::advance(it, uniform(0, v.concepts.size() - 1, rng));
      Element e = dom[uniform(0, dom.size() - 1, rng)];
      auto& ext = q.interp.concepts[*it];
      if (!ext.erase(e)) ext.insert(e);
    }
  }
  // Keep named elements connected to the point after the flips.
  auto pool = reachable(q.interp, q.point);
  for (auto& [o, e] : q.interp.individuals) {
    if (!pool.count(e)) {
      std::vector<Element> c(pool.begin(), pool.end());
      e = c[uniform(0, c.size() - 1, rng)];
    }
  }
  if (coin(0.3, rng)) name_reachable(q, rng);
  return {p, q};
}

PointedInterpretation random_image(const PointedInterpretation& p,
                                   std::size_t max_elements,
                                   double extra_probability,
                                   std::mt19937_64& rng, MorphismWitness* h) {
  const std::size_t m = uniform(1, std::max<std::size_t>(max_elements, 1), rng);
  std::map<Element, Element> quotient;
  for (const auto& e : p.interp.domain) {
    quotient[e] = element_name(uniform(0, m - 1, rng));
  }
  PointedInterpretation q;
  q.interp.vocab = p.interp.vocab;
  for (std::size_t i = 0; i < m; ++i) q.interp.domain.insert(element_name(i));
  q.point = quotient.at(p.point);
  for (const auto& [c, ext] : p.interp.concepts) {
    for (const auto& e : ext) q.interp.concepts[c].insert(quotient.at(e));
  }
  for (const auto& [r, ext] : p.interp.roles) {
    for (const auto& [a, b] : ext) {
      q.interp.roles[r].emplace(quotient.at(a), quotient.at(b));
    }
  }
  for (const auto& [o, e] : p.interp.individuals) {
    q.interp.individuals[o] = quotient.at(e);
  }
  for (const auto& c : q.interp.vocab.concepts) {
    for (const auto& e : q.interp.domain) {
      if (coin(extra_probability, rng)) q.interp.concepts[c].insert(e);
    }
  }
  for (const auto& r : q.interp.vocab.roles) {
    for (const auto& a : q.interp.domain) {
      for (const auto& b : q.interp.domain) {
        if (coin(extra_probability, rng)) q.interp.roles[r].emplace(a, b);
      }
    }
  }
  if (h) *h = MorphismWitness{quotient, MorphismKind::kHomomorphism};
  return q;
}

}  // namespace dlgames
