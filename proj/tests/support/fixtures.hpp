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

// The five named fixture pairs. Every fixture carries the concept name A
// with an empty extent so that characteristic concepts can spell "false".

#ifndef DLGAMES_TESTS_FIXTURES_HPP_
#define DLGAMES_TESTS_FIXTURES_HPP_

#include <string>
#include <utility>
#include <vector>

#include "dlgames/interpretation.hpp"

namespace dlgames::testing {

inline PointedInterpretation make_pointed(
    std::vector<Element> domain, Element point,
    std::vector<std::pair<std::string, Edge>> edges,
    std::vector<std::pair<std::string, Element>> members = {},
    std::vector<std::pair<std::string, Element>> individuals = {},
    Vocabulary vocab = {}) {
  PointedInterpretation p;
  p.interp.vocab = std::move(vocab);
  p.interp.domain.insert(domain.begin(), domain.end());
  for (const auto& [r, e] : edges) p.interp.add_edge(r, e.first, e.second);
  for (const auto& [c, e] : members) p.interp.add_concept_member(c, e);
  for (const auto& [o, e] : individuals) {
    p.interp.vocab.individuals.insert(o);
    p.interp.individuals[o] = e;
  }
  p.point = std::move(point);
  return p;
}

// Adds the names of `v` to p's vocabulary with empty extents.
inline PointedInterpretation with_vocabulary(PointedInterpretation p,
                                             const Vocabulary& v) {
  p.interp.vocab.concepts.insert(v.concepts.begin(), v.concepts.end());
  p.interp.vocab.roles.insert(v.roles.begin(), v.roles.end());
  p.interp.vocab.individuals.insert(v.individuals.begin(),
                                    v.individuals.end());
  return p;
}

inline Vocabulary vocabulary_a(std::vector<std::string> roles) {
  Vocabulary v;
  v.concepts = {"A"};
  v.roles.insert(roles.begin(), roles.end());
  return v;
}

inline PointedInterpretation path1() {
  return make_pointed({"d1", "e1"}, "d1", {{"r", {"d1", "e1"}}}, {}, {},
                      vocabulary_a({"r"}));
}

inline PointedInterpretation path2() {
  return make_pointed({"d2", "e2", "f2"}, "d2",
                      {{"r", {"d2", "e2"}}, {"r", {"e2", "f2"}}}, {}, {},
                      vocabulary_a({"r"}));
}

inline PointedInterpretation self_loop() {
  return make_pointed({"d"}, "d", {{"r", {"d", "d"}}}, {}, {},
                      vocabulary_a({"r"}));
}

inline PointedInterpretation two_cycle() {
  return make_pointed({"x", "y"}, "x", {{"r", {"x", "y"}}, {"r", {"y", "x"}}},
                      {}, {}, vocabulary_a({"r"}));
}

inline PointedInterpretation sink_left() {
  return make_pointed({"d", "e"}, "e", {{"r", {"d", "e"}}}, {}, {},
                      vocabulary_a({"r"}));
}

inline PointedInterpretation sink_right() {
  return make_pointed({"e'"}, "e'", {}, {}, {}, vocabulary_a({"r"}));
}

inline PointedInterpretation two_type_left() {
  return make_pointed({"d", "e"}, "d", {{"r", {"d", "e"}}, {"s", {"d", "e"}}},
                      {}, {}, vocabulary_a({"r", "s"}));
}

inline PointedInterpretation two_type_right() {
  return make_pointed({"d'", "e1'", "e2'"}, "d'",
                      {{"r", {"d'", "e1'"}}, {"s", {"d'", "e2'"}}}, {}, {},
                      vocabulary_a({"r", "s"}));
}

// The point reaches the element named o on the left and an unnamed element
// on the right. On the right o names a predecessor of the point, so both
// sides keep o reachable.
inline PointedInterpretation nominal_left() {
  return make_pointed({"p", "e"}, "p", {{"r", {"p", "e"}}}, {}, {{"o", "e"}},
                      vocabulary_a({"r"}));
}

inline PointedInterpretation nominal_right() {
  return make_pointed({"p'", "e'", "z"}, "p'",
                      {{"r", {"p'", "e'"}}, {"r", {"z", "p'"}}}, {},
                      {{"o", "z"}}, vocabulary_a({"r"}));
}

struct FixturePair {
  std::string name;
  PointedInterpretation left;
  PointedInterpretation right;
};

inline std::vector<FixturePair> fixture_pairs() {
  return {
      {"path-1/path-2", path1(), path2()},
      {"self-loop/2-cycle", self_loop(), two_cycle()},
      {"pointed-at-sink", sink_left(), sink_right()},
      {"2-type", two_type_left(), two_type_right()},
      {"nominal-harmony", nominal_left(), nominal_right()},
  };
}

}  // namespace dlgames::testing

#endif  // DLGAMES_TESTS_FIXTURES_HPP_
