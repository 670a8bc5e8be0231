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

#include <random>

#include "doctest.h"
#include "dlgames/bisim.hpp"
#include "dlgames/bnf.hpp"
#include "dlgames/errors.hpp"
#include "dlgames/random_models.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace dlgames;

namespace {

LogicSelector L(const char* s) { return LogicSelector::parse(s); }

// Node of t whose path name is `name`.
Index node_named(const UnravelTree& t, const std::string& name) {
  for (Index i = 0; i < t.size(); ++i) {
    if (t.path_name(i) == name) return i;
  }
  FAIL("no node " << name);
  return 0;
}

}  // namespace

TEST_CASE("roots of trees in harmony are in W") {
  auto a = unravel(testing::path1(), 2);
  auto b = unravel(testing::path2(), 2);
  CHECK(w_membership(a, 0, b, 0));
  auto l = unravel(testing::nominal_left(), 1);
  auto r = unravel(testing::nominal_right(), 1);
  CHECK(w_membership(l, 0, r, 0));
}

TEST_CASE("branches with different role labels are not in W") {
  auto a = unravel(testing::two_type_left(), 1);
  auto b = unravel(testing::two_type_right(), 1);
  CHECK(w_membership(a, node_named(a, "d/r/e"), b, node_named(b, "d'/r/e1'")));
  CHECK_FALSE(
      w_membership(a, node_named(a, "d/r/e"), b, node_named(b, "d'/s/e2'")));
  CHECK_FALSE(w_membership(a, 0, b, node_named(b, "d'/r/e1'")));
}

TEST_CASE("concept names are compared along the whole branch") {
  using testing::make_pointed;
  auto v = testing::vocabulary_a({"r"});
  auto p = make_pointed({"a", "b"}, "a", {{"r", {"a", "b"}}}, {{"A", "a"}}, {},
                        v);
  auto q = make_pointed({"a", "b"}, "a", {{"r", {"a", "b"}}}, {{"A", "b"}}, {},
                        v);
  auto tp = unravel(p, 1);
  auto tq = unravel(q, 1);
  CHECK_FALSE(w_membership(tp, 0, tq, 0));
  CHECK_FALSE(w_membership(tp, 1, tq, 1));
}

TEST_CASE("W membership does not decide the game") {
  auto a = unravel(testing::path1(), 2);
  auto b = unravel(testing::path2(), 2);
  CHECK(w_membership(a, node_named(a, "d1/r/e1"), b, node_named(b, "d2/r/e2")));
  CHECK_FALSE(bnf_solve(a, b).duplicator_wins);
  auto shallow_a = unravel(testing::path1(), 1);
  auto shallow_b = unravel(testing::path2(), 1);
  CHECK(bnf_solve(shallow_a, shallow_b).duplicator_wins);
}

TEST_CASE("W agrees with its definition by embedded labelled paths") {
  std::mt19937_64 rng(71);
  for (int n = 0; n < 40; ++n) {
    Vocabulary v = random_vocabulary(1, 2, 0, rng);
    RandomModelSpec spec;
    spec.max_elements = 3;
    auto [p, q] = random_pair(v, spec, rng);
    for (std::size_t k = 0; k <= 2; ++k) {
      auto tp = unravel(p, k);
      auto tq = unravel(q, k);
      if (tp.size() > 12 || tq.size() > 12) continue;
      auto expected = testing::oracle_w_literal(tp, tq, k);
      for (Index s = 0; s < tp.size(); ++s) {
        for (Index t = 0; t < tq.size(); ++t) {
          INFO(tp.path_name(s) << " vs " << tq.path_name(t));
          CHECK(w_membership(tp, s, tq, t) == expected[s][t]);
        }
      }
    }
  }
}

TEST_CASE("W rejects mismatched inputs") {
  auto a = unravel(testing::path2(), 1);
  auto b = unravel(testing::two_type_right(), 1);
  CHECK_THROWS_AS(w_membership(a, 0, b, 0), VocabularyMismatchError);
  CHECK_THROWS_AS(w_membership(a, 0, a, 99), PreconditionError);
}

TEST_CASE("the game on identical inputs is a Duplicator win") {
  for (const auto& f : testing::fixture_pairs()) {
    for (std::size_t k = 0; k <= 2; ++k) {
      CHECK(bnf_game(f.left, f.left, {}, k).duplicator_wins);
      CHECK(bnf_game(f.right, f.right, L("Self,I,b,O"), k).duplicator_wins);
    }
  }
}

TEST_CASE("the game reports tree sizes") {
  auto r = bnf_game(testing::path1(), testing::path2(), {}, 2);
  CHECK_FALSE(r.duplicator_wins);
  CHECK(r.left_nodes == 2);
  CHECK(r.right_nodes == 3);
  CHECK(r.positions_explored > 0);
}

TEST_CASE("the game sees self-loops only under Self") {
  auto loop = testing::self_loop();
  auto cycle = testing::two_cycle();
  CHECK(bnf_game(loop, cycle, {}, 1).duplicator_wins);
  CHECK_FALSE(bnf_game(loop, cycle, L("Self"), 1).duplicator_wins);
}

TEST_CASE("the game agrees with the bisimulation solver on fixtures") {
  for (const auto& f : testing::fixture_pairs()) {
    for (const auto& logic : LogicSelector::all()) {
      for (std::size_t k = 0; k <= 2; ++k) {
        INFO(f.name << " logic={" << logic.to_string() << "} k=" << k);
        CHECK(bnf_game(f.left, f.right, logic, k).duplicator_wins ==
              stratified_bisim(f.left, f.right, logic, k).duplicator_wins());
      }
    }
  }
}
