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

#include <map>
#include <queue>
#include <random>

#include "doctest.h"
#include "dlgames/bisim.hpp"
#include "dlgames/errors.hpp"
#include "dlgames/random_models.hpp"
#include "dlgames/reductions.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace dlgames;
using testing::make_pointed;

namespace {

LogicSelector L(const char* s) { return LogicSelector::parse(s); }

bool alc_wins(const PointedInterpretation& p, const PointedInterpretation& q,
              std::size_t k) {
  return stratified_bisim(p, q, {}, k).duplicator_wins();
}

const NominalOptions kLiteral{false, false};

// Forward breadth-first distances from `from`.
std::map<Element, std::size_t> forward_distances(const Interpretation& i,
                                                 const Element& from) {
  std::map<Element, std::size_t> dist{{from, 0}};
  std::queue<Element> todo;
  todo.push(from);
  while (!todo.empty()) {
    Element x = todo.front();
    todo.pop();
    for (const auto& [r, ext] : i.roles) {
      for (const auto& [a, b] : ext) {
        if (a == x && !dist.count(b)) {
          dist[b] = dist[x] + 1;
          todo.push(b);
        }
      }
    }
  }
  return dist;
}

RandomModelSpec small(std::size_t n) {
  RandomModelSpec s;
  s.max_elements = n;
  return s;
}

}  // namespace

TEST_CASE("self enrichment labels self-loops") {
  auto p = make_pointed({"d"}, "d", {{"r", {"d", "d"}}});
  auto t = tau_self(p);
  CHECK(t.interp.concept_extent("@self:r") == std::set<Element>{"d"});
  CHECK(t.interp.vocab.concepts.count(self_concept_name("r")));
  CHECK(t.point == p.point);
}

TEST_CASE("self enrichment without loops only adds empty names") {
  auto p = testing::path2();
  auto t = tau_self(p);
  CHECK(t.interp.concept_extent("@self:r").empty());
  CHECK(reduct(t.interp, p.interp.vocab) == p.interp);
}

TEST_CASE("self enrichment separates the self-loop from the 2-cycle") {
  auto a = tau_self(testing::self_loop());
  auto b = tau_self(testing::two_cycle());
  CHECK_FALSE(alc_wins(a, b, 0));
  CHECK(alc_wins(testing::self_loop(), testing::two_cycle(), 0));
}

TEST_CASE("inverse enrichment adds converse roles") {
  auto p = make_pointed({"d", "e"}, "d", {{"r", {"d", "e"}}});
  auto t = tau_inv(p);
  CHECK(t.interp.role_extent("@inv:r") == std::set<Edge>{{"e", "d"}});
  auto sym = tau_inv(testing::two_cycle());
  CHECK(sym.interp.role_extent("@inv:r") == sym.interp.role_extent("r"));
  CHECK(reduct(t.interp, p.interp.vocab) == p.interp);
}

TEST_CASE("inverse enrichment separates the sink at one round") {
  auto a = tau_inv(testing::sink_left());
  auto b = tau_inv(testing::sink_right());
  CHECK_FALSE(alc_wins(a, b, 1));
  CHECK(alc_wins(a, b, 0));
}

TEST_CASE("boolean enrichment names exact role sets") {
  auto t = tau_b(testing::two_type_left());
  CHECK(t.interp.role_extent("@b:{r,s}") == std::set<Edge>{{"d", "e"}});
  CHECK(t.interp.role_extent("@b:{r}").empty());
  CHECK(t.interp.role_extent("r") == std::set<Edge>{{"d", "e"}});
  auto single = tau_b(testing::path2());
  CHECK(single.interp.role_extent("@b:{r}") ==
        single.interp.role_extent("r"));
  CHECK(subset_role_name({"r", "s"}) == "@b:{r,s}");
}

TEST_CASE("boolean enrichment separates the 2-type fixture at one round") {
  auto a = tau_b(testing::two_type_left());
  auto b = tau_b(testing::two_type_right());
  CHECK_FALSE(alc_wins(a, b, 1));
  CHECK(alc_wins(testing::two_type_left(), testing::two_type_right(), 1));
}

TEST_CASE("boolean enrichment partitions the connected pairs") {
  std::mt19937_64 rng(51);
  for (int n = 0; n < 60; ++n) {
    Vocabulary v = random_vocabulary(1, 3, 0, rng);
    auto p = random_pointed(v, small(4), rng);
    auto t = tau_b(p);
    std::map<Edge, int> hits;
    for (const auto& r : t.interp.vocab.roles) {
      if (r.rfind("@b:", 0) != 0) continue;
      for (const auto& e : t.interp.role_extent(r)) ++hits[e];
    }
    std::set<Edge> connected;
    for (const auto& r : v.roles) {
      for (const auto& e : p.interp.role_extent(r)) connected.insert(e);
    }
    CHECK(hits.size() == connected.size());
    for (const auto& [e, count] : hits) {
      CHECK(count == 1);
      CHECK(connected.count(e));
    }
    CHECK(reduct(t.interp, p.interp.vocab) == p.interp);
  }
}

TEST_CASE("boolean enrichment refuses huge role sets") {
  Vocabulary v;
  for (int i = 0; i < 17; ++i) v.roles.insert("r" + std::to_string(i));
  auto p = make_pointed({"d"}, "d", {}, {}, {}, v);
  CHECK_THROWS_AS(tau_b(p), PreconditionError);
}

TEST_CASE("nominal reduction without individuals keeps the reachable part") {
  auto p = make_pointed({"d", "e", "f"}, "d", {{"r", {"e", "d"}}},
                        {{"A", "f"}});
  auto t = tau_o(p);
  Interpretation expected = restrict_to(p.interp, reachable(p.interp, "d"));
  expected.concepts.erase("A");
  CHECK(t.interp.domain == expected.domain);
  CHECK(t.interp.roles == expected.roles);
  CHECK(t.interp.concepts.empty());
  CHECK(t.point == "d");
}

TEST_CASE("nominal reduction of a single edge into a nominal") {
  auto p = make_pointed({"d", "e"}, "d", {{"r", {"d", "e"}}}, {},
                        {{"o", "e"}});
  ReductionReport report;
  auto t = tau_o(p, {}, &report);
  // The component of o is taken up to undirected reachability, so it holds
  // copies of d and of d's trampoline as well.
  const Element tramp = "@tramp:d:o:r";
  const Element copy = "@copy:e:e";
  const Element d_copy = "@copy:e:d";
  const Element tramp_copy = "@copy:e:" + tramp;
  CHECK(t.interp.domain ==
        std::set<Element>{"d", tramp, copy, d_copy, tramp_copy});
  CHECK(t.interp.concept_extent(trampoline_concept_name("o", "r")) ==
        std::set<Element>{tramp, tramp_copy});
  CHECK(t.interp.role_extent("r") ==
        std::set<Edge>{{"d", tramp}, {d_copy, tramp_copy}, {d_copy, copy}});
  CHECK(t.interp.role_extent(distance_role_name("o")) ==
        std::set<Edge>{{"d", copy}});
  CHECK(t.interp.individuals.at("o") == copy);
  CHECK(t.interp.concept_extent(marker_concept_name("o")) ==
        std::set<Element>{copy});
  CHECK(validate_pointed(t).empty());
  for (const auto& g : report.manifest) {
    const auto& v = t.interp.vocab;
    if (g.kind == "element") CHECK(t.interp.domain.count(g.name));
    if (g.kind == "concept") CHECK(v.concepts.count(g.name));
    if (g.kind == "role") CHECK(v.roles.count(g.name));
  }
}

TEST_CASE("nominal reduction separates the nominal-harmony fixture") {
  auto p = testing::nominal_left();
  auto q = testing::nominal_right();
  CHECK_FALSE(stratified_bisim(p, q, L("O"), 1).duplicator_wins());
  CHECK_FALSE(alc_wins(tau_o(p), tau_o(q), 1));
  CHECK(alc_wins(tau_o(p), tau_o(q), 0));
}

TEST_CASE("unreachable nominals are rejected") {
  auto p = make_pointed({"d", "e"}, "d", {}, {}, {{"o", "e"}});
  CHECK_THROWS_AS(tau_o(p), UnreachableNominalError);
}

TEST_CASE("nominal reduction element count") {
  std::mt19937_64 rng(52);
  for (int n = 0; n < 80; ++n) {
    Vocabulary v = random_vocabulary(1, 2, 2, rng);
    auto p = random_pointed(v, small(5), rng);
    auto t = tau_o(p);
    const Interpretation& in = p.interp;
    std::set<Element> named;
    for (const auto& [o, e] : in.individuals) named.insert(e);
    // Trampolines out of each element.
    std::map<Element, std::size_t> tramps;
    for (const auto& [r, ext] : in.roles) {
      for (const auto& [x, y] : ext) {
        for (const auto& [o, e] : in.individuals) {
          if (e == y) ++tramps[x];
        }
      }
    }
    std::set<Element> roots = named;
    roots.insert(p.point);
    std::size_t expected = 0;
    for (const auto& root : roots) {
      std::set<Element> allowed;
      for (const auto& e : in.domain) {
        if (e == root || !named.count(e)) allowed.insert(e);
      }
      for (const auto& e : reachable(restrict_to(in, allowed), root)) {
        expected += 1 + tramps[e];
      }
    }
    auto fwd = forward_distances(in, p.point);
    for (const auto& [o, e] : in.individuals) {
      if (!fwd.count(e)) {
        expected += 1;  // a single looping dummy
      } else if (fwd[e] > 1) {
        expected += fwd[e] - 1;
      }
    }
    CHECK(t.interp.domain.size() == expected);
  }
}

TEST_CASE("the point and its names survive every reduction") {
  std::mt19937_64 rng(53);
  for (int n = 0; n < 40; ++n) {
    Vocabulary v = random_vocabulary(2, 2, 1, rng);
    auto p = random_pointed(v, small(4), rng);
    for (const auto& logic : LogicSelector::all()) {
      auto t = tau_phi(p, logic);
      CHECK(t.point == p.point);
      CHECK(validate_pointed(t).empty());
      CHECK(t.interp.vocab == vocab_map(p.interp.vocab, logic));
    }
  }
}

TEST_CASE("no extension means no change") {
  auto p = testing::two_type_right();
  CHECK(tau_phi(p, {}) == p);
}

TEST_CASE("role sets range over converse roles when I comes first") {
  auto t = tau_phi(testing::path2(), L("I,b"));
  CHECK(t.interp.role_extent("@b:{@inv:r}") ==
        std::set<Edge>{{"e2", "d2"}, {"f2", "e2"}});
  ReductionReport report;
  tau_phi(testing::path2(), L("Self,I,b,O"), {}, &report);
  CHECK(report.stages == std::vector<std::string>{"Self", "I", "b", "O"});
}

TEST_CASE("generated names must be fresh") {
  auto p = make_pointed({"d"}, "d", {}, {{"@self:r", "d"}},
                        {}, testing::vocabulary_a({"r"}));
  CHECK_THROWS_AS(tau_self(p), NameCollisionError);
  CHECK_THROWS_AS(tau_phi(p, {}), NameCollisionError);
}

TEST_CASE("vocabulary maps") {
  Vocabulary v = standard_vocabulary(1, 1, 0);
  CHECK(vocab_map(v, ReductionTag::kSelf).concepts ==
        std::set<std::string>{"@self:r", "A"});
  Vocabulary two = standard_vocabulary(0, 2, 0);
  CHECK(vocab_map(two, ReductionTag::kInverse).roles ==
        std::set<std::string>{"@inv:r", "@inv:s", "r", "s"});
  CHECK(vocab_map(two, ReductionTag::kBoolean).roles ==
        std::set<std::string>{"@b:{r,s}", "@b:{r}", "@b:{s}", "r", "s"});
  Vocabulary named = standard_vocabulary(0, 1, 1);
  Vocabulary o = vocab_map(named, ReductionTag::kNominal);
  CHECK(o.individuals == named.individuals);
  CHECK(o.concepts.count(trampoline_concept_name("o", "r")));
  CHECK(o.concepts.count(marker_concept_name("o")));
  CHECK(o.roles.count(distance_role_name("o")));
  CHECK_FALSE(vocab_map(named, ReductionTag::kNominal, kLiteral)
                  .concepts.count(marker_concept_name("o")));
}

TEST_CASE("each stage preserves its own game") {
  std::mt19937_64 rng(54);
  struct Stage {
    const char* logic;
    PointedInterpretation (*apply)(const PointedInterpretation&);
  };
  const Stage stages[] = {
      {"Self", [](const PointedInterpretation& p) { return tau_self(p); }},
      {"I", [](const PointedInterpretation& p) { return tau_inv(p); }},
      {"b", [](const PointedInterpretation& p) { return tau_b(p); }},
      {"O", [](const PointedInterpretation& p) { return tau_o(p); }},
  };
  for (int n = 0; n < 120; ++n) {
    Vocabulary v = random_vocabulary(2, 2, 1, rng);
    auto [p, q] = random_pair(v, small(4), rng);
    for (const auto& s : stages) {
      auto tp = s.apply(p);
      auto tq = s.apply(q);
      for (std::size_t k = 0; k <= 3; ++k) {
        INFO("stage " << s.logic << " k=" << k);
        CHECK(alc_wins(tp, tq, k) ==
              testing::oracle_duplicator_wins(p, q, L(s.logic), k));
      }
    }
  }
}

TEST_CASE("composite reductions preserve the fixture games") {
  for (const auto& f : testing::fixture_pairs()) {
    for (const auto& logic : LogicSelector::all()) {
      auto tp = tau_phi(f.left, logic);
      auto tq = tau_phi(f.right, logic);
      for (std::size_t k = 0; k <= 3; ++k) {
        INFO(f.name << " logic={" << logic.to_string() << "} k=" << k);
        CHECK(alc_wins(tp, tq, k) ==
              stratified_bisim(f.left, f.right, logic, k).duplicator_wins());
      }
    }
  }
}

TEST_CASE("undirected distances expose nominals behind the point") {
  // The point has no successors on either side; o names a predecessor that
  // carries a self-loop only on the right. The nominal game never reaches
  // o, but a dummy path of undirected length leads straight to it.
  auto p = make_pointed({"e0", "e1"}, "e0", {{"r", {"e1", "e0"}}}, {},
                        {{"o", "e1"}});
  auto q = make_pointed({"e0", "e1"}, "e0",
                        {{"r", {"e1", "e0"}}, {"r", {"e1", "e1"}}}, {},
                        {{"o", "e1"}});
  for (std::size_t k = 0; k <= 3; ++k) {
    CHECK(stratified_bisim(p, q, L("O"), k).duplicator_wins());
    CHECK(alc_wins(tau_o(p), tau_o(q), k));
  }
  CHECK_FALSE(alc_wins(tau_o(p, kLiteral), tau_o(q, kLiteral), 2));
}

TEST_CASE("unmarked copies hide a named point") {
  auto p = make_pointed({"e0", "e1"}, "e0", {{"r", {"e0", "e1"}}}, {},
                        {{"o", "e1"}});
  auto q = make_pointed({"e0"}, "e0", {}, {}, {{"o", "e0"}},
                        standard_vocabulary(0, 1, 0));
  CHECK_FALSE(stratified_bisim(p, q, L("O"), 0).duplicator_wins());
  CHECK_FALSE(alc_wins(tau_o(p), tau_o(q), 0));
  CHECK(alc_wins(tau_o(p, kLiteral), tau_o(q, kLiteral), 0));
}
