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

#include <queue>
#include <random>
#include <sstream>

#include "doctest.h"
#include "dlgames/errors.hpp"
#include "dlgames/interpretation.hpp"
#include "dlgames/io.hpp"
#include "dlgames/model.hpp"
#include "dlgames/random_models.hpp"
#include "support/fixtures.hpp"

using namespace dlgames;
using testing::make_pointed;

namespace {

Interpretation singleton_with_loop() {
  Interpretation i;
  i.domain = {"d"};
  i.add_concept_member("A", "d");
  i.add_edge("r", "d", "d");
  return i;
}

// Breadth-first closure in the undirected graph, written out directly.
std::set<Element> bfs_oracle(const Interpretation& i, const Element& from) {
  std::set<Element> seen{from};
  std::queue<Element> todo;
  todo.push(from);
  while (!todo.empty()) {
    Element x = todo.front();
    todo.pop();
    for (const auto& [r, ext] : i.roles) {
      for (const auto& [a, b] : ext) {
        if (a == x && seen.insert(b).second) todo.push(b);
        if (b == x && seen.insert(a).second) todo.push(a);
      }
    }
  }
  return seen;
}

MorphismWitness witness(std::map<Element, Element> m, MorphismKind k) {
  return MorphismWitness{std::move(m), k};
}

}  // namespace

TEST_CASE("well-formed singleton has no violations") {
  CHECK(validate_interpretation(singleton_with_loop()).empty());
}

TEST_CASE("dangling concept member is reported") {
  Interpretation i;
  i.domain = {"d"};
  i.vocab.concepts = {"A"};
  i.concepts["A"] = {"e"};
  auto v = validate_interpretation(i);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "extent of A mentions non-domain element e");
  CHECK_THROWS_AS(require_valid(i), InvalidInterpretationError);
}

TEST_CASE("empty domain is reported") {
  Interpretation i;
  auto v = validate_interpretation(i);
  REQUIRE_FALSE(v.empty());
  CHECK(v[0] == "empty domain");
}

TEST_CASE("unmapped individual in the vocabulary is reported") {
  Interpretation i;
  i.domain = {"d"};
  i.vocab.individuals = {"o"};
  auto v = validate_interpretation(i);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "individual o is not mapped");
}

TEST_CASE("names shared between name sets are reported") {
  Interpretation i;
  i.domain = {"d"};
  i.vocab.concepts = {"x"};
  i.vocab.roles = {"x"};
  CHECK_FALSE(validate_interpretation(i).empty());
  CHECK(overlapping_names(i.vocab) == std::vector<std::string>{"x"});
}

TEST_CASE("point outside the domain is reported") {
  PointedInterpretation p{singleton_with_loop(), "z"};
  auto v = validate_pointed(p);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "point z is not in the domain");
}

TEST_CASE("reduct keeps the selected symbols") {
  Interpretation i;
  i.domain = {"d"};
  i.add_concept_member("A", "d");
  i.add_concept_member("B", "d");
  Vocabulary keep;
  keep.concepts = {"A"};
  Interpretation r = reduct(i, keep);
  CHECK(r.vocab == keep);
  CHECK(r.domain == std::set<Element>{"d"});
  CHECK(r.concept_extent("A") == std::set<Element>{"d"});
  CHECK(r.concepts.count("B") == 0);
}

TEST_CASE("reduct to the full vocabulary is the identity") {
  Interpretation i = singleton_with_loop();
  CHECK(reduct(i, i.vocab) == i);
}

TEST_CASE("reduct drops unselected roles") {
  Interpretation i;
  i.domain = {"d", "e"};
  i.add_edge("r", "d", "e");
  i.add_edge("s", "e", "d");
  Vocabulary keep;
  keep.roles = {"r"};
  Interpretation r = reduct(i, keep);
  CHECK(r.role_extent("s").empty());
  CHECK(r.role_extent("r") == std::set<Edge>{{"d", "e"}});
}

TEST_CASE("reduct rejects names outside the vocabulary") {
  Vocabulary keep;
  keep.concepts = {"Z"};
  CHECK_THROWS_AS(reduct(singleton_with_loop(), keep), UnknownNameError);
}

TEST_CASE("reduct is idempotent on random models") {
  std::mt19937_64 rng(11);
  for (int n = 0; n < 50; ++n) {
    Vocabulary v = random_vocabulary(3, 3, 1, rng);
    PointedInterpretation p = random_pointed(v, {}, rng);
    Vocabulary keep;
    for (const auto& c : v.concepts) {
      if (rng() % 2) keep.concepts.insert(c);
    }
    for (const auto& r : v.roles) {
      if (rng() % 2) keep.roles.insert(r);
    }
    Interpretation once = reduct(p.interp, keep);
    CHECK(reduct(once, keep) == once);
  }
}

TEST_CASE("reachable follows edges in both directions") {
  Interpretation a;
  a.domain = {"d", "e"};
  a.add_edge("r", "d", "e");
  CHECK(reachable(a, "d") == std::set<Element>{"d", "e"});

  Interpretation b;
  b.domain = {"d", "e", "f"};
  b.add_edge("r", "e", "f");
  CHECK(reachable(b, "d") == std::set<Element>{"d"});

  Interpretation c;
  c.domain = {"d", "e"};
  c.add_edge("r", "e", "d");
  CHECK(reachable(c, "d") == std::set<Element>{"d", "e"});

  CHECK_THROWS_AS(reachable(c, "z"), UnknownElementError);
}

TEST_CASE("reachable matches a breadth-first closure on random models") {
  std::mt19937_64 rng(12);
  RandomModelSpec spec;
  spec.max_elements = 6;
  spec.edge_probability = 0.15;
  for (int n = 0; n < 100; ++n) {
    Vocabulary v = random_vocabulary(1, 2, 0, rng);
    PointedInterpretation p = random_pointed(v, spec, rng);
    for (const auto& e : p.interp.domain) {
      CHECK(reachable(p.interp, e) == bfs_oracle(p.interp, e));
    }
  }
}

TEST_CASE("identity on a labelled singleton is an embedding") {
  PointedInterpretation p{singleton_with_loop(), "d"};
  CHECK(check_morphism(witness({{"d", "d"}}, MorphismKind::kEmbedding), p, p));
}

TEST_CASE("homomorphisms must preserve concepts") {
  auto src = make_pointed({"d"}, "d", {}, {{"A", "d"}});
  auto dst = make_pointed({"e"}, "e", {}, {}, {}, testing::vocabulary_a({}));
  CHECK_FALSE(check_morphism(witness({{"d", "e"}}, MorphismKind::kHomomorphism),
                             src, dst));
}

TEST_CASE("collapsing a 2-cycle onto a self-loop") {
  auto cycle = make_pointed({"d", "e"}, "d",
                            {{"r", {"d", "e"}}, {"r", {"e", "d"}}});
  auto loop = make_pointed({"x"}, "x", {{"r", {"x", "x"}}});
  std::map<Element, Element> m{{"d", "x"}, {"e", "x"}};
  CHECK(check_morphism(witness(m, MorphismKind::kHomomorphism), cycle, loop));
  // Reflection fails: (d, d) is not an edge, but its image (x, x) is.
  CHECK_FALSE(check_morphism(witness(m, MorphismKind::kStrongHomomorphism),
                             cycle, loop));
  CHECK_FALSE(check_morphism(witness(m, MorphismKind::kEmbedding), cycle, loop));
}

TEST_CASE("morphisms must preserve the point") {
  auto cycle = make_pointed({"d", "e"}, "d",
                            {{"r", {"d", "e"}}, {"r", {"e", "d"}}});
  std::map<Element, Element> swap{{"d", "e"}, {"e", "d"}};
  CHECK_FALSE(check_morphism(witness(swap, MorphismKind::kHomomorphism), cycle,
                             cycle));
  cycle.point = "e";
  auto target = cycle;
  target.point = "d";
  CHECK(check_morphism(witness(swap, MorphismKind::kEmbedding), cycle, target));
}

TEST_CASE("partial mappings are rejected") {
  auto cycle = make_pointed({"d", "e"}, "d",
                            {{"r", {"d", "e"}}, {"r", {"e", "d"}}});
  CHECK_FALSE(check_morphism(witness({{"d", "d"}}, MorphismKind::kHomomorphism),
                             cycle, cycle));
}

TEST_CASE("identity is a morphism of every kind, and kinds form a chain") {
  std::mt19937_64 rng(13);
  for (int n = 0; n < 60; ++n) {
    Vocabulary v = random_vocabulary(2, 2, 1, rng);
    PointedInterpretation p = random_pointed(v, {}, rng);
    std::map<Element, Element> id;
    for (const auto& e : p.interp.domain) id[e] = e;
    for (auto k : {MorphismKind::kHomomorphism,
                   MorphismKind::kStrongHomomorphism,
                   MorphismKind::kEmbedding}) {
      CHECK(check_morphism(witness(id, k), p, p));
    }
    // Random maps into a random image: embedding implies strong implies
    // plain homomorphism.
    PointedInterpretation q = random_image(p, 4, 0.2, rng);
    std::vector<Element> targets(q.interp.domain.begin(),
                                 q.interp.domain.end());
    for (int t = 0; t < 20; ++t) {
      std::map<Element, Element> m;
      for (const auto& e : p.interp.domain) {
        m[e] = targets[rng() % targets.size()];
      }
      m[p.point] = q.point;
      bool emb = check_morphism(witness(m, MorphismKind::kEmbedding), p, q);
      bool strong =
          check_morphism(witness(m, MorphismKind::kStrongHomomorphism), p, q);
      bool hom = check_morphism(witness(m, MorphismKind::kHomomorphism), p, q);
      CHECK((!emb || strong));
      CHECK((!strong || hom));
    }
  }
}

TEST_CASE("random images come with a homomorphism") {
  std::mt19937_64 rng(14);
  for (int n = 0; n < 60; ++n) {
    Vocabulary v = random_vocabulary(2, 2, 1, rng);
    PointedInterpretation p = random_pointed(v, {}, rng);
    MorphismWitness h;
    PointedInterpretation q = random_image(p, 3, 0.3, rng, &h);
    CHECK(validate_pointed(q).empty());
    CHECK(check_morphism(h, p, q));
  }
}

TEST_CASE("models number elements and names in sorted order") {
  auto p = make_pointed({"b", "a", "c"}, "b",
                        {{"s", {"a", "b"}}, {"r", {"b", "c"}}},
                        {{"B", "a"}, {"A", "c"}}, {{"o", "c"}});
  Model m(p);
  CHECK(m.element_names() == std::vector<std::string>{"a", "b", "c"});
  CHECK(m.role_names() == std::vector<std::string>{"r", "s"});
  CHECK(m.point() == 1);
  CHECK(m.edge(m.role("r"), 1, 2));
  CHECK(m.successors(m.role("s"), 0) == std::vector<Index>{1});
  CHECK(m.predecessors(m.role("r"), 2) == std::vector<Index>{1});
  CHECK(m.member(m.concept_index("A"), 2));
  CHECK(m.individual(0) == std::optional<Index>(2));
  CHECK(m.role_set(0, 1) == std::vector<Index>{m.role("s")});
  CHECK_THROWS_AS(m.element("z"), UnknownElementError);
  CHECK_THROWS_AS(m.role("t"), UnknownNameError);
}

TEST_CASE("interpretation files round-trip") {
  std::mt19937_64 rng(15);
  for (int n = 0; n < 30; ++n) {
    Vocabulary v = random_vocabulary(2, 2, 1, rng);
    PointedInterpretation p = random_pointed(v, {}, rng);
    std::string text = to_text(interpretation_to_json(p));
    std::istringstream in(text);
    PointedInterpretation back = read_interpretation(in);
    CHECK(to_text(interpretation_to_json(back)) == text);
    CHECK(back.point == p.point);
    CHECK(back.interp.vocab == p.interp.vocab);
  }
}

TEST_CASE("point defaults to the first listed element") {
  std::istringstream in(
      R"({"domain": ["z", "a"], "concepts": {}, "roles": {"r": [["z", "a"]]}})");
  CHECK(read_interpretation(in).point == "z");
}

TEST_CASE("malformed files name the offending field") {
  auto field_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_interpretation(in);
    } catch (const FormatError& e) {
      return e.field();
    }
    return std::string("<accepted>");
  };
  CHECK(field_of(R"({"domain": ["d"], "colour": 1})") == "colour");
  CHECK(field_of(R"({"roles": {}})") == "domain");
  CHECK(field_of(R"({"domain": []})") == "domain");
  CHECK(field_of(R"({"domain": ["d"], "concepts": {"A": ["e"]}})") ==
        "concepts.A");
  CHECK(field_of(R"({"domain": ["d"], "roles": {"r": [["d"]]}})") == "roles.r");
  CHECK(field_of(R"({"domain": ["d"], "individuals": {"o": 3}})") ==
        "individuals.o");
  CHECK(field_of(R"({"domain": ["d"], "point": "q"})") == "point");
  CHECK(field_of("{not json") == "document");
  CHECK_THROWS_AS(read_interpretation_file("/nonexistent/file.json"),
                  FormatError);
}
