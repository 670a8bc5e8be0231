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

#include "dlgames/comonad.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "dlgames/errors.hpp"
#include "dlgames/random_models.hpp"

namespace dlgames {
namespace {

constexpr std::size_t kMaxTreeNodes = 4'000'000;

bool same_signature(const Model& a, const Model& b) {
  return a.concept_names() == b.concept_names() &&
         a.role_names() == b.role_names();
}

// Concept labels of src element x are among those of dst element y.
bool labels_included(const Model& src, Index x, const Model& dst, Index y) {
  for (Index c = 0; c < src.concept_names().size(); ++c) {
    if (src.member(c, x) && !dst.member(c, y)) return false;
  }
  return true;
}

std::vector<std::string> split_path(const std::string& name) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = name.find('/', start);
    out.push_back(name.substr(start, pos - start));
    if (pos == std::string::npos) return out;
    start = pos + 1;
  }
}

std::string join_path(const std::vector<std::string>& parts, std::size_t n) {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i) out += '/';
    out += parts[i];
  }
  return out;
}

std::string describe_node(const UnravelTree& t, Index i) {
  return "[" + t.path_name(i) + "]";
}

// Records a failed check unless a counterexample is already on file.
void record(LawResult& law, bool ok, const std::string& why) {
  ++law.checked;
  if (ok) {
    ++law.passed;
  } else if (!law.counterexample) {
    law.counterexample = why;
  }
}

}  // namespace

std::optional<Index> UnravelTree::child(Index parent, Index role,
                                        Index element) const {
  for (Index c : nodes_[parent].children) {
    if (nodes_[c].role == role && nodes_[c].element == element) return c;
  }
  return std::nullopt;
}

std::vector<std::string> UnravelTree::sequence(Index i) const {
  std::vector<std::string> rev;
  for (Index cur = i;; cur = nodes_[cur].parent) {
    rev.push_back(source_->element_name(nodes_[cur].element));
    if (nodes_[cur].parent == UnravelNode::kNoParent) break;
    rev.push_back(source_->role_names()[nodes_[cur].role]);
  }
  return {rev.rbegin(), rev.rend()};
}

std::string UnravelTree::path_name(Index i) const {
  auto seq = sequence(i);
  return join_path(seq, seq.size());
}

PointedInterpretation UnravelTree::to_pointed() const {
  PointedInterpretation out;
  out.interp.vocab = source_->vocabulary();
  out.interp.vocab.individuals.clear();
  std::vector<std::string> names(nodes_.size());
  for (Index i = 0; i < nodes_.size(); ++i) {
    names[i] = path_name(i);
    out.interp.domain.insert(names[i]);
  }
  for (Index c = 0; c < source_->concept_names().size(); ++c) {
    auto& ext = out.interp.concepts[source_->concept_names()[c]];
    for (Index i = 0; i < nodes_.size(); ++i) {
      if (source_->member(c, nodes_[i].element)) ext.insert(names[i]);
    }
  }
  for (const auto& r : source_->role_names()) out.interp.roles[r];
  for (Index i = 1; i < nodes_.size(); ++i) {
    out.interp.roles[source_->role_names()[nodes_[i].role]].emplace(
        names[nodes_[i].parent], names[i]);
  }
  out.point = names[0];
  return out;
}

const Model& UnravelTree::model() const {
  if (!model_) model_ = std::make_shared<const Model>(to_pointed());
  return *model_;
}

UnravelTree unravel(const PointedInterpretation& p, std::size_t k) {
  return unravel(std::make_shared<const Model>(p), k);
}

UnravelTree unravel(std::shared_ptr<const Model> m, std::size_t k) {
  if (k == static_cast<std::size_t>(-1)) {
    throw PreconditionError("unravelling depth must be finite");
  }
  UnravelTree t;
  t.source_ = std::move(m);
  t.depth_ = k;
  const Model& src = *t.source_;
  t.nodes_.push_back(UnravelNode{UnravelNode::kNoParent, 0, src.point(), 0, {}});
  // Breadth-first: nodes are appended in order, so index i is final.
  for (Index i = 0; i < t.nodes_.size(); ++i) {
    if (t.nodes_[i].depth == k) continue;
    for (Index r = 0; r < src.role_names().size(); ++r) {
      for (Index succ : src.successors(r, t.nodes_[i].element)) {
        if (t.nodes_.size() >= kMaxTreeNodes) {
          throw PreconditionError("unravelling exceeds " +
                                  std::to_string(kMaxTreeNodes) + " nodes");
        }
        t.nodes_[i].children.push_back(t.nodes_.size());
        t.nodes_.push_back(
            UnravelNode{i, r, succ, t.nodes_[i].depth + 1, {}});
      }
    }
  }
  return t;
}

std::vector<std::string> tree_violations(const UnravelTree& t) {
  std::vector<std::string> out;
  const PointedInterpretation pi = t.to_pointed();
  const Model& src = t.source();
  const auto& dom = pi.interp.domain;
  if (pi.point != src.element_name(src.point())) {
    out.push_back("root " + pi.point + " is not the point");
  }
  for (const auto& name : dom) {
    auto parts = split_path(name);
    if (parts.size() % 2 == 0) {
      out.push_back(name + " is not an alternating sequence");
      continue;
    }
    if (parts.size() > 2 * t.depth() + 1) {
      out.push_back(name + " is deeper than " + std::to_string(t.depth()));
    }
    if (parts.front() != pi.point) {
      out.push_back(name + " does not start at the point");
    }
    if (parts.size() > 1 && !dom.count(join_path(parts, parts.size() - 2))) {
      out.push_back("prefix of " + name + " is missing");
    }
  }
  std::map<std::string, std::size_t> incoming;
  for (const auto& [r, ext] : pi.interp.roles) {
    auto ri = src.find_role(r);
    for (const auto& [x, y] : ext) {
      ++incoming[y];
      auto px = split_path(x);
      auto py = split_path(y);
      if (py.size() != px.size() + 2 ||
          join_path(py, px.size()) != x || py[px.size()] != r) {
        out.push_back("edge " + x + " -" + r + "-> " + y +
                      " is not a one-step extension");
        continue;
      }
      auto a = src.find_element(px.back());
      auto b = src.find_element(py.back());
      if (!ri || !a || !b || !src.edge(*ri, *a, *b)) {
        out.push_back("edge " + x + " -" + r + "-> " + y +
                      " has no counterpart in the source");
      }
    }
  }
  for (const auto& name : dom) {
    std::size_t want = name == pi.point ? 0 : 1;
    std::size_t got = incoming.count(name) ? incoming[name] : 0;
    if (got != want) {
      out.push_back(name + " is covered by " + std::to_string(got) +
                    " role edges, expected " + std::to_string(want));
    }
  }
  return out;
}

NodeMap counit(const UnravelTree& t) {
  NodeMap out(t.size());
  for (Index i = 0; i < t.size(); ++i) out[i] = t.node(i).element;
  return out;
}

bool is_homomorphism(const Model& src, const Model& dst, const NodeMap& h) {
  return is_morphism(src, dst, h, MorphismKind::kHomomorphism, true);
}

bool is_cokleisli(const UnravelTree& t, const Model& dst, const NodeMap& f) {
  const Model& src = t.source();
  if (f.size() != t.size() || !same_signature(src, dst)) return false;
  if (f[0] != dst.point()) return false;
  for (Index i = 0; i < t.size(); ++i) {
    if (f[i] >= dst.size()) return false;
    if (!labels_included(src, t.node(i).element, dst, f[i])) return false;
    if (i && !dst.edge(t.node(i).role, f[t.node(i).parent], f[i])) {
      return false;
    }
  }
  return true;
}

bool is_tree_morphism(const UnravelTree& src, const UnravelTree& dst,
                      const NodeMap& m) {
  if (m.size() != src.size() ||
      !same_signature(src.source(), dst.source())) {
    return false;
  }
  if (m[0] != 0) return false;
  for (Index i = 0; i < src.size(); ++i) {
    if (m[i] >= dst.size()) return false;
    if (!labels_included(src.source(), src.node(i).element, dst.source(),
                         dst.node(m[i]).element)) {
      return false;
    }
    if (i == 0) continue;
    const UnravelNode& image = dst.node(m[i]);
    if (image.parent != m[src.node(i).parent] ||
        image.role != src.node(i).role) {
      return false;
    }
  }
  return true;
}

NodeMap lift(const NodeMap& h, const UnravelTree& tp, const UnravelTree& tq) {
  if (tp.depth() != tq.depth()) {
    throw PreconditionError("lift needs unravellings of equal depth");
  }
  if (!same_signature(tp.source(), tq.source()) ||
      !is_homomorphism(tp.source(), tq.source(), h)) {
    throw InvalidMorphismError("not a point-preserving homomorphism");
  }
  NodeMap out(tp.size());
  out[0] = 0;
  for (Index i = 1; i < tp.size(); ++i) {
    const UnravelNode& n = tp.node(i);
    auto c = tq.child(out[n.parent], n.role, h[n.element]);
    if (!c) throw InvalidMorphismError("image path leaves the unravelling");
    out[i] = *c;
  }
  return out;
}

NodeMap coextend(const NodeMap& f, const UnravelTree& tp,
                 const UnravelTree& tq) {
  if (tp.depth() != tq.depth()) {
    throw PreconditionError("coextension needs unravellings of equal depth");
  }
  if (!is_cokleisli(tp, tq.source(), f)) {
    throw InvalidMorphismError("not a coKleisli map into the target");
  }
  NodeMap out(tp.size());
  out[0] = 0;
  for (Index i = 1; i < tp.size(); ++i) {
    const UnravelNode& n = tp.node(i);
    auto c = tq.child(out[n.parent], n.role, f[i]);
    if (!c) throw InvalidMorphismError("image path leaves the unravelling");
    out[i] = *c;
  }
  return out;
}

NodeMap cokleisli_compose(const NodeMap& g, const NodeMap& f,
                          const UnravelTree& tp, const UnravelTree& tq) {
  if (g.size() != tq.size()) {
    throw InvalidMorphismError("second map is not defined on the middle tree");
  }
  NodeMap fs = coextend(f, tp, tq);
  NodeMap out(fs.size());
  for (Index i = 0; i < fs.size(); ++i) out[i] = g[fs[i]];
  return out;
}

std::optional<NodeMap> random_cokleisli(const UnravelTree& t, const Model& dst,
                                        std::mt19937_64& rng) {
  const Model& src = t.source();
  if (!same_signature(src, dst)) return std::nullopt;
  const std::size_t m = dst.size();
  std::vector<std::vector<std::uint8_t>> feasible(
      t.size(), std::vector<std::uint8_t>(m, 0));
  for (Index i = t.size(); i-- > 0;) {
    const UnravelNode& n = t.node(i);
    for (Index y = 0; y < m; ++y) {
      if (!labels_included(src, n.element, dst, y)) continue;
      bool ok = true;
      for (Index c : n.children) {
        const auto& succ = dst.successors(t.node(c).role, y);
        ok = std::any_of(succ.begin(), succ.end(),
                         [&](Index y2) { return feasible[c][y2] != 0; });
        if (!ok) break;
      }
      feasible[i][y] = ok;
    }
  }
  if (!feasible[0][dst.point()]) return std::nullopt;
  NodeMap f(t.size());
  f[0] = dst.point();
  for (Index i = 1; i < t.size(); ++i) {
    const UnravelNode& n = t.node(i);
    std::vector<Index> options;
    for (Index y : dst.successors(n.role, f[n.parent])) {
      if (feasible[i][y]) options.push_back(y);
    }
    f[i] = options[std::uniform_int_distribution<std::size_t>(
        0, options.size() - 1)(rng)];
  }
  return f;
}

std::optional<NodeMap> random_homomorphism(const Model& src, const Model& dst,
                                           std::mt19937_64& rng,
                                           std::size_t budget) {
  if (!same_signature(src, dst) ||
      src.individual_names() != dst.individual_names()) {
    return std::nullopt;
  }
  const std::size_t n = src.size();
  const std::size_t roles = src.role_names().size();
  // Point first, then the rest in index order.
  std::vector<Index> order{src.point()};
  for (Index e = 0; e < n; ++e) {
    if (e != src.point()) order.push_back(e);
  }
  std::vector<std::optional<Index>> named(n);
  for (Index o = 0; o < src.individual_names().size(); ++o) {
    if (auto e = src.individual(o)) named[*e] = dst.individual(o);
  }
  NodeMap h(n, 0);
  std::vector<std::uint8_t> assigned(n, 0);

  auto consistent = [&](Index x, Index y) {
    if (!labels_included(src, x, dst, y)) return false;
    if (named[x] && *named[x] != y) return false;
    for (Index o = 0; o < src.individual_names().size(); ++o) {
      if (src.individual(o) == x && dst.individual(o) != y) return false;
    }
    for (Index r = 0; r < roles; ++r) {
      if (src.edge(r, x, x) && !dst.edge(r, y, y)) return false;
      for (Index z : src.successors(r, x)) {
        if (assigned[z] && !dst.edge(r, y, h[z])) return false;
      }
      for (Index z : src.predecessors(r, x)) {
        if (assigned[z] && !dst.edge(r, h[z], y)) return false;
      }
    }
    return true;
  };

  std::size_t steps = 0;
  std::function<bool(std::size_t)> search = [&](std::size_t pos) {
    if (pos == order.size()) return true;
    const Index x = order[pos];
    std::vector<Index> cands;
    if (pos == 0) {
      cands.push_back(dst.point());
    } else {
      for (Index y = 0; y < dst.size(); ++y) cands.push_back(y);
      std::shuffle(cands.begin(), cands.end(), rng);
    }
    for (Index y : cands) {
      if (++steps > budget) return false;
      if (!consistent(x, y)) continue;
      h[x] = y;
      assigned[x] = 1;
      if (search(pos + 1)) return true;
      assigned[x] = 0;
    }
    return false;
  };
  if (!search(0)) return std::nullopt;
  return h;
}

bool LawReport::all_passed() const {
  return std::all_of(laws.begin(), laws.end(),
                     [](const LawResult& l) { return l.ok(); });
}

std::vector<std::string> LawReport::lines() const {
  std::vector<std::string> out;
  for (const auto& l : laws) {
    std::string line = "law " + l.name + ": " + std::to_string(l.passed) +
                       "/" + std::to_string(l.checked) +
                       (l.ok() ? " pass" : " FAIL");
    if (l.counterexample) line += " (counterexample: " + *l.counterexample + ")";
    out.push_back(std::move(line));
  }
  out.push_back("samples: " + std::to_string(samples_requested) +
                " requested, " + std::to_string(samples_skipped) +
                " skipped without a map");
  return out;
}

namespace {

enum LawId {
  kLawA,
  kLawB,
  kLawC,
  kLawD,
  kFunctorId,
  kFunctorComp,
  kNaturality,
  kLawCount,
};

const char* kLawNames[kLawCount] = {
    "A coextend(counit) = id",
    "B counit . coextend(f) = f",
    "C coextend(g . coextend(f)) = coextend(g) . coextend(f)",
    "D coextend(f) is a morphism",
    "functor identity",
    "functor composition",
    "counit naturality",
};

using Coextend = std::function<NodeMap(const NodeMap&, const UnravelTree&,
                                       const UnravelTree&)>;

// Applies the coextension under test, turning exceptions into nullopt.
std::optional<NodeMap> try_coextend(const Coextend& coext, const NodeMap& f,
                                    const UnravelTree& a, const UnravelTree& b,
                                    std::string& error) {
  try {
    NodeMap out = coext(f, a, b);
    if (out.size() != a.size()) {
      error = "coextension has the wrong length";
      return std::nullopt;
    }
    for (Index x : out) {
      if (x >= b.size()) {
        error = "coextension leaves the target tree";
        return std::nullopt;
      }
    }
    return out;
  } catch (const Error& e) {
    error = e.what();
    return std::nullopt;
  }
}

struct SampleOutcome {
  bool skipped = false;
  std::vector<LawResult> laws;
};

SampleOutcome run_sample(const PointedInterpretation& p,
                         const std::shared_ptr<const Model>& mp,
                         const UnravelTree& tp, std::size_t k,
                         std::uint64_t seed, const Coextend& coext) {
  SampleOutcome out;
  out.laws.resize(kLawCount);
  std::mt19937_64 rng(seed);
  // Homomorphic images guarantee maps exist; fresh models probe the rest.
  auto target = [&](const PointedInterpretation& from) {
    if (std::bernoulli_distribution(0.75)(rng)) {
      return random_image(from, 4, 0.15, rng);
    }
    RandomModelSpec spec;
    spec.max_elements = 3;
    spec.edge_probability = 0.6;
    spec.concept_probability = 0.6;
    return random_pointed(from.interp.vocab, spec, rng);
  };
  PointedInterpretation q = target(p);
  PointedInterpretation s = target(q);
  auto mq = std::make_shared<const Model>(q);
  auto ms = std::make_shared<const Model>(s);
  UnravelTree tq = unravel(mq, k);
  UnravelTree ts = unravel(ms, k);

  auto f = random_cokleisli(tp, *mq, rng);
  auto g = random_cokleisli(tq, *ms, rng);
  if (!f || !g) {
    out.skipped = true;
  } else {
    std::string err;
    auto fs = try_coextend(coext, *f, tp, tq, err);
    // (B)
    if (!fs) {
      record(out.laws[kLawB], false, err);
    } else {
      bool ok = true;
      std::string why;
      for (Index i = 0; i < tp.size() && ok; ++i) {
        if (tq.node((*fs)[i]).element != (*f)[i]) {
          ok = false;
          why = describe_node(tp, i) + " maps to " +
                describe_node(tq, (*fs)[i]) + " but f gives " +
                mq->element_name((*f)[i]);
        }
      }
      record(out.laws[kLawB], ok, why);
      // (D)
      record(out.laws[kLawD], is_tree_morphism(tp, tq, *fs),
             "coextension of a coKleisli map is not a tree morphism");
    }
    // (C)
    NodeMap gf(tp.size());
    bool have_gf = fs.has_value();
    if (fs) {
      for (Index i = 0; i < tp.size(); ++i) gf[i] = (*g)[(*fs)[i]];
    }
    auto gs = try_coextend(coext, *g, tq, ts, err);
    std::optional<NodeMap> lhs;
    if (have_gf) lhs = try_coextend(coext, gf, tp, ts, err);
    if (!fs || !gs || !lhs) {
      record(out.laws[kLawC], false, err);
    } else {
      bool ok = true;
      std::string why;
      for (Index i = 0; i < tp.size() && ok; ++i) {
        if ((*lhs)[i] != (*gs)[(*fs)[i]]) {
          ok = false;
          why = "disagreement at " + describe_node(tp, i);
        }
      }
      record(out.laws[kLawC], ok, why);
    }
  }

  // Functor laws and naturality over plain homomorphisms p -> q -> s.
  auto h = random_homomorphism(*mp, *mq, rng);
  auto h2 = random_homomorphism(*mq, *ms, rng);
  NodeMap id_q(mq->size());
  for (Index e = 0; e < mq->size(); ++e) id_q[e] = e;
  {
    NodeMap lifted = lift(id_q, tq, tq);
    bool ok = true;
    for (Index i = 0; i < tq.size() && ok; ++i) ok = lifted[i] == i;
    record(out.laws[kFunctorId], ok, "lift(id) moves a node");
  }
  if (h && h2) {
    NodeMap comp(mp->size());
    for (Index e = 0; e < mp->size(); ++e) comp[e] = (*h2)[(*h)[e]];
    NodeMap l1 = lift(*h, tp, tq);
    NodeMap l2 = lift(*h2, tq, ts);
    NodeMap lc = lift(comp, tp, ts);
    bool ok = true;
    std::string why;
    for (Index i = 0; i < tp.size() && ok; ++i) {
      if (lc[i] != l2[l1[i]]) {
        ok = false;
        why = "disagreement at " + describe_node(tp, i);
      }
    }
    record(out.laws[kFunctorComp], ok, why);

    NodeMap eq = counit(tq);
    NodeMap ep = counit(tp);
    ok = true;
    for (Index i = 0; i < tp.size() && ok; ++i) {
      if (eq[l1[i]] != (*h)[ep[i]]) {
        ok = false;
        why = "square fails at " + describe_node(tp, i);
      }
    }
    record(out.laws[kNaturality], ok, why);
  }
  return out;
}

}  // namespace

LawReport check_comonad_laws(const PointedInterpretation& p, std::size_t k,
                             std::size_t samples, std::uint64_t seed,
                             const LawOptions& options) {
  const Coextend coext = options.coextend ? options.coextend : Coextend(coextend);
  auto mp = std::make_shared<const Model>(p);
  UnravelTree tp = unravel(mp, k);

  LawReport report;
  report.samples_requested = samples;
  report.laws.resize(kLawCount);
  for (int i = 0; i < kLawCount; ++i) report.laws[i].name = kLawNames[i];

  {
    std::string err;
    NodeMap eps = counit(tp);
    auto ext = try_coextend(coext, eps, tp, tp, err);
    bool ok = ext.has_value();
    std::string why = err;
    for (Index i = 0; ok && i < tp.size(); ++i) {
      if ((*ext)[i] != i) {
        ok = false;
        why = describe_node(tp, i) + " is moved to " +
              describe_node(tp, (*ext)[i]);
      }
    }
    record(report.laws[kLawA], ok, why);
  }

  std::mt19937_64 seeder(seed);
  std::vector<std::uint64_t> seeds(samples);
  for (auto& s : seeds) s = seeder();
  std::vector<SampleOutcome> outcomes(samples);
  // Samples share only read-only state: p, its model and its tree.
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < static_cast<long long>(samples); ++i) {
    outcomes[i] = run_sample(p, mp, tp, k, seeds[i], coext);
  }
  for (const auto& o : outcomes) {
    if (o.skipped) ++report.samples_skipped;
    for (int l = 0; l < kLawCount; ++l) {
      const LawResult& part = o.laws[l];
      LawResult& total = report.laws[l];
      total.checked += part.checked;
      total.passed += part.passed;
      if (!total.counterexample && part.counterexample) {
        total.counterexample = part.counterexample;
      }
    }
  }
  return report;
}

}  // namespace dlgames
