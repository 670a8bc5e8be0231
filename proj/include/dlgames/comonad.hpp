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

// The depth-k unravelling comonad in Kleisli form. A tree node is an
// alternating sequence [a0, r0, a1, ..., an] with a0 the point and
// (a_i, a_{i+1}) in r_i; the tree is stored as a parent-linked node vector
// in breadth-first order with the root at index 0.
//
// Maps between trees and models are vectors indexed by node or element:
// a coKleisli map D_k p -> q is a vector from nodes of unravel(p, k) to
// element indices of q.

#ifndef DLGAMES_COMONAD_HPP_
#define DLGAMES_COMONAD_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dlgames/interpretation.hpp"
#include "dlgames/model.hpp"

namespace dlgames {

using NodeMap = std::vector<Index>;

struct UnravelNode {
  static constexpr Index kNoParent = static_cast<Index>(-1);
  Index parent = kNoParent;
  Index role = 0;     // role index in the source model; unused at the root
  Index element = 0;  // last element of the sequence
  std::size_t depth = 0;
  std::vector<Index> children;
};

class UnravelTree {
 public:
  const Model& source() const { return *source_; }
  std::shared_ptr<const Model> source_ptr() const { return source_; }
  std::size_t depth() const { return depth_; }
  std::size_t size() const { return nodes_.size(); }
  const UnravelNode& node(Index i) const { return nodes_[i]; }
  const std::vector<UnravelNode>& nodes() const { return nodes_; }

  // Child of `parent` reached by (role, element), if any.
  std::optional<Index> child(Index parent, Index role, Index element) const;

  // [a0, r0, a1, ...] with names.
  std::vector<std::string> sequence(Index i) const;
  // "a0/r0/a1/..."; unambiguous while names avoid '/'.
  std::string path_name(Index i) const;

  // The induced interpretation over path names. Concept membership follows
  // the last element; each node is linked to its parent by exactly one
  // role. Individuals are dropped from the vocabulary, since a named
  // element may occur on many branches.
  PointedInterpretation to_pointed() const;
  // Compiled form of to_pointed(), built on first use.
  const Model& model() const;

 private:
  friend UnravelTree unravel(std::shared_ptr<const Model>, std::size_t);
  std::shared_ptr<const Model> source_;
  std::size_t depth_ = 0;
  std::vector<UnravelNode> nodes_;
  mutable std::shared_ptr<const Model> model_;
};

// Throws PreconditionError for k = StratifiedBisim::kOmega (any k that does
// not fit a finite unravelling).
UnravelTree unravel(const PointedInterpretation& p, std::size_t k);
UnravelTree unravel(std::shared_ptr<const Model> m, std::size_t k);

// One human-readable line per broken tree invariant (prefix closure,
// one covering role per parent link, no other edges), read off the
// exported interpretation.
std::vector<std::string> tree_violations(const UnravelTree& t);

// counit: each node to its last element.
NodeMap counit(const UnravelTree& t);

// Point-preserving homomorphism tests.
bool is_homomorphism(const Model& src, const Model& dst, const NodeMap& h);
// f is a homomorphism from t's induced interpretation to dst.
bool is_cokleisli(const UnravelTree& t, const Model& dst, const NodeMap& f);
// m is a homomorphism between the two induced tree interpretations.
bool is_tree_morphism(const UnravelTree& src, const UnravelTree& dst,
                      const NodeMap& m);

// D_k(h): [a0, r0, a1, ...] to [h a0, r0, h a1, ...]. Throws
// InvalidMorphismError unless h is a point-preserving homomorphism from
// tp's source to tq's source.
NodeMap lift(const NodeMap& h, const UnravelTree& tp, const UnravelTree& tq);

// Kleisli coextension f*: f*[d] = [e], f*(s[r, d']) = f*(s)[r, f(s[r, d'])].
// Throws InvalidMorphismError unless f is a coKleisli map tp -> tq.source().
NodeMap coextend(const NodeMap& f, const UnravelTree& tp,
                 const UnravelTree& tq);

// g . f = g o f*, for f: D_k p -> q and g: D_k q -> s.
NodeMap cokleisli_compose(const NodeMap& g, const NodeMap& f,
                          const UnravelTree& tp, const UnravelTree& tq);

// A random coKleisli map t -> dst, each node's image drawn uniformly among
// the choices that still extend to a full map; nullopt when none exists.
std::optional<NodeMap> random_cokleisli(const UnravelTree& t, const Model& dst,
                                        std::mt19937_64& rng);

// A point-preserving homomorphism src -> dst found by randomised
// backtracking, or nullopt when none exists within `budget` steps.
std::optional<NodeMap> random_homomorphism(const Model& src, const Model& dst,
                                           std::mt19937_64& rng,
                                           std::size_t budget = 100000);

struct LawResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::optional<std::string> counterexample;

  bool ok() const { return checked == passed; }
};

struct LawReport {
  std::size_t samples_requested = 0;
  std::size_t samples_skipped = 0;
  std::vector<LawResult> laws;

  bool all_passed() const;
  std::vector<std::string> lines() const;
};

struct LawOptions {
  // Coextension under test; defaults to coextend(). Tests swap in broken
  // variants to see the checker reject them.
  std::function<NodeMap(const NodeMap&, const UnravelTree&,
                        const UnravelTree&)>
      coextend;
};

// Checks, on `samples` random coKleisli maps into random targets over p's
// vocabulary: coextend(counit) = id; counit o coextend(f) = f;
// coextend(g o coextend(f)) = coextend(g) o coextend(f); coextend(f) is a
// tree morphism; lift(id) = id; lift(g o h) = lift(g) o lift(h); and
// counit o lift(h) = h o counit. Samples without a map are skipped and
// counted. Deterministic per seed.
LawReport check_comonad_laws(const PointedInterpretation& p, std::size_t k,
                             std::size_t samples, std::uint64_t seed,
                             const LawOptions& options = {});

}  // namespace dlgames

#endif  // DLGAMES_COMONAD_HPP_
