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

// Harmony, the stratified bisimulation solver for every logic between ALC
// and ALC_Self I b O, and Duplicator strategy lookup.
//
// The solver works on element pairs with a round counter: every game rule
// reads only the last positions of the two play histories.

#ifndef DLGAMES_BISIM_HPP_
#define DLGAMES_BISIM_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dlgames/interpretation.hpp"
#include "dlgames/logic.hpp"
#include "dlgames/model.hpp"

namespace dlgames {

struct HarmonyCheck {
  Element left;
  Element right;
  LogicSelector logic;
  bool verdict = true;
  std::vector<std::string> failures;
};

// Local agreement of a in i and b in j over v: concept names always,
// nominal identity with O, self-loops with Self.
HarmonyCheck harmony(const Element& a, const Interpretation& i,
                     const Element& b, const Interpretation& j,
                     const Vocabulary& v, const LogicSelector& logic);

// Index-level harmony over models sharing a vocabulary.
bool harmonious(const Model& left, Index a, const Model& right, Index b,
                const LogicSelector& logic);
// The reasons harmonious() would fail, in the wording of HarmonyCheck.
std::vector<std::string> harmony_failures(const Model& left, Index a,
                                          const Model& right, Index b,
                                          const LogicSelector& logic);

enum class Side { kLeft, kRight };

// A single Spoiler or Duplicator step: follow `role` from the current
// element on `side` to `target`, backwards when `backward` is set.
struct Move {
  Side side = Side::kLeft;
  Index role = 0;
  Index target = 0;
  bool backward = false;
};

enum class Kernel { kSerial, kParallel };

// Z_0 ⊇ Z_1 ⊇ ... where layer i holds the pairs from which Duplicator
// survives i more rounds. Pairs are stored as a row-major |I| x |J| bitmap.
class StratifiedBisim {
 public:
  static constexpr std::size_t kOmega = static_cast<std::size_t>(-1);

  const Model& left() const { return *left_; }
  const Model& right() const { return *right_; }
  const LogicSelector& logic() const { return logic_; }
  // Requested round count, or kOmega.
  std::size_t rounds() const { return rounds_; }
  std::size_t layer_count() const { return layers_.size(); }
  const std::vector<std::uint8_t>& layer(std::size_t i) const {
    return layers_[i];
  }
  // Layer for `remaining` rounds; saturates at the last computed layer,
  // which is the fixpoint once stable() holds.
  bool in_layer(std::size_t remaining, Index a, Index b) const;
  // True when the last two layers coincide.
  bool stable() const;

  // Verdict at the points for the requested round count.
  bool duplicator_wins() const;
  // Smallest i such that the points fall out of Z_i, if any.
  std::optional<std::size_t> distinguishing_round() const;

 private:
  friend StratifiedBisim stratified_bisim(const PointedInterpretation&,
                                          const PointedInterpretation&,
                                          const LogicSelector&, std::size_t,
                                          Kernel);
  friend StratifiedBisim stratified_bisim(std::shared_ptr<const Model>,
                                          std::shared_ptr<const Model>,
                                          const LogicSelector&, std::size_t,
                                          Kernel);
  std::shared_ptr<const Model> left_;
  std::shared_ptr<const Model> right_;
  LogicSelector logic_;
  std::size_t rounds_ = 0;
  std::vector<std::vector<std::uint8_t>> layers_;
};

// Throws VocabularyMismatchError when p and q differ in vocabulary.
// `rounds` may be StratifiedBisim::kOmega for the fixpoint.
StratifiedBisim stratified_bisim(const PointedInterpretation& p,
                                 const PointedInterpretation& q,
                                 const LogicSelector& logic,
                                 std::size_t rounds,
                                 Kernel kernel = Kernel::kParallel);
StratifiedBisim stratified_bisim(std::shared_ptr<const Model> left,
                                 std::shared_ptr<const Model> right,
                                 const LogicSelector& logic,
                                 std::size_t rounds,
                                 Kernel kernel = Kernel::kParallel);

// Every move Spoiler may play from (a, b): forward role moves, backward
// ones with I. Ordered by side, role, direction, target.
std::vector<Move> spoiler_moves(const Model& left, Index a, const Model& right,
                                Index b, const LogicSelector& logic);

// Whether `reply` answers `req` from (a, b) under the logic: same role and
// direction on the other side, plus matching 2-types with b.
bool is_legal_reply(const Model& left, Index a, const Model& right, Index b,
                    const LogicSelector& logic, const Move& req,
                    const Move& reply);

// Throws IllegalMoveError unless `req` is a Spoiler move from (a, b).
void require_legal_request(const Model& left, Index a, const Model& right,
                           Index b, const LogicSelector& logic,
                           const Move& req);

// Duplicator's reply to `req` at (a, b) with `remaining` rounds left
// (counting the current one): the smallest legal reply by (role name,
// target name) landing in Z_{remaining-1}, or nullopt when none exists.
std::optional<Move> duplicator_strategy(const StratifiedBisim& sb, Index a,
                                        Index b, std::size_t remaining,
                                        const Move& req);

}  // namespace dlgames

#endif  // DLGAMES_BISIM_HPP_
