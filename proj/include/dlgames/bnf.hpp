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

// The back-and-forth game on unravellings. Positions are pairs of tree
// nodes; W holds the pairs whose branches carry the same role labels and
// agree on concept names position by position. Spoiler extends either
// branch by one step, Duplicator must extend the other so that the pair
// stays in W.

#ifndef DLGAMES_BNF_HPP_
#define DLGAMES_BNF_HPP_

#include <cstddef>

#include "dlgames/comonad.hpp"
#include "dlgames/interpretation.hpp"
#include "dlgames/logic.hpp"
#include "dlgames/reductions.hpp"

namespace dlgames {

// Throws VocabularyMismatchError when the trees come from sources with
// different concept or role names, PreconditionError for node indices out
// of range.
bool w_membership(const UnravelTree& left, Index s, const UnravelTree& right,
                  Index t);

struct BnfResult {
  bool duplicator_wins = false;
  std::size_t left_nodes = 0;
  std::size_t right_nodes = 0;
  std::size_t positions_explored = 0;
};

// Plays the game on unravel(tau_phi(p), k) and unravel(tau_phi(q), k).
// Spoiler with no move on either side loses.
BnfResult bnf_game(const PointedInterpretation& p,
                   const PointedInterpretation& q, const LogicSelector& logic,
                   std::size_t k, const NominalOptions& options = {});

// The game alone, on two given trees of equal depth.
BnfResult bnf_solve(const UnravelTree& left, const UnravelTree& right);

}  // namespace dlgames

#endif  // DLGAMES_BNF_HPP_
