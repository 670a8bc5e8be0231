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

// The round-based bisimulation game as an explicit play: Spoiler moves come
// from a pluggable source, Duplicator answers from the stratified layers,
// and every step is checked against the rules.

#ifndef DLGAMES_GAME_HPP_
#define DLGAMES_GAME_HPP_

#include <cstddef>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "dlgames/bisim.hpp"

namespace dlgames {

enum class Player { kSpoiler, kDuplicator };

const char* to_string(Player p);
const char* to_string(Side s);

// Alternating element / role histories of the completed rounds, one per
// side. A backward step is recorded as the role name followed by '-'.
struct GamePosition {
  std::vector<std::string> left_history;
  std::vector<std::string> right_history;
};

// What a Spoiler source sees before choosing a move.
struct GameState {
  const StratifiedBisim* sb;
  Index left;
  Index right;
  std::size_t round;      // 1-based number of the round about to be played
  std::size_t remaining;  // rounds left, counting this one
  const GamePosition* position;
};

class SpoilerSource {
 public:
  virtual ~SpoilerSource() = default;
  // The next move, or nullopt to concede. Only called when Spoiler has at
  // least one legal move. Implementations may throw IllegalMoveError.
  virtual std::optional<Move> next(const GameState& state) = 0;
};

// A move spelled with names, as in scripts and the interactive prompt.
struct NamedMove {
  Side side = Side::kLeft;
  std::string role;
  Element target;
  bool backward = false;
};

// Parses "side role target [back]"; side is left|right. Throws
// PreconditionError on malformed text.
NamedMove parse_named_move(const std::string& text);

// Resolves names against the models of `sb`; throws IllegalMoveError with
// `index` when a name is unknown.
Move resolve(const StratifiedBisim& sb, const NamedMove& m,
             std::size_t index = 0);

// Replays a fixed list of moves; concedes when the list runs out.
class ScriptedSpoiler : public SpoilerSource {
 public:
  explicit ScriptedSpoiler(std::vector<NamedMove> moves)
      : moves_(std::move(moves)) {}
  std::optional<Move> next(const GameState& state) override;

 private:
  std::vector<NamedMove> moves_;
  std::size_t cursor_ = 0;
};

// Plays optimally by searching the game tree over element pairs. The search
// uses only the move rules, never the stratified layers.
class ExhaustiveSpoiler : public SpoilerSource {
 public:
  std::optional<Move> next(const GameState& state) override;
  // Whether Spoiler can force a win from (a, b) within `remaining` rounds.
  bool wins(const StratifiedBisim& sb, Index a, Index b,
            std::size_t remaining);

 private:
  std::map<std::tuple<Index, Index, std::size_t>, bool> memo_;
};

// Prompts on `out` and reads moves from `in`, re-prompting after invalid or
// illegal input. End of input or "quit" concedes.
class InteractiveSpoiler : public SpoilerSource {
 public:
  InteractiveSpoiler(std::istream& in, std::ostream& out)
      : in_(&in), out_(&out) {}
  std::optional<Move> next(const GameState& state) override;

 private:
  std::istream* in_;
  std::ostream* out_;
};

struct RoundRecord {
  std::size_t round;
  Move spoiler;
  std::optional<Move> duplicator;
};

struct Transcript {
  std::vector<RoundRecord> rounds;
  Player winner = Player::kDuplicator;
  std::string reason;
  GamePosition position;
  LogicSelector logic;
  std::size_t rounds_requested = 0;

  // One line per round followed by the WINNER line.
  std::vector<std::string> lines(const StratifiedBisim& sb) const;
};

// Plays `rounds` rounds (StratifiedBisim::kOmega plays |I|*|J| rounds, past
// which no further pair is ever separated). Duplicator replies with
// duplicator_strategy, falling back to the smallest legal reply when she is
// already lost. Scripted illegal moves propagate as IllegalMoveError.
Transcript run_game(const StratifiedBisim& sb, SpoilerSource& spoiler);

}  // namespace dlgames

#endif  // DLGAMES_GAME_HPP_
