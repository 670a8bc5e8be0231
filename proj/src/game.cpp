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

#include "dlgames/game.hpp"

#include <sstream>

#include "dlgames/errors.hpp"

namespace dlgames {
namespace {

const Model& model_of(const StratifiedBisim& sb, Side s) {
  return s == Side::kLeft ? sb.left() : sb.right();
}

std::string step_label(const StratifiedBisim& sb, const Move& m) {
  return model_of(sb, m.side).role_names()[m.role] + (m.backward ? "-" : "");
}

std::string describe(const StratifiedBisim& sb, const Move& m) {
  return std::string(to_string(m.side)) + " " + step_label(sb, m) + " " +
         model_of(sb, m.side).element_name(m.target);
}

void extend(const StratifiedBisim& sb, GamePosition& pos, const Move& m) {
  auto& hist = m.side == Side::kLeft ? pos.left_history : pos.right_history;
  hist.push_back(step_label(sb, m));
  hist.push_back(model_of(sb, m.side).element_name(m.target));
}

}  // namespace

const char* to_string(Player p) {
  return p == Player::kSpoiler ? "spoiler" : "duplicator";
}

const char* to_string(Side s) { return s == Side::kLeft ? "left" : "right"; }

NamedMove parse_named_move(const std::string& text) {
  std::istringstream in(text);
  std::string side, role, target, extra, more;
  if (!(in >> side >> role >> target)) {
    throw PreconditionError("expected: side role target [back]");
  }
  NamedMove m;
  if (side == "left") {
    m.side = Side::kLeft;
  } else if (side == "right") {
    m.side = Side::kRight;
  } else {
    throw PreconditionError("side must be left or right, got " + side);
  }
  m.role = role;
  m.target = target;
  if (in >> extra) {
    if (extra != "back") {
      throw PreconditionError("expected 'back' or nothing, got " + extra);
    }
    m.backward = true;
  }
  if (in >> more) throw PreconditionError("trailing input: " + more);
  return m;
}

Move resolve(const StratifiedBisim& sb, const NamedMove& m,
             std::size_t index) {
  const Model& mod = model_of(sb, m.side);
  auto r = mod.find_role(m.role);
  if (!r) throw IllegalMoveError("unknown role " + m.role, index);
  auto t = mod.find_element(m.target);
  if (!t) throw IllegalMoveError("unknown element " + m.target, index);
  return Move{m.side, *r, *t, m.backward};
}

std::optional<Move> ScriptedSpoiler::next(const GameState& state) {
  if (cursor_ >= moves_.size()) return std::nullopt;
  const std::size_t index = cursor_++;
  Move m = resolve(*state.sb, moves_[index], index);
  try {
    require_legal_request(state.sb->left(), state.left, state.sb->right(),
                          state.right, state.sb->logic(), m);
  } catch (const IllegalMoveError& e) {
    throw IllegalMoveError(e.what(), index);
  }
  return m;
}

bool ExhaustiveSpoiler::wins(const StratifiedBisim& sb, Index a, Index b,
                             std::size_t remaining) {
  const Model& l = sb.left();
  const Model& r = sb.right();
  if (!harmonious(l, a, r, b, sb.logic())) return true;
  if (remaining == 0) return false;
  auto key = std::make_tuple(a, b, remaining);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool result = false;
  for (const Move& req : spoiler_moves(l, a, r, b, sb.logic())) {
    const bool left_req = req.side == Side::kLeft;
    const Model& other = left_req ? r : l;
    bool refuted = false;
    for (Index t = 0; t < other.size() && !refuted; ++t) {
      Move reply{left_req ? Side::kRight : Side::kLeft, req.role, t,
                 req.backward};
      if (!is_legal_reply(l, a, r, b, sb.logic(), req, reply)) continue;
      refuted = !wins(sb, left_req ? req.target : t, left_req ? t : req.target,
                      remaining - 1);
    }
    if (!refuted) {
      result = true;
      break;
    }
  }
  memo_[key] = result;
  return result;
}

std::optional<Move> ExhaustiveSpoiler::next(const GameState& state) {
  const StratifiedBisim& sb = *state.sb;
  auto moves = spoiler_moves(sb.left(), state.left, sb.right(), state.right,
                             sb.logic());
  if (moves.empty()) return std::nullopt;
  for (const Move& req : moves) {
    const bool left_req = req.side == Side::kLeft;
    const Model& other = left_req ? sb.right() : sb.left();
    bool refuted = false;
    for (Index t = 0; t < other.size() && !refuted; ++t) {
      Move reply{left_req ? Side::kRight : Side::kLeft, req.role, t,
                 req.backward};
      if (!is_legal_reply(sb.left(), state.left, sb.right(), state.right,
                          sb.logic(), req, reply)) {
        continue;
      }
      refuted = !wins(sb, left_req ? req.target : t,
                      left_req ? t : req.target, state.remaining - 1);
    }
    if (!refuted) return req;
  }
  // No winning move exists; any legal move keeps the play going.
  return moves.front();
}

std::optional<Move> InteractiveSpoiler::next(const GameState& state) {
  const StratifiedBisim& sb = *state.sb;
  for (;;) {
    *out_ << "round " << state.round
          << ": your move (side role target [back]): " << std::flush;
    std::string line;
    if (!std::getline(*in_, line)) {
      *out_ << "\n";
      return std::nullopt;
    }
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line == "quit") return std::nullopt;
    try {
      Move m = resolve(sb, parse_named_move(line));
      require_legal_request(sb.left(), state.left, sb.right(), state.right,
                            sb.logic(), m);
      return m;
    } catch (const Error& e) {
      *out_ << "illegal move: " << e.what() << "\n";
    }
  }
}

std::vector<std::string> Transcript::lines(const StratifiedBisim& sb) const {
  std::vector<std::string> out;
  for (const auto& rr : rounds) {
    std::string line = "round " + std::to_string(rr.round) +
                       ": SPOILER " + describe(sb, rr.spoiler) + " | ";
    line += rr.duplicator ? "DUPLICATOR " + describe(sb, *rr.duplicator)
                          : std::string("DUPLICATOR none");
    out.push_back(std::move(line));
  }
  out.push_back(std::string("WINNER: ") + to_string(winner) + " (" + reason +
                ")");
  return out;
}

Transcript run_game(const StratifiedBisim& sb, SpoilerSource& spoiler) {
  const Model& l = sb.left();
  const Model& r = sb.right();
  const std::size_t total = sb.rounds() == StratifiedBisim::kOmega
                                ? l.size() * r.size()
                                : sb.rounds();
  Transcript t;
  t.logic = sb.logic();
  t.rounds_requested = total;
  Index a = l.point();
  Index b = r.point();
  t.position.left_history.push_back(l.element_name(a));
  t.position.right_history.push_back(r.element_name(b));

  auto start = harmony_failures(l, a, r, b, sb.logic());
  if (!start.empty()) {
    t.winner = Player::kSpoiler;
    t.reason = "no harmony at the start: " + start.front();
    return t;
  }
  for (std::size_t round = 1; round <= total; ++round) {
    const std::size_t remaining = total - round + 1;
    if (spoiler_moves(l, a, r, b, sb.logic()).empty()) {
      t.winner = Player::kDuplicator;
      t.reason = "spoiler has no move in round " + std::to_string(round);
      return t;
    }
    GameState state{&sb, a, b, round, remaining, &t.position};
    auto req = spoiler.next(state);
    if (!req) {
      t.winner = Player::kDuplicator;
      t.reason = "spoiler conceded in round " + std::to_string(round);
      return t;
    }
    require_legal_request(l, a, r, b, sb.logic(), *req);

    auto reply = duplicator_strategy(sb, a, b, remaining, *req);
    if (!reply) {
      // Already lost: play the smallest legal reply, if any, so the
      // transcript shows where harmony breaks.
      const bool left_req = req->side == Side::kLeft;
      const Model& other = left_req ? r : l;
      for (Index c = 0; c < other.size() && !reply; ++c) {
        Move cand{left_req ? Side::kRight : Side::kLeft, req->role, c,
                  req->backward};
        if (is_legal_reply(l, a, r, b, sb.logic(), *req, cand)) reply = cand;
      }
    }
    t.rounds.push_back({round, *req, reply});
    // The position holds completed rounds only, so both histories keep
    // equal length.
    if (!reply) {
      t.winner = Player::kSpoiler;
      t.reason = "duplicator has no reply in round " + std::to_string(round);
      return t;
    }
    extend(sb, t.position, *req);
    extend(sb, t.position, *reply);
    a = req->side == Side::kLeft ? req->target : reply->target;
    b = req->side == Side::kLeft ? reply->target : req->target;
    auto fails = harmony_failures(l, a, r, b, sb.logic());
    if (!fails.empty()) {
      t.winner = Player::kSpoiler;
      t.reason = "harmony fails after round " + std::to_string(round) + ": " +
                 fails.front();
      return t;
    }
  }
  t.winner = Player::kDuplicator;
  t.reason = "survived " + std::to_string(total) + " rounds";
  return t;
}

}  // namespace dlgames
