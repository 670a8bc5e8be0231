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

#include "dlgames/bisim.hpp"

#include <algorithm>

#include "dlgames/errors.hpp"

namespace dlgames {
namespace {

// Role-name 2-types of ordered pairs, packed as 64-bit words.
class TypeTable {
 public:
  TypeTable() = default;
  explicit TypeTable(const Model& m)
      : n_(m.size()), words_((m.role_names().size() + 63) / 64) {
    bits_.assign(n_ * n_ * words_, 0);
    for (Index r = 0; r < m.role_names().size(); ++r) {
      for (Index a = 0; a < n_; ++a) {
        for (Index b : m.successors(r, a)) {
          bits_[(a * n_ + b) * words_ + r / 64] |= std::uint64_t{1} << (r % 64);
        }
      }
    }
  }

  // 2-type of (from, to) in this table equals that of (from2, to2) in other.
  bool same(Index from, Index to, const TypeTable& other, Index from2,
            Index to2) const {
    const std::uint64_t* x = &bits_[(from * n_ + to) * words_];
    const std::uint64_t* y = &other.bits_[(from2 * other.n_ + to2) * words_];
    return std::equal(x, x + words_, y);
  }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

struct Arena {
  const Model* side[2];
  LogicSelector logic;
  TypeTable types[2];

  Arena(const Model& l, const Model& r, const LogicSelector& lg)
      : side{&l, &r}, logic(lg) {
    if (logic.boolean_roles) {
      types[0] = TypeTable(l);
      types[1] = TypeTable(r);
    }
  }

  // The step from cur to next on side s matches the step from cur2 to next2
  // on the other side. Role and direction agreement is the caller's job.
  bool types_match(int s, Index cur, Index next, Index cur2,
                   Index next2) const {
    if (!logic.boolean_roles) return true;
    const TypeTable& t = types[s];
    const TypeTable& u = types[1 - s];
    if (!t.same(cur, next, u, cur2, next2)) return false;
    return !logic.inverse || t.same(next, cur, u, next2, cur2);
  }
};

inline bool z_at(const std::vector<std::uint8_t>& z, std::size_t m, Index a,
                 Index b) {
  return z[a * m + b] != 0;
}

// Some reply to Spoiler's step from x to x2 on side s (role r, direction
// backward) lands in z, where y is the other side's current element.
bool answerable(const Arena& ar, const std::vector<std::uint8_t>& z, int s,
                Index x, Index y, Index r, bool backward, Index x2) {
  const Model& other = *ar.side[1 - s];
  const std::size_t m = ar.side[1]->size();
  const auto& cands =
      backward ? other.predecessors(r, y) : other.successors(r, y);
  for (Index y2 : cands) {
    if (!ar.types_match(s, x, x2, y, y2)) continue;
    bool in = s == 0 ? z_at(z, m, x2, y2) : z_at(z, m, y2, x2);
    if (in) return true;
  }
  return false;
}

// (a, b) in Z_{i+1} given z = Z_i and (a, b) in Z_i.
bool survives(const Arena& ar, const std::vector<std::uint8_t>& z, Index a,
              Index b) {
  const std::size_t roles = ar.side[0]->role_names().size();
  for (int s = 0; s < 2; ++s) {
    const Model& mine = *ar.side[s];
    const Index x = s == 0 ? a : b;
    const Index y = s == 0 ? b : a;
    for (Index r = 0; r < roles; ++r) {
      for (Index x2 : mine.successors(r, x)) {
        if (!answerable(ar, z, s, x, y, r, false, x2)) return false;
      }
      if (!ar.logic.inverse) continue;
      for (Index x2 : mine.predecessors(r, x)) {
        if (!answerable(ar, z, s, x, y, r, true, x2)) return false;
      }
    }
  }
  return true;
}

std::vector<std::uint8_t> harmony_layer(const Model& l, const Model& r,
                                        const LogicSelector& logic) {
  std::vector<std::uint8_t> z(l.size() * r.size(), 0);
  for (Index a = 0; a < l.size(); ++a) {
    for (Index b = 0; b < r.size(); ++b) {
      z[a * r.size() + b] = harmonious(l, a, r, b, logic);
    }
  }
  return z;
}

std::vector<std::uint8_t> refine_serial(const Arena& ar,
                                        const std::vector<std::uint8_t>& z) {
  const std::size_t n = ar.side[0]->size();
  const std::size_t m = ar.side[1]->size();
  std::vector<std::uint8_t> next(n * m, 0);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < m; ++b) {
      next[a * m + b] = z[a * m + b] && survives(ar, z, a, b);
    }
  }
  return next;
}

std::vector<std::uint8_t> refine_parallel(const Arena& ar,
                                          const std::vector<std::uint8_t>& z) {
  const std::size_t n = ar.side[0]->size();
  const std::size_t m = ar.side[1]->size();
  const long long total = static_cast<long long>(n * m);
  std::vector<std::uint8_t> next(n * m, 0);
  // Each pair writes only its own cell; z is read-only for the sweep.
#pragma omp parallel for schedule(dynamic, 64)
  for (long long p = 0; p < total; ++p) {
    const Index a = static_cast<Index>(p) / m;
    const Index b = static_cast<Index>(p) % m;
    next[p] = z[p] && survives(ar, z, a, b);
  }
  return next;
}

}  // namespace

HarmonyCheck harmony(const Element& a, const Interpretation& i,
                     const Element& b, const Interpretation& j,
                     const Vocabulary& v, const LogicSelector& logic) {
  if (!i.domain.count(a)) throw UnknownElementError("unknown element " + a);
  if (!j.domain.count(b)) throw UnknownElementError("unknown element " + b);
  HarmonyCheck out{a, b, logic, true, {}};
  for (const auto& c : v.concepts) {
    if (i.concept_extent(c).count(a) != j.concept_extent(c).count(b)) {
      out.failures.push_back("concept " + c + " differs");
    }
  }
  if (logic.nominals) {
    for (const auto& o : v.individuals) {
      auto x = i.individuals.find(o);
      auto y = j.individuals.find(o);
      bool named_a = x != i.individuals.end() && x->second == a;
      bool named_b = y != j.individuals.end() && y->second == b;
      if (named_a != named_b) out.failures.push_back("nominal " + o + " differs");
    }
  }
  if (logic.self) {
    for (const auto& r : v.roles) {
      if (i.has_edge(r, a, a) != j.has_edge(r, b, b)) {
        out.failures.push_back("self-loop on " + r + " differs");
      }
    }
  }
  out.verdict = out.failures.empty();
  return out;
}

bool harmonious(const Model& left, Index a, const Model& right, Index b,
                const LogicSelector& logic) {
  for (Index c = 0; c < left.concept_names().size(); ++c) {
    if (left.member(c, a) != right.member(c, b)) return false;
  }
  if (logic.nominals) {
    for (Index o = 0; o < left.individual_names().size(); ++o) {
      if ((left.individual(o) == a) != (right.individual(o) == b)) {
        return false;
      }
    }
  }
  if (logic.self) {
    for (Index r = 0; r < left.role_names().size(); ++r) {
      if (left.edge(r, a, a) != right.edge(r, b, b)) return false;
    }
  }
  return true;
}

std::vector<std::string> harmony_failures(const Model& left, Index a,
                                          const Model& right, Index b,
                                          const LogicSelector& logic) {
  std::vector<std::string> out;
  for (Index c = 0; c < left.concept_names().size(); ++c) {
    if (left.member(c, a) != right.member(c, b)) {
      out.push_back("concept " + left.concept_names()[c] + " differs");
    }
  }
  if (logic.nominals) {
    for (Index o = 0; o < left.individual_names().size(); ++o) {
      if ((left.individual(o) == a) != (right.individual(o) == b)) {
        out.push_back("nominal " + left.individual_names()[o] + " differs");
      }
    }
  }
  if (logic.self) {
    for (Index r = 0; r < left.role_names().size(); ++r) {
      if (left.edge(r, a, a) != right.edge(r, b, b)) {
        out.push_back("self-loop on " + left.role_names()[r] + " differs");
      }
    }
  }
  return out;
}

bool StratifiedBisim::in_layer(std::size_t remaining, Index a, Index b) const {
  std::size_t i = std::min(remaining, layers_.size() - 1);
  return layers_[i][a * right_->size() + b] != 0;
}

bool StratifiedBisim::stable() const {
  return layers_.size() >= 2 &&
         layers_[layers_.size() - 1] == layers_[layers_.size() - 2];
}

bool StratifiedBisim::duplicator_wins() const {
  return in_layer(rounds_, left_->point(), right_->point());
}

std::optional<std::size_t> StratifiedBisim::distinguishing_round() const {
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (!layers_[i][left_->point() * right_->size() + right_->point()]) {
      return i;
    }
  }
  return std::nullopt;
}

StratifiedBisim stratified_bisim(const PointedInterpretation& p,
                                 const PointedInterpretation& q,
                                 const LogicSelector& logic,
                                 std::size_t rounds, Kernel kernel) {
  if (!(p.interp.vocab == q.interp.vocab)) {
    throw VocabularyMismatchError(
        "the two interpretations have different vocabularies");
  }
  return stratified_bisim(std::make_shared<const Model>(p),
                          std::make_shared<const Model>(q), logic, rounds,
                          kernel);
}

StratifiedBisim stratified_bisim(std::shared_ptr<const Model> left,
                                 std::shared_ptr<const Model> right,
                                 const LogicSelector& logic,
                                 std::size_t rounds, Kernel kernel) {
  if (!(left->vocabulary() == right->vocabulary())) {
    throw VocabularyMismatchError(
        "the two interpretations have different vocabularies");
  }
  StratifiedBisim sb;
  sb.left_ = std::move(left);
  sb.right_ = std::move(right);
  sb.logic_ = logic;
  sb.rounds_ = rounds;
  Arena ar(*sb.left_, *sb.right_, logic);
  sb.layers_.push_back(harmony_layer(*sb.left_, *sb.right_, logic));
  // Once two consecutive layers agree every later layer does too.
  while (sb.layers_.size() <= rounds && !sb.stable()) {
    const auto& z = sb.layers_.back();
    sb.layers_.push_back(kernel == Kernel::kSerial ? refine_serial(ar, z)
                                                   : refine_parallel(ar, z));
  }
  return sb;
}

std::vector<Move> spoiler_moves(const Model& left, Index a, const Model& right,
                                Index b, const LogicSelector& logic) {
  std::vector<Move> out;
  const Model* sides[2] = {&left, &right};
  const Index cur[2] = {a, b};
  for (int s = 0; s < 2; ++s) {
    for (Index r = 0; r < sides[s]->role_names().size(); ++r) {
      for (Index t : sides[s]->successors(r, cur[s])) {
        out.push_back({s == 0 ? Side::kLeft : Side::kRight, r, t, false});
      }
      if (!logic.inverse) continue;
      for (Index t : sides[s]->predecessors(r, cur[s])) {
        out.push_back({s == 0 ? Side::kLeft : Side::kRight, r, t, true});
      }
    }
  }
  return out;
}

void require_legal_request(const Model& left, Index a, const Model& right,
                           Index b, const LogicSelector& logic,
                           const Move& req) {
  const Model& m = req.side == Side::kLeft ? left : right;
  const Index cur = req.side == Side::kLeft ? a : b;
  if (req.role >= m.role_names().size()) {
    throw IllegalMoveError("role is not in the vocabulary");
  }
  if (req.target >= m.size()) {
    throw IllegalMoveError("target is not in the domain");
  }
  const std::string& rn = m.role_names()[req.role];
  if (req.backward) {
    if (!logic.inverse) {
      throw IllegalMoveError("backward moves need I in the logic");
    }
    if (!m.edge(req.role, req.target, cur)) {
      throw IllegalMoveError(m.element_name(req.target) +
                             " is not an " + rn + "-predecessor of " +
                             m.element_name(cur));
    }
  } else if (!m.edge(req.role, cur, req.target)) {
    throw IllegalMoveError(m.element_name(req.target) + " is not an " + rn +
                           "-successor of " + m.element_name(cur));
  }
}

bool is_legal_reply(const Model& left, Index a, const Model& right, Index b,
                    const LogicSelector& logic, const Move& req,
                    const Move& reply) {
  if (reply.side == req.side || reply.role != req.role ||
      reply.backward != req.backward) {
    return false;
  }
  const Model& other = reply.side == Side::kLeft ? left : right;
  const Index y = reply.side == Side::kLeft ? a : b;
  if (reply.target >= other.size()) return false;
  bool edge = reply.backward ? other.edge(reply.role, reply.target, y)
                             : other.edge(reply.role, y, reply.target);
  if (!edge) return false;
  if (!logic.boolean_roles) return true;
  const Model& mine = req.side == Side::kLeft ? left : right;
  const Index x = req.side == Side::kLeft ? a : b;
  if (mine.role_set(x, req.target) != other.role_set(y, reply.target)) {
    return false;
  }
  return !logic.inverse ||
         mine.role_set(req.target, x) == other.role_set(reply.target, y);
}

std::optional<Move> duplicator_strategy(const StratifiedBisim& sb, Index a,
                                        Index b, std::size_t remaining,
                                        const Move& req) {
  if (remaining == 0) {
    throw PreconditionError("no rounds remain to be played");
  }
  require_legal_request(sb.left(), a, sb.right(), b, sb.logic(), req);
  const bool left_req = req.side == Side::kLeft;
  const Model& other = left_req ? sb.right() : sb.left();
  const Index y = left_req ? b : a;
  const auto& cands = req.backward ? other.predecessors(req.role, y)
                                   : other.successors(req.role, y);
  // Candidates are sorted by element index, which is name order.
  for (Index t : cands) {
    Move reply{left_req ? Side::kRight : Side::kLeft, req.role, t,
               req.backward};
    if (!is_legal_reply(sb.left(), a, sb.right(), b, sb.logic(), req, reply)) {
      continue;
    }
    Index na = left_req ? req.target : t;
    Index nb = left_req ? t : req.target;
    if (sb.in_layer(remaining - 1, na, nb)) return reply;
  }
  return std::nullopt;
}

}  // namespace dlgames
