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

#ifndef DLGAMES_LOGIC_HPP_
#define DLGAMES_LOGIC_HPP_

#include <array>
#include <string>
#include <string_view>

namespace dlgames {

// Which extensions of ALC are active: Self, inverse roles (I), safe boolean
// role combinations (b) and nominals (O).
struct LogicSelector {
  bool self = false;
  bool inverse = false;
  bool boolean_roles = false;
  bool nominals = false;

  bool operator==(const LogicSelector&) const = default;

  bool empty() const { return !(self || inverse || boolean_roles || nominals); }

  // True iff every extension of *this is also in `other`.
  bool subset_of(const LogicSelector& other) const;

  // Canonical rendering, e.g. "Self,I,b,O"; "" for plain ALC.
  std::string to_string() const;

  // Comma-separated subset of {Self, I, b, O}; whitespace around entries is
  // ignored. Throws PreconditionError on unknown tags.
  static LogicSelector parse(std::string_view text);

  // Bit i of `mask` selects Self, I, b, O in that order.
  static LogicSelector from_mask(unsigned mask);
  unsigned mask() const;

  // All 16 selectors, ordered by mask.
  static std::array<LogicSelector, 16> all();
};

}  // namespace dlgames

#endif  // DLGAMES_LOGIC_HPP_
