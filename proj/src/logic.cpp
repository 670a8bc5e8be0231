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

#include "dlgames/logic.hpp"

#include "dlgames/errors.hpp"

namespace dlgames {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

bool LogicSelector::subset_of(const LogicSelector& other) const {
  return (mask() & ~other.mask()) == 0;
}

std::string LogicSelector::to_string() const {
  std::string out;
  auto add = [&](bool on, const char* tag) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += tag;
  };
  add(self, "Self");
  add(inverse, "I");
  add(boolean_roles, "b");
  add(nominals, "O");
  return out;
}

LogicSelector LogicSelector::parse(std::string_view text) {
  LogicSelector out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    auto comma = text.find(',');
    auto tag = trim(text.substr(0, comma));
    if (tag == "Self") {
      out.self = true;
    } else if (tag == "I") {
      out.inverse = true;
    } else if (tag == "b") {
      out.boolean_roles = true;
    } else if (tag == "O") {
      out.nominals = true;
    } else {
      throw PreconditionError("unknown logic extension '" + std::string(tag) +
                              "' (expected Self, I, b or O)");
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

LogicSelector LogicSelector::from_mask(unsigned mask) {
  LogicSelector out;
  out.self = mask & 1u;
  out.inverse = mask & 2u;
  out.boolean_roles = mask & 4u;
  out.nominals = mask & 8u;
  return out;
}

unsigned LogicSelector::mask() const {
  return (self ? 1u : 0u) | (inverse ? 2u : 0u) | (boolean_roles ? 4u : 0u) |
         (nominals ? 8u : 0u);
}

std::array<LogicSelector, 16> LogicSelector::all() {
  std::array<LogicSelector, 16> out;
  for (unsigned m = 0; m < 16; ++m) out[m] = from_mask(m);
  return out;
}

}  // namespace dlgames
