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

// Recursive-descent parser for the ASCII concept syntax:
//
//   concept := unary ('&' unary)*
//   unary   := '!' unary | 'exists' role '.' ('Self' | unary) | primary
//   primary := name | '{' name '}' | '(' concept ')'
//   role    := ratom (op ratom)*        op in { '&', '|', '\' }, not mixed
//   ratom   := name | name '-' | '(' role ')'
//
// Names are identifiers [A-Za-z_][A-Za-z0-9_]* or backquoted `any text`.
// '&' is left-associative. Mixing role operators without parentheses is a
// syntax error; so is applying '-' to anything but a role name.

#ifndef DLGAMES_PARSER_HPP_
#define DLGAMES_PARSER_HPP_

#include <string_view>

#include "dlgames/concept.hpp"

namespace dlgames {

// Throws SyntaxError (with position) on malformed input.
Concept parse_concept(std::string_view text);
Role parse_role(std::string_view text);

}  // namespace dlgames

#endif  // DLGAMES_PARSER_HPP_
