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

// JSON file format for pointed interpretations and reduction reports.
//
//   {
//     "domain": ["d", "e"],
//     "point": "d",
//     "individuals": {"o": "e"},
//     "concepts": {"A": ["d"]},
//     "roles": {"r": [["d", "e"]]}
//   }
//
// The keys of individuals, concepts and roles form the vocabulary; a name
// with an empty list is in the vocabulary with an empty extent. "point" may
// be omitted, in which case the first listed domain element is the point.
// Unknown keys are rejected.

#ifndef DLGAMES_IO_HPP_
#define DLGAMES_IO_HPP_

#include <istream>
#include <string>

#include "dlgames/interpretation.hpp"
#include "dlgames/reductions.hpp"
#include "json.hpp"

namespace dlgames {

// Throws FormatError naming the offending field.
PointedInterpretation interpretation_from_json(const nlohmann::json& doc);
PointedInterpretation read_interpretation(std::istream& in);
PointedInterpretation read_interpretation_file(const std::string& path);

// Keys and lists come out sorted, so equal inputs serialize identically.
nlohmann::json interpretation_to_json(const PointedInterpretation& p);
nlohmann::json vocabulary_to_json(const Vocabulary& v);
nlohmann::json report_to_json(const ReductionReport& r);

// dump(2) plus a trailing newline.
std::string to_text(const nlohmann::json& doc);

}  // namespace dlgames

#endif  // DLGAMES_IO_HPP_
