// Copyright 2026 The Itinera Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ITINERA_TEXT_H_
#define ITINERA_TEXT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace itinera {

// Lowercases ASCII and the Latin-1/Latin Extended-A letters used in French.
// Other code points pass through unchanged.
std::string FoldCase(std::string_view text);

// Case-folds, replaces apostrophes (' and U+2019) with spaces and collapses
// whitespace: "À l'Ouest de" -> "à l ouest de".
std::string NormalizePhrase(std::string_view text);

std::vector<std::string> SplitWords(std::string_view text);
std::string JoinWords(const std::vector<std::string>& words);

std::string_view TrimWhitespace(std::string_view text);

// Parses a digit string ("10", "2,5", "1990") or one of the French number
// words un/une..vingt, cent, mille.
std::optional<double> ParseNumber(std::string_view form);

bool IsMonthName(std::string_view word);

// Renders 2.0 as "2" and 2.5 as "2.5".
std::string FormatNumber(double value);

}  // namespace itinera

#endif  // ITINERA_TEXT_H_
