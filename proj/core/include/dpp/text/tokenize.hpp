// Copyright 2026 The dppsum Authors.
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

// Tokens are maximal runs of ASCII letters and digits, lowercased. Bytes
// >= 0x80 count as token characters so UTF-8 words stay whole.

#ifndef DPP_TEXT_TOKENIZE_HPP_
#define DPP_TEXT_TOKENIZE_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace dpp::text {

std::vector<std::string> Tokenize(std::string_view text);

using NgramCounts = std::map<std::string, int>;

// n-grams over consecutive tokens, joined with a single space.
NgramCounts CountNgrams(const std::vector<std::string>& tokens, int n);

int TotalCount(const NgramCounts& counts);

}  // namespace dpp::text

#endif  // DPP_TEXT_TOKENIZE_HPP_
