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

#include "dpp/text/tokenize.hpp"

#include "dpp/error.hpp"

namespace dpp::text {
namespace {

bool IsTokenByte(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c >= 0x80;
}

}  // namespace

std::vector<std::string> Tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (IsTokenByte(c)) {
      current += (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : ch;
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

NgramCounts CountNgrams(const std::vector<std::string>& tokens, int n) {
  Require(n >= 1, "CountNgrams: n must be positive");
  NgramCounts counts;
  const auto order = static_cast<std::size_t>(n);
  for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
    std::string gram = tokens[i];
    for (std::size_t k = 1; k < order; ++k) {
      gram += ' ';
      gram += tokens[i + k];
    }
    ++counts[gram];
  }
  return counts;
}

int TotalCount(const NgramCounts& counts) {
  int total = 0;
  for (const auto& [gram, c] : counts) total += c;
  return total;
}

}  // namespace dpp::text
