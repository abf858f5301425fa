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

#include "dpp/text/rouge.hpp"

#include <algorithm>
#include <vector>

#include "dpp/error.hpp"

namespace dpp::text {
namespace {

int Overlap(const NgramCounts& a, const NgramCounts& b) {
  int total = 0;
  for (const auto& [gram, count] : a) {
    const auto it = b.find(gram);
    if (it != b.end()) total += std::min(count, it->second);
  }
  return total;
}

}  // namespace

double HarmonicMean(double p, double r) {
  return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0;
}

NgramScore ScoreCounts(const NgramCounts& candidate, const NgramCounts& reference) {
  NgramScore score;
  const int overlap = Overlap(candidate, reference);
  const int c = TotalCount(candidate);
  const int r = TotalCount(reference);
  score.precision = c > 0 ? static_cast<double>(overlap) / c : 0.0;
  score.recall = r > 0 ? static_cast<double>(overlap) / r : 0.0;
  score.f_measure = HarmonicMean(score.precision, score.recall);
  return score;
}

NgramScore ScoreNgrams(std::string_view candidate,
                       std::span<const std::string> references, int n) {
  Require(n == 1 || n == 2, "ScoreNgrams: n must be 1 or 2");
  const NgramCounts cand = CountNgrams(Tokenize(candidate), n);
  const int cand_total = TotalCount(cand);
  NgramScore score;
  if (cand_total == 0) return score;

  long matches = 0;
  long ref_total = 0;
  NgramCounts ceiling;
  for (const std::string& ref : references) {
    const NgramCounts counts = CountNgrams(Tokenize(ref), n);
    matches += Overlap(cand, counts);
    ref_total += TotalCount(counts);
    for (const auto& [gram, count] : counts) {
      int& best = ceiling[gram];
      best = std::max(best, count);
    }
  }
  score.recall = ref_total > 0 ? static_cast<double>(matches) / static_cast<double>(ref_total) : 0.0;
  score.precision = static_cast<double>(Overlap(cand, ceiling)) / cand_total;
  score.f_measure = HarmonicMean(score.precision, score.recall);
  return score;
}

}  // namespace dpp::text
