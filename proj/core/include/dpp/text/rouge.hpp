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

// Clipped n-gram overlap against one or more references.
//
// Recall pools matches over references: sum_r |C ∩ R_r| / sum_r |R_r|.
// Precision clips each candidate n-gram by its largest count in any single
// reference: sum_g min(C_g, max_r R_{r,g}) / |C|.

#ifndef DPP_TEXT_ROUGE_HPP_
#define DPP_TEXT_ROUGE_HPP_

#include <span>
#include <string>

#include "dpp/text/tokenize.hpp"

namespace dpp::text {

struct NgramScore {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
};

double HarmonicMean(double p, double r);

// n must be 1 or 2. An empty candidate scores zero.
NgramScore ScoreNgrams(std::string_view candidate,
                       std::span<const std::string> references, int n);

// Count-level overlap with a single reference multiset.
NgramScore ScoreCounts(const NgramCounts& candidate, const NgramCounts& reference);

}  // namespace dpp::text

#endif  // DPP_TEXT_ROUGE_HPP_
