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

#ifndef DPP_TEXT_SUMMARY_HPP_
#define DPP_TEXT_SUMMARY_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "dpp/kernel.hpp"
#include "dpp/text/cluster.hpp"

namespace dpp::text {

inline constexpr std::size_t kDefaultBudget = 665;

struct OracleResult {
  Subset chosen;
  std::vector<Index> order;  // selection order
  std::vector<double> mean_f;  // score of each pick when it was made
  std::size_t total_bytes = 0;
};

// Greedy extractive target: each round adds the sentence, among those that
// fit the remaining byte budget, with the largest mean per-reference unigram
// F against the references depleted by the words already covered. Ties go
// to the lowest index. Stops when nothing fits or the best score is 0.
// kInvalidArgument when the cluster has no references.
OracleResult OracleSummary(const Cluster& cluster, std::size_t budget);

// Sentences of `y` in (document, position) order joined by single spaces,
// cut to at most `budget` bytes.
std::string AssembleSummary(const Cluster& cluster, const Subset& y,
                            std::size_t budget);

// The first `budget` bytes of the cluster text.
std::string BeginBaseline(const Cluster& cluster, std::size_t budget);

}  // namespace dpp::text

#endif  // DPP_TEXT_SUMMARY_HPP_
