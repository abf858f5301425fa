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

#ifndef DPP_TEXT_LEXRANK_HPP_
#define DPP_TEXT_LEXRANK_HPP_

#include "dpp/linalg.hpp"

namespace dpp::text {

struct LexRankOptions {
  double tolerance = 1e-10;  // infinity norm between successive iterates
  int max_iterations = 10000;
};

struct LexRankResult {
  Vector scores;  // L1-normalized
  int iterations = 0;
  bool converged = false;
};

// Stationary distribution of the row-normalized similarity matrix, by power
// iteration from the uniform vector. All-zero rows are replaced by uniform
// rows; no damping is applied. kInvalidArgument on negative or non-finite
// entries.
LexRankResult LexRank(const Matrix& similarity, const LexRankOptions& options = {});

}  // namespace dpp::text

#endif  // DPP_TEXT_LEXRANK_HPP_
