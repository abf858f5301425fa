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

#include "dpp/text/lexrank.hpp"

#include "dpp/error.hpp"

namespace dpp::text {

LexRankResult LexRank(const Matrix& similarity, const LexRankOptions& options) {
  const Index n = similarity.rows();
  Require(similarity.cols() == n, "LexRank: matrix must be square");
  Require(similarity.allFinite() && (n == 0 || similarity.minCoeff() >= 0.0),
          "LexRank: entries must be finite and nonnegative");
  LexRankResult result;
  if (n == 0) {
    result.scores = Vector(0);
    result.converged = true;
    return result;
  }

  Matrix transition = similarity;
  for (Index i = 0; i < n; ++i) {
    const double row_sum = transition.row(i).sum();
    if (row_sum > 0.0) {
      transition.row(i) /= row_sum;
    } else {
      transition.row(i).setConstant(1.0 / static_cast<double>(n));
    }
  }
  const Matrix step = transition.transpose();

  Vector p = Vector::Constant(n, 1.0 / static_cast<double>(n));
  while (result.iterations < options.max_iterations) {
    Vector next = step * p;
    next /= next.sum();
    ++result.iterations;
    const double change = (next - p).lpNorm<Eigen::Infinity>();
    p = std::move(next);
    if (change < options.tolerance) {
      result.converged = true;
      break;
    }
  }
  result.scores = p;
  return result;
}

}  // namespace dpp::text
