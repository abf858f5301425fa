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

// Budgeted MAP inference for L-ensembles: maximize det(L_Y) subject to
// sum_{i in Y} cost_i <= B. Exact MAP is NP-hard; GreedyMap is the practical
// approximation, ExactMapBruteForce the small-n reference and SampledMap the
// Monte Carlo estimate. MmrSelect is the maximum-marginal-relevance baseline.

#ifndef DPP_INFER_HPP_
#define DPP_INFER_HPP_

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "dpp/kernel.hpp"
#include "dpp/sampler.hpp"

namespace dpp {

struct BudgetSpec {
  std::vector<double> costs;
  double budget = 0.0;

  // n costs, all finite and nonnegative; budget finite and nonnegative.
  void Validate(Index n) const;
  double CostOf(const Subset& y) const;
};

enum class GreedyMode {
  kLiteral,          // run until no affordable candidate remains
  kNonnegativeGain,  // additionally stop once the best gain is <= 0
};

enum class SelectionStatus {
  kConverged,         // every item was selected
  kBudgetExhausted,   // no remaining item fits the budget
  kGainStopped,       // best remaining gain was not positive
  kNoFeasibleSample,  // sampled MAP: nothing landed in the cost window
};

std::string_view ToString(SelectionStatus status);
std::string_view ToString(GreedyMode mode);

struct SelectionResult {
  Subset chosen;
  std::vector<Index> order;  // selection sequence
  double total_cost = 0.0;
  double log_det = -std::numeric_limits<double>::infinity();  // log det L_Y
  SelectionStatus status = SelectionStatus::kConverged;
  // Greedy only: Schur complement L_ii - L_{Y,i}^T L_Y^{-1} L_{Y,i} of each
  // selected item at the time it was added, so det grows by that factor.
  std::vector<double> schur;
  // Sampled MAP only: number of draws inside the cost window.
  std::size_t feasible_samples = 0;
};

// Greedy budgeted MAP. Each round adds the affordable item maximizing
// (P(Y u {i}) - P(Y)) / cost_i, evaluated as (s_i - 1) / cost_i with s_i the
// Schur complement, maintained by an incremental Cholesky factor of L_Y.
// Ties go to the lowest index; selected items leave the candidate pool.
// kInvalidArgument when a zero-cost item has positive gain.
SelectionResult GreedyMap(const SymmetricKernel& l, const BudgetSpec& budget,
                          GreedyMode mode = GreedyMode::kLiteral);

// Enumerates all feasible subsets (n <= kMaxBruteForceItems). Ties prefer
// smaller cardinality, then lexicographically smaller indices.
inline constexpr Index kMaxBruteForceItems = 20;
SelectionResult ExactMapBruteForce(const SymmetricKernel& l,
                                   const BudgetSpec& budget);

// Draws `count` subsets and returns the most probable one whose cost lies in
// [cost_lo, cost_hi]; status kNoFeasibleSample when none does.
SelectionResult SampledMap(Sampler& sampler, const std::vector<double>& costs,
                           double cost_lo, double cost_hi, std::size_t count);

// Maximum marginal relevance: repeatedly adds the affordable item maximizing
// lambda q_i - (1 - lambda) max_{j in Y} S_ij (the max is 0 for empty Y)
// until nothing affordable remains. log_det refers to L = diag(q) S diag(q).
SelectionResult MmrSelect(const Vector& quality, const SymmetricKernel& s,
                          double lambda, const BudgetSpec& budget);

}  // namespace dpp

#endif  // DPP_INFER_HPP_
