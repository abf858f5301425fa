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

#include "dpp/infer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>

#include "dpp/ensemble.hpp"
#include "dpp/error.hpp"

namespace dpp {
namespace {

constexpr double kTieTolerance = 1e-12;

// True when (log_det, y) should replace the incumbent under the
// larger-det, then smaller-set, then lexicographic order.
bool Better(double log_det, const Subset& y, double best_log_det,
            const Subset& best) {
  if (std::isinf(log_det) || std::isinf(best_log_det)) {
    if (log_det != best_log_det) return log_det > best_log_det;
    if (y.size() != best.size()) return y.size() < best.size();
    return y.indices() < best.indices();
  }
  const double tol = kTieTolerance * std::max(1.0, std::abs(best_log_det));
  if (log_det > best_log_det + tol) return true;
  if (log_det < best_log_det - tol) return false;
  if (y.size() != best.size()) return y.size() < best.size();
  return y.indices() < best.indices();
}

}  // namespace

void BudgetSpec::Validate(Index n) const {
  Require(static_cast<Index>(costs.size()) == n,
          "BudgetSpec: " + std::to_string(costs.size()) + " costs for " +
              std::to_string(n) + " items");
  Require(std::isfinite(budget) && budget >= 0.0,
          "BudgetSpec: budget must be finite and nonnegative");
  for (std::size_t i = 0; i < costs.size(); ++i) {
    Require(std::isfinite(costs[i]) && costs[i] >= 0.0,
            "BudgetSpec: cost of item " + std::to_string(i) +
                " must be finite and nonnegative");
  }
}

double BudgetSpec::CostOf(const Subset& y) const {
  double total = 0.0;
  for (Index i : y) total += costs[static_cast<std::size_t>(i)];
  return total;
}

std::string_view ToString(SelectionStatus status) {
  switch (status) {
    case SelectionStatus::kConverged:
      return "converged";
    case SelectionStatus::kBudgetExhausted:
      return "budget-exhausted";
    case SelectionStatus::kGainStopped:
      return "gain-stopped";
    case SelectionStatus::kNoFeasibleSample:
      return "no-feasible-sample";
  }
  return "unknown";
}

std::string_view ToString(GreedyMode mode) {
  return mode == GreedyMode::kLiteral ? "literal" : "nonneg";
}

SelectionResult GreedyMap(const SymmetricKernel& l, const BudgetSpec& spec,
                          GreedyMode mode) {
  const Index n = l.size();
  spec.Validate(n);
  const auto cost = [&](Index i) { return spec.costs[static_cast<std::size_t>(i)]; };

  // Pivots at or below this are treated as making det(L_Y) zero.
  const double singular =
      kCholeskyPivotTolerance * (n > 0 ? std::max(0.0, l.entries().diagonal().maxCoeff()) : 0.0);

  std::vector<Index> pool;
  for (Index i = 0; i < n; ++i) {
    if (cost(i) <= spec.budget) pool.push_back(i);
  }

  Matrix factor(n, 0);  // row i: coordinates of item i in the L_Y basis
  Vector schur = l.entries().diagonal();
  bool degenerate = false;

  SelectionResult result;
  result.log_det = 0.0;
  bool gain_stopped = false;

  while (!pool.empty()) {
    std::size_t best_slot = 0;
    double best_ratio = -std::numeric_limits<double>::infinity();
    double best_gain = 0.0;
    for (std::size_t slot = 0; slot < pool.size(); ++slot) {
      const Index i = pool[slot];
      // Gain in units of det(L_Y) > 0; identically 0 once det(L_Y) = 0.
      const double gain = degenerate ? 0.0 : schur(i) - 1.0;
      double ratio;
      if (cost(i) > 0.0) {
        ratio = gain / cost(i);
      } else if (gain > 0.0) {
        Fail(ErrorKind::kInvalidArgument,
             "GreedyMap: item " + std::to_string(i) +
                 " has zero cost and positive gain");
      } else {
        ratio = gain == 0.0 ? 0.0 : -std::numeric_limits<double>::infinity();
      }
      if (slot == 0 || ratio > best_ratio) {
        best_slot = slot;
        best_ratio = ratio;
        best_gain = gain;
      }
    }
    if (mode == GreedyMode::kNonnegativeGain && !(best_gain > 0.0)) {
      gain_stopped = true;
      break;
    }

    const Index pick = pool[best_slot];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_slot));
    result.order.push_back(pick);
    result.schur.push_back(degenerate ? 0.0 : std::max(0.0, schur(pick)));
    result.total_cost += cost(pick);

    if (!degenerate) {
      if (schur(pick) <= singular) {
        degenerate = true;
        result.log_det = -std::numeric_limits<double>::infinity();
      } else {
        result.log_det += std::log(schur(pick));
        const double pivot = std::sqrt(schur(pick));
        const Index k = factor.cols();
        factor.conservativeResize(Eigen::NoChange, k + 1);
        for (Index i : pool) {
          const double e =
              (l(pick, i) - factor.row(pick).head(k).dot(factor.row(i).head(k))) /
              pivot;
          factor(i, k) = e;
          schur(i) -= e * e;
        }
        factor(pick, k) = pivot;
      }
    }

    const double remaining = spec.budget - result.total_cost;
    std::erase_if(pool, [&](Index i) { return cost(i) > remaining; });
  }

  result.chosen = Subset(result.order);
  if (gain_stopped) {
    result.status = SelectionStatus::kGainStopped;
  } else if (static_cast<Index>(result.order.size()) == n) {
    result.status = SelectionStatus::kConverged;
  } else {
    result.status = SelectionStatus::kBudgetExhausted;
  }
  return result;
}

SelectionResult ExactMapBruteForce(const SymmetricKernel& l,
                                   const BudgetSpec& spec) {
  const Index n = l.size();
  spec.Validate(n);
  if (n > kMaxBruteForceItems) {
    Fail(ErrorKind::kInvalidArgument,
         "ExactMapBruteForce: " + std::to_string(n) + " items exceeds the " +
             std::to_string(kMaxBruteForceItems) + "-item guard");
  }

  SelectionResult best;
  best.log_det = 0.0;  // the empty set is always feasible
  std::vector<Index> members;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t mask = 1; mask < total; ++mask) {
    members.clear();
    double cost = 0.0;
    for (Index i = 0; i < n; ++i) {
      if (mask >> i & 1U) {
        members.push_back(i);
        cost += spec.costs[static_cast<std::size_t>(i)];
      }
    }
    if (cost > spec.budget) continue;
    const Subset y(members);
    const double log_det = LogDetPrincipal(l, y);
    if (Better(log_det, y, best.log_det, best.chosen)) {
      best.chosen = y;
      best.log_det = log_det;
      best.total_cost = cost;
    }
  }
  best.order = best.chosen.indices();
  best.status = SelectionStatus::kConverged;
  return best;
}

SelectionResult SampledMap(Sampler& sampler, const std::vector<double>& costs,
                           double cost_lo, double cost_hi, std::size_t count) {
  const SymmetricKernel& l = sampler.kernel();
  BudgetSpec spec{costs, std::max(0.0, cost_hi)};
  spec.Validate(l.size());
  Require(cost_lo <= cost_hi, "SampledMap: empty cost window");

  SelectionResult best;
  best.status = SelectionStatus::kNoFeasibleSample;
  std::map<Subset, double> seen;
  for (std::size_t s = 0; s < count; ++s) {
    Subset y = sampler.Sample();
    const double cost = spec.CostOf(y);
    if (cost < cost_lo || cost > cost_hi) continue;
    ++best.feasible_samples;
    auto it = seen.find(y);
    if (it == seen.end()) it = seen.emplace(y, LogDetPrincipal(l, y)).first;
    if (best.status == SelectionStatus::kNoFeasibleSample ||
        Better(it->second, y, best.log_det, best.chosen)) {
      best.chosen = y;
      best.log_det = it->second;
      best.total_cost = cost;
      best.status = SelectionStatus::kConverged;
    }
  }
  best.order = best.chosen.indices();
  return best;
}

SelectionResult MmrSelect(const Vector& quality, const SymmetricKernel& s,
                          double lambda, const BudgetSpec& spec) {
  const Index n = s.size();
  spec.Validate(n);
  Require(quality.size() == n, "MmrSelect: quality size mismatch");
  Require(lambda >= 0.0 && lambda <= 1.0, "MmrSelect: lambda must be in [0, 1]");
  for (Index i = 0; i < n; ++i) {
    Require(quality(i) > 0.0, "MmrSelect: quality must be positive");
    Require(std::abs(s(i, i) - 1.0) <= 1e-9,
            "MmrSelect: similarity matrix must have unit diagonal");
  }

  SelectionResult result;
  std::vector<bool> taken(static_cast<std::size_t>(n), false);
  Vector max_similarity = Vector::Zero(n);
  for (;;) {
    Index best = -1;
    double best_score = -std::numeric_limits<double>::infinity();
    for (Index i = 0; i < n; ++i) {
      if (taken[static_cast<std::size_t>(i)]) continue;
      if (result.total_cost + spec.costs[static_cast<std::size_t>(i)] > spec.budget) continue;
      const double score =
          lambda * quality(i) - (1.0 - lambda) * max_similarity(i);
      if (best < 0 || score > best_score) {
        best = i;
        best_score = score;
      }
    }
    if (best < 0) break;
    taken[static_cast<std::size_t>(best)] = true;
    result.order.push_back(best);
    result.total_cost += spec.costs[static_cast<std::size_t>(best)];
    for (Index i = 0; i < n; ++i) {
      max_similarity(i) = result.order.size() == 1
                              ? s(i, best)
                              : std::max(max_similarity(i), s(i, best));
    }
  }

  result.chosen = Subset(result.order);
  const auto& idx = result.chosen.indices();
  const Vector q = quality(idx);
  result.log_det = LogDetPsd(q.asDiagonal() * s.entries()(idx, idx) * q.asDiagonal());
  result.status = static_cast<Index>(result.order.size()) == n
                      ? SelectionStatus::kConverged
                      : SelectionStatus::kBudgetExhausted;
  return result;
}

}  // namespace dpp
