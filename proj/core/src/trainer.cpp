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

// Limited-memory BFGS on the negated log-likelihood, with Armijo
// backtracking. Plain gradient descent is kept behind a flag for comparison.

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <vector>

#include "dpp/error.hpp"
#include "dpp/learn.hpp"

namespace dpp {
namespace {

constexpr double kArmijo = 1e-4;
constexpr double kCurvatureFloor = 1e-10;
constexpr double kRoundoff = 4.0 * std::numeric_limits<double>::epsilon();

struct Correction {
  Vector s;
  Vector y;
  double inv_sy;
};

// Two-loop recursion: returns -H g for the inverse-Hessian approximation H.
Vector LbfgsDirection(const std::deque<Correction>& history, const Vector& g) {
  Vector q = g;
  std::vector<double> alpha(history.size());
  for (std::size_t k = history.size(); k-- > 0;) {
    alpha[k] = history[k].inv_sy * history[k].s.dot(q);
    q -= alpha[k] * history[k].y;
  }
  if (!history.empty()) {
    const Correction& last = history.back();
    q *= 1.0 / (last.inv_sy * last.y.squaredNorm());
  }
  for (std::size_t k = 0; k < history.size(); ++k) {
    const double beta = history[k].inv_sy * history[k].y.dot(q);
    q += (alpha[k] - beta) * history[k].s;
  }
  return -q;
}

// Negated objective and its gradient at x.
struct Point {
  Vector x;
  double f = std::numeric_limits<double>::infinity();
  Vector g;
};

bool EvaluateAt(const LikelihoodProblem& problem, const Vector& x, Point& out) {
  try {
    LikelihoodProblem::Value v = problem.Evaluate(x);
    out.x = x;
    out.f = -v.objective;
    out.g = -v.gradient;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kNumerical) throw;
    return false;
  }
  return std::isfinite(out.f) && out.g.allFinite();
}

}  // namespace

ConditionalModel Train(std::span<const Instance> instances,
                       const TrainerConfig& config) {
  Require(!instances.empty(), "Train: empty training set");
  Require(config.tolerance >= 0.0, "Train: tolerance must be nonnegative");
  Require(config.max_iterations >= 0, "Train: max_iterations must be >= 0");
  Require(config.history >= 1, "Train: history must be >= 1");

  const LikelihoodProblem problem(instances, config.sigma2);
  Point current;
  if (!EvaluateAt(problem, Vector::Zero(problem.dimension()), current)) {
    Fail(ErrorKind::kNumerical,
         "Train: objective is not finite at theta = 0 (a gold subset has "
         "zero probability)");
  }

  TrainerStatus status;
  std::deque<Correction> history;
  double plain_step = 1.0;

  for (;;) {
    const double gnorm = current.g.lpNorm<Eigen::Infinity>();
    status.gradient_norm = gnorm;
    if (gnorm < config.tolerance || gnorm == 0.0) {
      status.converged = true;
      status.message = "gradient tolerance reached";
      break;
    }
    if (status.iterations >= config.max_iterations) {
      status.message = "iteration limit reached";
      break;
    }

    Vector direction = config.plain_gradient
                           ? Vector(-current.g)
                           : LbfgsDirection(history, current.g);
    double slope = current.g.dot(direction);
    if (!(slope < 0.0)) {
      history.clear();
      direction = -current.g;
      slope = -current.g.squaredNorm();
    }

    double step;
    if (config.plain_gradient) {
      step = plain_step;
    } else if (history.empty()) {
      step = std::min(1.0, 1.0 / gnorm);
    } else {
      step = 1.0;
    }

    Point trial;
    bool accepted = false;
    bool saw_nonfinite = false;
    for (int h = 0; h <= config.max_halvings; ++h, step *= 0.5) {
      if (!EvaluateAt(problem, current.x + step * direction, trial)) {
        saw_nonfinite = true;
        continue;
      }
      const bool armijo = trial.f <= current.f + kArmijo * step * slope;
      // Near the optimum decreases drop below double resolution; accept a
      // step that is flat within roundoff and shrinks the gradient.
      const bool flat = trial.f - current.f <= kRoundoff * std::abs(current.f) &&
                        trial.g.lpNorm<Eigen::Infinity>() < gnorm;
      if (armijo || flat) {
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      if (saw_nonfinite) {
        Fail(ErrorKind::kNumerical,
             "Train: line search failed after " +
                 std::to_string(config.max_halvings) +
                 " halvings with non-finite objective values");
      }
      if (!history.empty()) {
        history.clear();
        continue;
      }
      status.message = "line search stalled";
      break;
    }

    const Vector s = trial.x - current.x;
    const Vector y = trial.g - current.g;
    const double sy = s.dot(y);
    if (sy > kCurvatureFloor * s.norm() * y.norm()) {
      history.push_back({s, y, 1.0 / sy});
      if (static_cast<int>(history.size()) > config.history) history.pop_front();
    }
    if (config.plain_gradient) plain_step = 2.0 * step;

    current = std::move(trial);
    ++status.iterations;
  }

  ConditionalModel model;
  model.theta = current.x;
  model.sigma2 = config.sigma2;
  status.objective = -current.f;
  model.status = status;
  return model;
}

}  // namespace dpp
