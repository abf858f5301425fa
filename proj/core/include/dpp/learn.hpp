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

// Conditional L-ensembles with log-linear quality.
//
// For an instance with item features f_i and unit similarity vectors phi_i,
//
//   q_i = exp(theta . f_i / 2),   L_ij = q_i q_j <phi_i, phi_j>,
//
// and the penalized log-likelihood of gold subsets Y^t,
//
//   sum_t [ log det L_{Y^t} - log det(L + I) ] - |theta|^2 / (2 sigma2),
//
// is concave in theta. Its gradient is the gap between empirical and
// expected feature counts, with expected counts taken from diag(K).

#ifndef DPP_LEARN_HPP_
#define DPP_LEARN_HPP_

#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpp/kernel.hpp"

namespace dpp {

// theta . f is clipped to +-kMaxLogQuality2 before exponentiation.
inline constexpr double kMaxLogQuality2 = 500.0;

struct Item {
  Vector features;  // quality features f_i, dimension m
  Vector phi;       // unit similarity vector
  double cost = 0.0;
  int document = 0;
  int position = 0;
};

struct Instance {
  std::string id;
  std::vector<Item> items;
  std::optional<Subset> gold;

  Index size() const { return static_cast<Index>(items.size()); }
  Index feature_dim() const {
    return items.empty() ? 0 : items.front().features.size();
  }
  Matrix FeatureMatrix() const;     // n x m
  Matrix SimilarityMatrix() const;  // n x n Gram matrix of phi
  std::vector<double> Costs() const;

  // Shared feature dimension, unit phi, equal phi dimension, valid gold.
  void Validate() const;
};

struct TrainerStatus {
  bool converged = false;
  int iterations = 0;
  double gradient_norm = std::numeric_limits<double>::infinity();
  double objective = -std::numeric_limits<double>::infinity();
  std::string message;
};

struct ConditionalModel {
  Vector theta;
  double sigma2 = std::numeric_limits<double>::infinity();
  double rho = 0.0;
  std::vector<std::string> feature_names;
  TrainerStatus status;

  // Finite theta, sigma2 > 0.
  void Validate() const;
};

// exp(theta . f / 2). kNumerical error on a non-finite dot product; clipped
// (with a warning) beyond +-kMaxLogQuality2.
double Quality(const Vector& theta, const Vector& f);

SymmetricKernel BuildConditionalL(const ConditionalModel& model,
                                  const Instance& instance);

// Penalized log-likelihood; -infinity when some gold L_Y is singular.
double LogLikelihood(const ConditionalModel& model,
                     std::span<const Instance> instances);

// Gradient of LogLikelihood with respect to theta.
Vector Gradient(const ConditionalModel& model,
                std::span<const Instance> instances);

// Training objective over a fixed instance set. Similarity matrices and
// gold-set similarity determinants are computed once; each Evaluate()
// performs one eigendecomposition per instance.
class LikelihoodProblem {
 public:
  struct Value {
    double objective = 0.0;
    Vector gradient;
  };

  // Every instance must carry a gold subset. A nonnegative `dimension`
  // pins the parameter count; otherwise it is taken from the instances.
  LikelihoodProblem(std::span<const Instance> instances, double sigma2,
                    Index dimension = -1);

  Index dimension() const { return dimension_; }
  double sigma2() const { return sigma2_; }

  Value Evaluate(const Vector& theta) const;

 private:
  struct Prepared {
    Matrix features;
    Matrix similarity;
    std::vector<Index> gold;
    Vector gold_feature_sum;
    double gold_log_det_similarity;
  };

  std::vector<Prepared> prepared_;
  Index dimension_ = 0;
  double sigma2_;
};

struct TrainerConfig {
  double sigma2 = std::numeric_limits<double>::infinity();
  double tolerance = 1e-6;  // on the infinity norm of the gradient
  int max_iterations = 500;
  int history = 10;
  bool plain_gradient = false;
  int max_halvings = 50;
};

// Maximizes the penalized log-likelihood from theta = 0 with L-BFGS and
// Armijo backtracking. The result's status records whether the gradient
// tolerance was met. kNumerical error when the line search keeps producing
// non-finite objectives.
ConditionalModel Train(std::span<const Instance> instances,
                       const TrainerConfig& config);

}  // namespace dpp

#endif  // DPP_LEARN_HPP_
