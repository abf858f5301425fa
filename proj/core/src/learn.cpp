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

#include "dpp/learn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dpp/diagnostics.hpp"
#include "dpp/ensemble.hpp"
#include "dpp/error.hpp"

namespace dpp {
namespace {

// theta . f for every row of `features`, clipped to +-kMaxLogQuality2.
Vector LogQualitySquared(const Matrix& features, const Vector& theta) {
  Vector s = features * theta;
  bool clipped = false;
  for (Index i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s(i))) {
      std::ostringstream os;
      os << "quality: non-finite theta . f = " << s(i) << " for item " << i;
      Fail(ErrorKind::kNumerical, os.str());
    }
    if (std::abs(s(i)) > kMaxLogQuality2) {
      s(i) = std::clamp(s(i), -kMaxLogQuality2, kMaxLogQuality2);
      clipped = true;
    }
  }
  if (clipped) Warn("quality: theta . f clipped to +-500");
  return s;
}

double PriorTerm(const Vector& theta, double sigma2) {
  if (std::isinf(sigma2)) return 0.0;
  return theta.squaredNorm() / (2.0 * sigma2);
}

}  // namespace

Matrix Instance::FeatureMatrix() const {
  Matrix f(size(), feature_dim());
  for (Index i = 0; i < size(); ++i) {
    f.row(i) = items[static_cast<std::size_t>(i)].features.transpose();
  }
  return f;
}

Matrix Instance::SimilarityMatrix() const {
  if (items.empty()) return Matrix(0, 0);
  Matrix phi(size(), items.front().phi.size());
  for (Index i = 0; i < size(); ++i) {
    phi.row(i) = items[static_cast<std::size_t>(i)].phi.transpose();
  }
  return phi * phi.transpose();
}

std::vector<double> Instance::Costs() const {
  std::vector<double> costs;
  costs.reserve(items.size());
  for (const Item& item : items) costs.push_back(item.cost);
  return costs;
}

void Instance::Validate() const {
  const Index m = feature_dim();
  const Index d = items.empty() ? 0 : items.front().phi.size();
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Item& item = items[i];
    const std::string where = "instance '" + id + "' item " + std::to_string(i);
    Require(item.features.size() == m, where + ": feature dimension mismatch");
    Require(item.phi.size() == d, where + ": phi dimension mismatch");
    Require(std::abs(item.phi.norm() - 1.0) <=
                QPhiDecomposition::kUnitNormTolerance,
            where + ": phi is not unit norm");
    Require(item.features.allFinite(), where + ": non-finite feature");
    Require(std::isfinite(item.cost) && item.cost >= 0.0,
            where + ": cost must be finite and nonnegative");
  }
  if (gold) gold->CheckBounds(size());
}

void ConditionalModel::Validate() const {
  Require(theta.allFinite(), "ConditionalModel: non-finite theta");
  Require(sigma2 > 0.0, "ConditionalModel: sigma2 must be positive");
  Require(feature_names.empty() ||
              static_cast<Index>(feature_names.size()) == theta.size(),
          "ConditionalModel: feature name count does not match theta");
}

double Quality(const Vector& theta, const Vector& f) {
  Require(theta.size() == f.size(), "Quality: dimension mismatch");
  Matrix row = f.transpose();
  return std::exp(0.5 * LogQualitySquared(row, theta)(0));
}

SymmetricKernel BuildConditionalL(const ConditionalModel& model,
                                  const Instance& instance) {
  Require(instance.size() == 0 || instance.feature_dim() == model.theta.size(),
          "BuildConditionalL: model has " + std::to_string(model.theta.size()) +
              " parameters, instance features have dimension " +
              std::to_string(instance.feature_dim()));
  const Vector q =
      (0.5 * LogQualitySquared(instance.FeatureMatrix(), model.theta))
          .array()
          .exp();
  return SymmetricKernel(q.asDiagonal() * instance.SimilarityMatrix() *
                         q.asDiagonal());
}

LikelihoodProblem::LikelihoodProblem(std::span<const Instance> instances,
                                     double sigma2, Index dimension)
    : dimension_(dimension), sigma2_(sigma2) {
  Require(sigma2 > 0.0, "LikelihoodProblem: sigma2 must be positive");
  prepared_.reserve(instances.size());
  for (const Instance& inst : instances) {
    inst.Validate();
    Require(inst.gold.has_value(),
            "LikelihoodProblem: instance '" + inst.id + "' has no gold subset");
    if (inst.size() > 0) {
      if (dimension_ < 0) dimension_ = inst.feature_dim();
      Require(inst.feature_dim() == dimension_,
              "LikelihoodProblem: instance '" + inst.id +
                  "' has a different feature dimension");
    }
    Prepared p;
    p.features = inst.FeatureMatrix();
    p.similarity = inst.SimilarityMatrix();
    p.gold = inst.gold->indices();
    p.gold_feature_sum = Vector::Zero(p.features.cols());
    for (Index i : p.gold) p.gold_feature_sum += p.features.row(i).transpose();
    p.gold_log_det_similarity = LogDetPsd(p.similarity(p.gold, p.gold));
    prepared_.push_back(std::move(p));
  }
  if (dimension_ < 0) dimension_ = 0;
  for (Prepared& p : prepared_) {
    if (p.features.cols() != dimension_) {
      p.features = Matrix::Zero(p.features.rows(), dimension_);
      p.gold_feature_sum = Vector::Zero(dimension_);
    }
  }
}

LikelihoodProblem::Value LikelihoodProblem::Evaluate(const Vector& theta) const {
  Require(theta.size() == dimension_, "LikelihoodProblem: theta has size " +
                                          std::to_string(theta.size()) +
                                          ", expected " +
                                          std::to_string(dimension_));
  CompensatedSum objective;
  CompensatedVectorSum gradient(dimension_);
  bool impossible_gold = false;

  for (const Prepared& p : prepared_) {
    const Index n = p.features.rows();
    if (n == 0) continue;
    const Vector s = LogQualitySquared(p.features, theta);
    const Vector q = (0.5 * s).array().exp();
    const SymmetricKernel l(q.asDiagonal() * p.similarity * q.asDiagonal());
    const Vector lambda = PsdEigenvalues(l);
    const Matrix& v = l.Spectrum().vectors;

    CompensatedSum log_z;
    for (Index k = 0; k < n; ++k) log_z.Add(std::log1p(lambda(k)));
    CompensatedSum gold_score;
    for (Index i : p.gold) gold_score.Add(s(i));

    if (std::isinf(p.gold_log_det_similarity)) {
      impossible_gold = true;
    } else {
      objective.Add(gold_score.Value());
      objective.Add(p.gold_log_det_similarity);
      objective.Add(-log_z.Value());
    }

    const Vector weight = lambda.array() / (1.0 + lambda.array());
    const Vector inclusion = v.cwiseAbs2() * weight;
    gradient.Add(p.gold_feature_sum - p.features.transpose() * inclusion);
  }

  Value out;
  out.objective = impossible_gold
                      ? -std::numeric_limits<double>::infinity()
                      : objective.Value() - PriorTerm(theta, sigma2_);
  out.gradient = gradient.Value();
  if (!std::isinf(sigma2_)) out.gradient -= theta / sigma2_;
  return out;
}

double LogLikelihood(const ConditionalModel& model,
                     std::span<const Instance> instances) {
  model.Validate();
  return LikelihoodProblem(instances, model.sigma2, model.theta.size())
      .Evaluate(model.theta)
      .objective;
}

Vector Gradient(const ConditionalModel& model,
                std::span<const Instance> instances) {
  model.Validate();
  return LikelihoodProblem(instances, model.sigma2, model.theta.size())
      .Evaluate(model.theta)
      .gradient;
}

}  // namespace dpp
