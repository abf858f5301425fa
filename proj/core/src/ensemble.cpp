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

#include "dpp/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "dpp/diagnostics.hpp"
#include "dpp/error.hpp"

namespace dpp {
namespace {

constexpr double kMarginalUpperGap = 1e-9;

Vector ClampedSpectrum(const SymmetricKernel& kernel, const char* caller) {
  Vector values = kernel.Spectrum().values;
  if (values.size() == 0) return values;
  const double tol =
      kPsdTolerance * std::max(1.0, values.cwiseAbs().maxCoeff());
  const double smallest = values.minCoeff();
  if (smallest < -tol) {
    std::ostringstream os;
    os << caller << ": kernel is not positive semidefinite (eigenvalue "
       << smallest << ")";
    Fail(ErrorKind::kDomain, os.str());
  }
  if (smallest < 0.0) {
    std::ostringstream os;
    os << caller << ": clamped eigenvalue " << smallest << " to 0";
    Warn(os.str());
    values = values.cwiseMax(0.0);
  }
  return values;
}

Matrix Reassemble(const Matrix& vectors, const Vector& values) {
  return vectors * values.asDiagonal() * vectors.transpose();
}

}  // namespace

SymmetricKernel BuildL(const QPhiDecomposition& decomposition) {
  decomposition.Validate();
  const Matrix scaled = decomposition.q.asDiagonal() * decomposition.phi;
  return SymmetricKernel(scaled * scaled.transpose());
}

QPhiDecomposition DecomposeL(const SymmetricKernel& l) {
  const SymmetricKernel s = SimilarityOf(l);
  const Vector lambda = ClampedSpectrum(s, "DecomposeL");
  QPhiDecomposition out;
  out.q = l.entries().diagonal().cwiseSqrt();
  out.phi = s.Spectrum().vectors * lambda.cwiseSqrt().asDiagonal();
  out.phi.rowwise().normalize();
  return out;
}

Vector PsdEigenvalues(const SymmetricKernel& l) {
  return ClampedSpectrum(l, "PsdEigenvalues");
}

double LogNormalizer(const SymmetricKernel& l) {
  const Vector lambda = ClampedSpectrum(l, "LogNormalizer");
  CompensatedSum sum;
  for (Index k = 0; k < lambda.size(); ++k) sum.Add(std::log1p(lambda(k)));
  return sum.Value();
}

double LogDetPrincipal(const SymmetricKernel& l, const Subset& y) {
  return LogDetPsd(l.Principal(y));
}

double LogProb(const SymmetricKernel& l, const Subset& y) {
  y.CheckBounds(l.size());
  const double log_det = LogDetPrincipal(l, y);
  const double log_z = LogNormalizer(l);
  if (std::isinf(log_det)) return log_det;
  return log_det - log_z;
}

SymmetricKernel MarginalKernel(const SymmetricKernel& l) {
  const Vector lambda = ClampedSpectrum(l, "MarginalKernel");
  const Vector scaled = lambda.array() / (1.0 + lambda.array());
  return SymmetricKernel(Reassemble(l.Spectrum().vectors, scaled));
}

Vector InclusionProbabilities(const SymmetricKernel& l) {
  const Vector lambda = ClampedSpectrum(l, "InclusionProbabilities");
  const Vector weight = lambda.array() / (1.0 + lambda.array());
  const Matrix& v = l.Spectrum().vectors;
  return v.cwiseAbs2() * weight;
}

SymmetricKernel KernelFromMarginal(const SymmetricKernel& k) {
  const Vector mu = ClampedSpectrum(k, "KernelFromMarginal");
  if (mu.size() > 0 && mu.maxCoeff() >= 1.0 - kMarginalUpperGap) {
    std::ostringstream os;
    os << "KernelFromMarginal: marginal kernel has eigenvalue "
       << mu.maxCoeff() << "; (I - K) inverse does not exist";
    Fail(ErrorKind::kDomain, os.str());
  }
  const Vector lambda = mu.array() / (1.0 - mu.array());
  return SymmetricKernel(Reassemble(k.Spectrum().vectors, lambda));
}

double MarginalProb(const SymmetricKernel& k, const Subset& a) {
  a.CheckBounds(k.size());
  double p;
  const auto& idx = a.indices();
  switch (a.size()) {
    case 0:
      return 1.0;
    case 1:
      p = k(idx[0], idx[0]);
      break;
    case 2:
      p = k(idx[0], idx[0]) * k(idx[1], idx[1]) -
          k(idx[0], idx[1]) * k(idx[0], idx[1]);
      break;
    default:
      p = DetPsd(k.Principal(a));
  }
  return std::clamp(p, 0.0, 1.0);
}

double ConditionalProb(const SymmetricKernel& l, const Subset& a,
                       const Subset& b) {
  a.CheckBounds(l.size());
  b.CheckBounds(l.size());
  Require(!a.Intersects(b), "ConditionalProb: A and B must be disjoint");

  Matrix shifted = l.entries();
  for (Index i = 0; i < l.size(); ++i) {
    if (!a.Contains(i)) shifted(i, i) += 1.0;
  }
  const double log_den = LogDetPsd(shifted);
  if (std::isinf(log_den)) {
    Fail(ErrorKind::kDomain,
         "ConditionalProb: conditioning set {" + a.ToString() +
             "} has zero probability");
  }
  const double log_num = LogDetPrincipal(l, a.Union(b));
  if (std::isinf(log_num)) return 0.0;
  return std::exp(log_num - log_den);
}

SymmetricKernel SimilarityOf(const SymmetricKernel& l) {
  const Vector diag = l.entries().diagonal();
  for (Index i = 0; i < diag.size(); ++i) {
    if (!(diag(i) > 0.0)) {
      Fail(ErrorKind::kDomain, "SimilarityOf: item " + std::to_string(i) +
                                   " has zero quality (L_ii = " +
                                   std::to_string(diag(i)) + ")");
    }
  }
  const Vector inv_sqrt = diag.cwiseSqrt().cwiseInverse();
  Matrix s = inv_sqrt.asDiagonal() * l.entries() * inv_sqrt.asDiagonal();
  s.diagonal().setOnes();
  return SymmetricKernel(std::move(s));
}

}  // namespace dpp
