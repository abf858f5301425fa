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

#include "dpp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "dpp/error.hpp"

namespace dpp {
namespace {

double OffDiagonalNorm(const Matrix& a) {
  double off = 0.0;
  for (Eigen::Index q = 0; q < a.cols(); ++q) {
    for (Eigen::Index p = 0; p < a.rows(); ++p) {
      if (p != q) off += a(p, q) * a(p, q);
    }
  }
  return std::sqrt(off);
}

// Applies the rotation that annihilates a(p, q): A <- J^T A J, V <- V J.
void Rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) /
        (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

}  // namespace

SymmetricEigen JacobiEigen(const Matrix& input, const JacobiOptions& options) {
  Require(input.rows() == input.cols(), "JacobiEigen: matrix must be square");
  const Eigen::Index n = input.rows();

  // Symmetrize from the upper triangle so rotations see a symmetric matrix.
  Matrix a = input.triangularView<Eigen::Upper>();
  a.triangularView<Eigen::StrictlyLower>() = a.transpose();
  Matrix v = Matrix::Identity(n, n);

  const double threshold = options.tolerance * std::max(1.0, a.norm());
  int sweep = 0;
  for (; sweep < options.max_sweeps; ++sweep) {
    if (OffDiagonalNorm(a) < threshold) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) != 0.0) Rotate(a, v, p, q);
      }
    }
  }
  if (sweep == options.max_sweeps && OffDiagonalNorm(a) >= threshold) {
    Fail(ErrorKind::kNumerical, "JacobiEigen: no convergence after " +
                                    std::to_string(options.max_sweeps) +
                                    " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[static_cast<std::size_t>(k)], order[static_cast<std::size_t>(k)]);
    out.vectors.col(k) = v.col(order[static_cast<std::size_t>(k)]);
  }
  out.sweeps = sweep;
  return out;
}

double LogDetPsd(const Matrix& input) {
  Require(input.rows() == input.cols(), "LogDetPsd: matrix must be square");
  const Eigen::Index n = input.rows();
  if (n == 0) return 0.0;

  Matrix a = input;
  const double scale = a.diagonal().maxCoeff();
  if (!(scale > 0.0)) return -std::numeric_limits<double>::infinity();
  const double threshold = kCholeskyPivotTolerance * scale;

  double log_det = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot;
    const double d = a.diagonal().tail(n - k).maxCoeff(&pivot);
    pivot += k;
    if (!(d > threshold)) return -std::numeric_limits<double>::infinity();
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      a.col(k).swap(a.col(pivot));
    }
    const double lkk = std::sqrt(a(k, k));
    log_det += 2.0 * std::log(lkk);
    const Eigen::Index rest = n - k - 1;
    if (rest == 0) break;
    Vector col = a.col(k).tail(rest) / lkk;
    a.bottomRightCorner(rest, rest).noalias() -= col * col.transpose();
  }
  return log_det;
}

double DetPsd(const Matrix& a) { return std::exp(LogDetPsd(a)); }

void CompensatedVectorSum::Add(const Vector& x) {
  Require(x.size() == sum_.size(), "CompensatedVectorSum: size mismatch");
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    const double t = sum_(i) + x(i);
    if (std::abs(sum_(i)) >= std::abs(x(i))) {
      compensation_(i) += (sum_(i) - t) + x(i);
    } else {
      compensation_(i) += (x(i) - t) + sum_(i);
    }
    sum_(i) = t;
  }
}

}  // namespace dpp
