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

// Dense symmetric linear algebra used throughout the library: a cyclic
// Jacobi eigensolver, determinants of PSD matrices through diagonally
// pivoted Cholesky, and compensated summation.

#ifndef DPP_LINALG_HPP_
#define DPP_LINALG_HPP_

#include <cmath>

#include <Eigen/Dense>

namespace dpp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

struct SymmetricEigen {
  Vector values;   // ascending
  Matrix vectors;  // column k pairs with values(k); orthonormal
  int sweeps = 0;
};

struct JacobiOptions {
  // Sweeps stop once the off-diagonal Frobenius norm falls below
  // tolerance * max(1, ||A||_F).
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

// Cyclic Jacobi eigendecomposition of a symmetric matrix. Only symmetry
// within rounding is assumed; the strictly upper triangle drives rotations.
SymmetricEigen JacobiEigen(const Matrix& a, const JacobiOptions& options = {});

// Relative pivot threshold below which a PSD matrix is declared singular.
inline constexpr double kCholeskyPivotTolerance = 1e-12;

// log det(A) for symmetric PSD A via Cholesky with diagonal pivoting. Returns
// -infinity when a pivot falls to kCholeskyPivotTolerance times the largest
// diagonal entry or below (numerically singular, or not PSD). The empty
// matrix has log-determinant 0.
double LogDetPsd(const Matrix& a);

// det(A) = exp(LogDetPsd(A)); 0 for singular input.
double DetPsd(const Matrix& a);

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void Add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double Value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

// Element-wise compensated accumulation of equally sized vectors.
class CompensatedVectorSum {
 public:
  explicit CompensatedVectorSum(Eigen::Index size)
      : sum_(Vector::Zero(size)), compensation_(Vector::Zero(size)) {}

  void Add(const Vector& x);
  Vector Value() const { return sum_ + compensation_; }

 private:
  Vector sum_;
  Vector compensation_;
};

}  // namespace dpp

#endif  // DPP_LINALG_HPP_
