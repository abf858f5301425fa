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

#include "dpp/sampler.hpp"

#include <cmath>

#include "dpp/ensemble.hpp"
#include "dpp/error.hpp"

namespace dpp {
namespace {

constexpr double kDegenerateNorm = 1e-12;

// Orthogonalizes column c of `basis` against columns [0, c).
double OrthogonalizeColumn(Matrix& basis, Index c) {
  for (Index d = 0; d < c; ++d) {
    basis.col(c) -= basis.col(d).dot(basis.col(c)) * basis.col(d);
  }
  return basis.col(c).norm();
}

// Modified Gram-Schmidt with a second pass; one extra pass on a tiny norm.
void Orthonormalize(Matrix& basis) {
  for (Index c = 0; c < basis.cols(); ++c) {
    OrthogonalizeColumn(basis, c);
    double norm = OrthogonalizeColumn(basis, c);
    if (norm < kDegenerateNorm) norm = OrthogonalizeColumn(basis, c);
    if (norm < kDegenerateNorm) {
      Fail(ErrorKind::kNumerical,
           "Sampler: degenerate direction during Gram-Schmidt");
    }
    basis.col(c) /= norm;
  }
}

void DropColumn(Matrix& m, Index c) {
  const Index last = m.cols() - 1;
  if (c < last) m.col(c) = m.col(last);
  m.conservativeResize(Eigen::NoChange, last);
}

}  // namespace

Sampler::Sampler(SymmetricKernel l, std::uint64_t seed)
    : l_(std::move(l)), seed_(seed), rng_(seed) {
  const Vector lambda = PsdEigenvalues(l_);
  keep_probability_ = lambda.array() / (1.0 + lambda.array());
}

Subset Sampler::Sample() {
  const Matrix& v = l_.Spectrum().vectors;
  const Index n = l_.size();

  std::vector<Index> kept;
  for (Index k = 0; k < n; ++k) {
    if (uniform_(rng_) < keep_probability_(k)) kept.push_back(k);
  }
  Matrix basis = v(Eigen::all, kept);

  std::vector<Index> chosen;
  chosen.reserve(kept.size());
  while (basis.cols() > 0) {
    const Vector weight = basis.rowwise().squaredNorm();
    const double target = uniform_(rng_) * weight.sum();
    Index item = n - 1;
    double cumulative = 0.0;
    for (Index i = 0; i < n; ++i) {
      cumulative += weight(i);
      if (target < cumulative) {
        item = i;
        break;
      }
    }
    // Guard against landing on a zero-weight tail through rounding.
    while (item > 0 && weight(item) == 0.0) --item;
    chosen.push_back(item);
    if (basis.cols() == 1) break;

    Index pivot;
    basis.row(item).cwiseAbs().maxCoeff(&pivot);
    const Vector pivot_col = basis.col(pivot);
    const double pivot_value = pivot_col(item);
    for (Index c = 0; c < basis.cols(); ++c) {
      if (c == pivot) continue;
      basis.col(c) -= pivot_col * (basis(item, c) / pivot_value);
    }
    DropColumn(basis, pivot);
    Orthonormalize(basis);
  }
  return Subset(std::move(chosen));
}

std::vector<Subset> Sampler::Sample(std::size_t count) {
  std::vector<Subset> out;
  out.reserve(count);
  for (std::size_t s = 0; s < count; ++s) out.push_back(Sample());
  return out;
}

Vector EmpiricalMarginals(std::span<const Subset> samples, Index n) {
  Require(!samples.empty(), "EmpiricalMarginals: no samples");
  Vector counts = Vector::Zero(n);
  for (const Subset& s : samples) {
    s.CheckBounds(n);
    for (Index i : s) counts(i) += 1.0;
  }
  return counts / static_cast<double>(samples.size());
}

}  // namespace dpp
