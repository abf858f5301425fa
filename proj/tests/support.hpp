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

// Shared generators and brute-force references for the test suites. The
// references use Eigen's LU determinant and SelfAdjointEigenSolver rather
// than the library's own Cholesky and Jacobi routines.

#ifndef DPPSUM_TESTS_SUPPORT_HPP_
#define DPPSUM_TESTS_SUPPORT_HPP_

#include <Eigen/Dense>
#include <boost/math/distributions/chi_squared.hpp>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "dpp/kernel.hpp"
#include "dpp/learn.hpp"

namespace dpptest {

using dpp::Index;
using dpp::Matrix;
using dpp::Subset;
using dpp::Vector;

inline Matrix RandomGaussian(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal;
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = normal(rng);
  }
  return m;
}

// G G^T / rank with G of size n x rank; rank defaults to n (full rank a.s.).
inline Matrix RandomPsd(std::mt19937_64& rng, Index n, Index rank = -1, double scale = 1.0) {
  if (rank < 0) rank = n;
  const Matrix g = RandomGaussian(rng, n, std::max<Index>(rank, 1));
  Matrix l = g * g.transpose() * (scale / static_cast<double>(std::max<Index>(rank, 1)));
  if (rank == 0) l.setZero();
  return (l + l.transpose()) / 2.0;
}

inline Subset FromMask(std::uint64_t mask, Index n) {
  std::vector<Index> idx;
  for (Index i = 0; i < n; ++i) {
    if (mask >> i & 1U) idx.push_back(i);
  }
  return Subset(idx);
}

// det(M_Y) by LU; det of the empty minor is 1.
inline double MinorDet(const Matrix& m, const Subset& y) {
  if (y.empty()) return 1.0;
  const auto& idx = y.indices();
  return m(idx, idx).determinant();
}

// All 2^n principal minors of L, indexed by bitmask.
inline std::vector<double> AllMinors(const Matrix& l) {
  const Index n = l.rows();
  std::vector<double> dets(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < dets.size(); ++mask) {
    dets[mask] = std::max(0.0, MinorDet(l, FromMask(mask, n)));
  }
  return dets;
}

inline double Sum(const std::vector<double>& v) {
  long double s = 0;
  for (double x : v) s += x;
  return static_cast<double>(s);
}

inline Vector EigenvaluesOf(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  return es.eigenvalues();
}

// Random instance with unit phi rows; gold drawn uniformly at random.
inline dpp::Instance RandomInstance(std::mt19937_64& rng, Index n, Index m,
                                    Index phi_dim = -1) {
  if (phi_dim < 0) phi_dim = n;
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::bernoulli_distribution coin(0.5);
  dpp::Instance inst;
  inst.id = "random";
  std::vector<Index> gold;
  for (Index i = 0; i < n; ++i) {
    dpp::Item item;
    item.features.resize(m);
    for (Index k = 0; k < m; ++k) item.features(k) = unit(rng);
    item.phi = RandomGaussian(rng, phi_dim, 1).col(0);
    item.phi.normalize();
    item.cost = 1.0;
    inst.items.push_back(item);
    if (coin(rng)) gold.push_back(i);
  }
  inst.gold = Subset(gold);
  return inst;
}

// Penalized log-likelihood by explicit q, Gram matrix and subset enumeration.
inline double EnumeratedLogLikelihood(const Vector& theta, double sigma2,
                                      const std::vector<dpp::Instance>& insts) {
  double total = 0.0;
  for (const auto& inst : insts) {
    const Index n = inst.size();
    Matrix l(n, n);
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        const auto& a = inst.items[static_cast<std::size_t>(i)];
        const auto& b = inst.items[static_cast<std::size_t>(j)];
        l(i, j) = std::exp(0.5 * theta.dot(a.features) + 0.5 * theta.dot(b.features)) *
                  a.phi.dot(b.phi);
      }
    }
    total += std::log(MinorDet(l, *inst.gold)) - std::log(Sum(AllMinors(l)));
  }
  if (std::isfinite(sigma2)) total -= theta.squaredNorm() / (2.0 * sigma2);
  return total;
}

struct ChiSquare {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Pearson test of `counts` (indexed by bitmask) against `probs`. Cells with
// expected count below 5 are pooled into one cell.
inline ChiSquare ChiSquareTest(const std::vector<std::size_t>& counts,
                               const std::vector<double>& probs, std::size_t draws) {
  ChiSquare out;
  double pooled_obs = 0.0, pooled_exp = 0.0;
  int cells = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    const double expected = probs[k] * static_cast<double>(draws);
    const auto observed = static_cast<double>(counts[k]);
    if (expected < 5.0) {
      pooled_obs += observed;
      pooled_exp += expected;
      continue;
    }
    out.statistic += (observed - expected) * (observed - expected) / expected;
    ++cells;
  }
  if (pooled_exp > 0.0) {
    out.statistic += (pooled_obs - pooled_exp) * (pooled_obs - pooled_exp) / pooled_exp;
    ++cells;
  }
  out.dof = std::max(1, cells - 1);
  out.p_value = boost::math::cdf(
      boost::math::complement(boost::math::chi_squared(out.dof), out.statistic));
  return out;
}

inline std::uint64_t MaskOf(const Subset& y) {
  std::uint64_t mask = 0;
  for (Index i : y) mask |= std::uint64_t{1} << i;
  return mask;
}

}  // namespace dpptest

#endif  // DPPSUM_TESTS_SUPPORT_HPP_
