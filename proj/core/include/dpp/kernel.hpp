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

#ifndef DPP_KERNEL_HPP_
#define DPP_KERNEL_HPP_

#include <compare>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dpp/linalg.hpp"

namespace dpp {

// A set of item indices, kept sorted and duplicate-free.
class Subset {
 public:
  Subset() = default;
  // Sorts `indices`; rejects negatives and duplicates.
  explicit Subset(std::vector<Index> indices);
  Subset(std::initializer_list<Index> indices)
      : Subset(std::vector<Index>(indices)) {}

  static Subset Range(Index n);  // {0, ..., n-1}

  const std::vector<Index>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  bool Contains(Index i) const;
  // Throws unless every index is below n.
  void CheckBounds(Index n) const;

  Subset Union(const Subset& other) const;
  bool Intersects(const Subset& other) const;
  std::string ToString() const;  // space-separated indices

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  std::vector<Index> indices_;
};

// Real symmetric matrix playing the role of an L-ensemble kernel, a marginal
// kernel, or a similarity matrix. Entries are immutable after construction;
// the eigendecomposition is computed on first request and shared by copies.
class SymmetricKernel {
 public:
  // Absolute symmetry tolerance, scaled by max(1, max |entry|).
  static constexpr double kSymmetryTolerance = 1e-9;

  SymmetricKernel();
  // Throws kDomain when `entries` is not square, has non-finite entries or
  // is asymmetric beyond tolerance. Stores the symmetrized average.
  explicit SymmetricKernel(Matrix entries);

  Index size() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }
  double operator()(Index i, Index j) const { return entries_(i, j); }

  // Restriction to rows and columns in `subset`.
  Matrix Principal(const Subset& subset) const;

  // Cached Jacobi eigendecomposition; thread-safe, computed once.
  const SymmetricEigen& Spectrum() const;

 private:
  struct EigenCache {
    std::once_flag once;
    SymmetricEigen value;
  };

  Matrix entries_;
  std::shared_ptr<EigenCache> cache_;
};

// Per-item quality q_i > 0 and unit similarity vectors phi_i (rows of phi).
struct QPhiDecomposition {
  static constexpr double kUnitNormTolerance = 1e-9;

  Vector q;
  Matrix phi;

  // Throws kInvalidArgument on nonpositive q, non-unit phi rows or
  // mismatched sizes.
  void Validate() const;
};

}  // namespace dpp

#endif  // DPP_KERNEL_HPP_
