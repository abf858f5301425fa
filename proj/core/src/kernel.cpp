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

#include "dpp/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <sstream>

#include "dpp/error.hpp"

namespace dpp {

Subset::Subset(std::vector<Index> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (!indices_.empty() && indices_.front() < 0) {
    Fail(ErrorKind::kInvalidArgument,
         "Subset: negative index " + std::to_string(indices_.front()));
  }
  const auto dup = std::adjacent_find(indices_.begin(), indices_.end());
  if (dup != indices_.end()) {
    Fail(ErrorKind::kInvalidArgument,
         "Subset: duplicate index " + std::to_string(*dup));
  }
}

Subset Subset::Range(Index n) {
  std::vector<Index> all(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  return Subset(std::move(all));
}

bool Subset::Contains(Index i) const {
  return std::binary_search(indices_.begin(), indices_.end(), i);
}

void Subset::CheckBounds(Index n) const {
  if (!indices_.empty() && indices_.back() >= n) {
    Fail(ErrorKind::kInvalidArgument,
         "Subset: index " + std::to_string(indices_.back()) +
             " out of range for " + std::to_string(n) + " items");
  }
}

Subset Subset::Union(const Subset& other) const {
  std::vector<Index> merged;
  merged.reserve(size() + other.size());
  std::set_union(begin(), end(), other.begin(), other.end(),
                 std::back_inserter(merged));
  Subset out;
  out.indices_ = std::move(merged);
  return out;
}

bool Subset::Intersects(const Subset& other) const {
  auto a = begin();
  auto b = other.begin();
  while (a != end() && b != other.end()) {
    if (*a == *b) return true;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return false;
}

std::string Subset::ToString() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k) os << ' ';
    os << indices_[k];
  }
  return os.str();
}

SymmetricKernel::SymmetricKernel()
    : cache_(std::make_shared<EigenCache>()) {}

SymmetricKernel::SymmetricKernel(Matrix entries)
    : entries_(std::move(entries)), cache_(std::make_shared<EigenCache>()) {
  if (entries_.rows() != entries_.cols()) {
    Fail(ErrorKind::kDomain, "SymmetricKernel: matrix is " +
                                 std::to_string(entries_.rows()) + "x" +
                                 std::to_string(entries_.cols()));
  }
  if (!entries_.allFinite()) {
    Fail(ErrorKind::kDomain, "SymmetricKernel: non-finite entry");
  }
  if (entries_.size() == 0) return;
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  const double asym = (entries_ - entries_.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance * scale) {
    std::ostringstream os;
    os << "SymmetricKernel: asymmetry " << asym << " exceeds tolerance";
    Fail(ErrorKind::kDomain, os.str());
  }
  entries_ = 0.5 * (entries_ + entries_.transpose()).eval();
}

Matrix SymmetricKernel::Principal(const Subset& subset) const {
  subset.CheckBounds(size());
  return entries_(subset.indices(), subset.indices());
}

const SymmetricEigen& SymmetricKernel::Spectrum() const {
  std::call_once(cache_->once,
                 [this] { cache_->value = JacobiEigen(entries_); });
  return cache_->value;
}

void QPhiDecomposition::Validate() const {
  Require(phi.rows() == q.size(),
          "QPhiDecomposition: phi has " + std::to_string(phi.rows()) +
              " rows for " + std::to_string(q.size()) + " items");
  for (Index i = 0; i < q.size(); ++i) {
    if (!(q(i) > 0.0) || !std::isfinite(q(i))) {
      Fail(ErrorKind::kInvalidArgument,
           "QPhiDecomposition: quality q[" + std::to_string(i) +
               "] must be positive and finite");
    }
    const double norm = phi.row(i).norm();
    if (std::abs(norm - 1.0) > kUnitNormTolerance) {
      std::ostringstream os;
      os << "QPhiDecomposition: phi[" << i << "] has norm " << norm
         << ", expected 1";
      Fail(ErrorKind::kInvalidArgument, os.str());
    }
  }
}

}  // namespace dpp
