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

#ifndef DPP_SAMPLER_HPP_
#define DPP_SAMPLER_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "dpp/kernel.hpp"

namespace dpp {

// Exact spectral sampler for an L-ensemble.
//
// Each draw first keeps eigenvector v_k independently with probability
// lambda_k / (1 + lambda_k), then picks items one at a time with probability
// proportional to the squared row norms of the kept basis, projecting the
// basis onto the complement of each picked coordinate axis. Cost per draw is
// O(n k^2) after the one-off eigendecomposition.
//
// Not thread-safe: one Sampler per thread, seeded independently.
class Sampler {
 public:
  Sampler(SymmetricKernel l, std::uint64_t seed);

  Subset Sample();
  std::vector<Subset> Sample(std::size_t count);

  const SymmetricKernel& kernel() const { return l_; }
  std::uint64_t seed() const { return seed_; }

 private:
  SymmetricKernel l_;
  Vector keep_probability_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

// Per-item inclusion frequency over `samples`; kInvalidArgument when empty.
Vector EmpiricalMarginals(std::span<const Subset> samples, Index n);

}  // namespace dpp

#endif  // DPP_SAMPLER_HPP_
