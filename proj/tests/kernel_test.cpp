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

#include <gtest/gtest.h>

#include <sstream>
#include <thread>

#include "dpp/error.hpp"
#include "dpp/kernel_io.hpp"
#include "support.hpp"

namespace {

using dpp::Matrix;
using dpp::Subset;
using dpp::SymmetricKernel;

TEST(Subset, SortsAndRejectsDuplicates) {
  const Subset s{3, 1, 2};
  EXPECT_EQ(s.indices(), (std::vector<dpp::Index>{1, 2, 3}));
  EXPECT_EQ(s.ToString(), "1 2 3");
  EXPECT_THROW(Subset({1, 1}), dpp::Error);
  EXPECT_THROW(Subset({-1}), dpp::Error);
  EXPECT_THROW(s.CheckBounds(3), dpp::Error);
  EXPECT_NO_THROW(s.CheckBounds(4));
}

TEST(Subset, SetOperations) {
  const Subset a{0, 2}, b{1, 2};
  EXPECT_TRUE(a.Intersects(b));
  EXPECT_EQ(a.Union(b), (Subset{0, 1, 2}));
  EXPECT_FALSE(a.Intersects(Subset{1}));
  EXPECT_TRUE(a.Contains(2));
  EXPECT_FALSE(a.Contains(1));
  EXPECT_EQ(Subset::Range(3), (Subset{0, 1, 2}));
  EXPECT_EQ(Subset().ToString(), "");
}

TEST(SymmetricKernel, ValidatesInput) {
  Matrix asym(2, 2);
  asym << 1, 0.5, 0.4, 1;
  EXPECT_THROW(SymmetricKernel{asym}, dpp::Error);
  EXPECT_THROW(SymmetricKernel{Matrix(2, 3)}, dpp::Error);
  Matrix nan = Matrix::Identity(2, 2);
  nan(0, 0) = std::nan("");
  EXPECT_THROW(SymmetricKernel{nan}, dpp::Error);
  Matrix near(2, 2);
  near << 1, 0.5, 0.5 + 1e-12, 1;
  const SymmetricKernel k(near);
  EXPECT_EQ(k(0, 1), k(1, 0));
}

TEST(SymmetricKernel, SpectrumReconstructsAndIsShared) {
  std::mt19937_64 rng(1);
  const SymmetricKernel k(dpptest::RandomPsd(rng, 7));
  const SymmetricKernel copy = k;
  const auto& e = k.Spectrum();
  EXPECT_EQ(&e, &copy.Spectrum());
  const Matrix rebuilt = e.vectors * e.values.asDiagonal() * e.vectors.transpose();
  EXPECT_LT((rebuilt - k.entries()).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(SymmetricKernel, ConcurrentSpectrumIsComputedOnce) {
  std::mt19937_64 rng(2);
  const SymmetricKernel k(dpptest::RandomPsd(rng, 20));
  std::vector<const dpp::SymmetricEigen*> seen(4);
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    threads.emplace_back([&, t] { seen[t] = &k.Spectrum(); });
  }
  for (auto& th : threads) th.join();
  for (const auto* p : seen) EXPECT_EQ(p, seen.front());
}

TEST(KernelIo, RoundTripsExactly) {
  std::mt19937_64 rng(4);
  const SymmetricKernel k(dpptest::RandomPsd(rng, 5));
  std::stringstream ss;
  dpp::WriteKernel(ss, k);
  const SymmetricKernel back = dpp::ReadKernel(ss);
  EXPECT_EQ(back.entries(), k.entries());
}

TEST(KernelIo, RejectsMalformed) {
  std::stringstream missing("2\n1 0\n0\n");
  EXPECT_THROW(dpp::ReadKernel(missing), dpp::Error);
  std::stringstream trailing("1\n1 2\n");
  EXPECT_THROW(dpp::ReadKernel(trailing), dpp::Error);
  std::stringstream word("1\nx\n");
  EXPECT_THROW(dpp::ReadKernel(word), dpp::Error);
  try {
    dpp::ReadKernel(std::filesystem::path("/nonexistent/kernel.txt"));
    FAIL();
  } catch (const dpp::Error& e) {
    EXPECT_EQ(e.kind(), dpp::ErrorKind::kIo);
  }
}

TEST(KernelIo, ReadsVectorsSkippingBlankLines) {
  std::stringstream ss("1.5\n\n2\n");
  EXPECT_EQ(dpp::ReadVector(ss), (std::vector<double>{1.5, 2}));
}

}  // namespace
