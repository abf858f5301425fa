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

#include "dpp/mrf.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dpp/ensemble.hpp"
#include "dpp/error.hpp"
#include "support.hpp"

namespace {

using namespace dpp::mrf;

TEST(MrfFactorTable, Examples) {
  const auto ones = MrfFactorTable({});
  for (int b = 0; b < 8; ++b) EXPECT_EQ(ones[b], 1.0);

  MrfParams hard;
  hard.w12 = -1e9;
  const auto t = MrfFactorTable(hard);
  EXPECT_EQ(t.At("110"), 0.0);
  EXPECT_EQ(t.At("111"), 0.0);
  EXPECT_EQ(t.At("101"), 1.0);

  MrfParams half;
  half.w12 = half.w13 = half.w23 = std::log(0.5);
  const auto h = MrfFactorTable(half);
  EXPECT_NEAR(h.At("110"), 0.5, 1e-15);
  EXPECT_NEAR(h.At("101"), 0.5, 1e-15);
  EXPECT_NEAR(h.At("011"), 0.5, 1e-15);
  EXPECT_NEAR(h.At("111"), 0.125, 1e-15);

  MrfParams positive;
  positive.w13 = 0.1;
  EXPECT_THROW(MrfFactorTable(positive), dpp::Error);
  EXPECT_THROW(ones.At("12"), dpp::Error);
}

TEST(DppFactorTable, Examples) {
  const auto ones = DppFactorTable({});
  for (int b = 0; b < 8; ++b) EXPECT_EQ(ones[b], 1.0);

  DppParams3 half;
  half.s12 = half.s13 = half.s23 = 0.5;
  const auto t = DppFactorTable(half);
  EXPECT_EQ(t.At("110"), 0.75);
  EXPECT_EQ(t.At("101"), 0.75);
  EXPECT_EQ(t.At("011"), 0.75);
  EXPECT_EQ(t.At("111"), 0.5);
  for (const char* c : {"000", "001", "010", "100"}) EXPECT_EQ(t.At(c), 1.0);

  DppParams3 dup;
  dup.s12 = 1.0;
  const auto d = DppFactorTable(dup);
  EXPECT_EQ(d.At("110"), 0.0);
  EXPECT_EQ(d.At("111"), 0.0);
}

TEST(DppFactorTable, RejectsNonPsdWithEigenvalue) {
  DppParams3 bad;
  bad.s12 = bad.s23 = 0.9;
  try {
    DppFactorTable(bad);
    FAIL();
  } catch (const dpp::Error& e) {
    EXPECT_EQ(e.kind(), dpp::ErrorKind::kDomain);
    EXPECT_NE(std::string(e.what()).find("eigenvalue"), std::string::npos);
  }
}

TEST(DppFactorTable, EntriesAreMinorsAndIgnoreQuality) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> q(0.1, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    dpp::Matrix g = dpptest::RandomGaussian(rng, 3, 3);
    g.rowwise().normalize();
    const dpp::Matrix s = g * g.transpose();
    DppParams3 p;
    p.s12 = s(0, 1), p.s13 = s(0, 2), p.s23 = s(1, 2);
    const auto t = DppFactorTable(p);
    p.q1 = q(rng), p.q2 = q(rng), p.q3 = q(rng);
    const auto tq = DppFactorTable(p);
    for (int bits = 0; bits < 8; ++bits) {
      std::vector<dpp::Index> y;
      for (int i = 0; i < 3; ++i) {
        if (bits >> (2 - i) & 1) y.push_back(i);
      }
      EXPECT_NEAR(t[bits], dpptest::MinorDet(s, dpp::Subset(y)), 1e-12);
      EXPECT_EQ(t[bits], tq[bits]);
    }
  }
}

TEST(TriangleFeasible, Examples) {
  EXPECT_TRUE(TriangleFeasible(0, 0, 0));
  EXPECT_FALSE(TriangleFeasible(0.9, 0.0, 0.9));
  EXPECT_THROW(TriangleFeasible(1.5, 0, 0), dpp::Error);
}

TEST(TriangleFeasible, HoldsForEveryPsdSimilarity) {
  std::mt19937_64 rng(62);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  int psd = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const double a = unit(rng), b = unit(rng), c = unit(rng);
    dpp::Matrix s(3, 3);
    s << 1, a, b, a, 1, c, b, c, 1;
    if (dpptest::EigenvaluesOf(s)(0) < 0) continue;
    ++psd;
    EXPECT_TRUE(TriangleFeasible(a, b, c)) << a << " " << b << " " << c;
  }
  EXPECT_GT(psd, 1000);
}

TEST(ManifoldSlice, UnitTargetCollapsesToOnePoint) {
  for (auto kind : {SliceKind::kMrf, SliceKind::kDpp}) {
    const auto points = ManifoldSlice(kind, {1.0, 201, 1e-3});
    ASSERT_EQ(points.size(), 1u);
    EXPECT_NEAR(points[0].e110, 1.0, 1e-12);
    EXPECT_NEAR(points[0].e101, 1.0, 1e-12);
    EXPECT_NEAR(points[0].e011, 1.0, 1e-12);
  }
}

TEST(ManifoldSlice, DppPointsAreTriangleFeasibleAndOnTarget) {
  const auto points = ManifoldSlice(SliceKind::kDpp, {0.25, 200, 1e-3});
  ASSERT_FALSE(points.empty());
  for (const auto& p : points) {
    EXPECT_TRUE(PointTriangleFeasible(p));
    for (double e : {p.e110, p.e101, p.e011}) {
      EXPECT_GE(e, 0.25 - 1e-12);
      EXPECT_LE(e, 1.0);
    }
  }
}

TEST(ManifoldSlice, SmallTargetMrfEscapesDppConstraint) {
  const auto points = ManifoldSlice(SliceKind::kMrf, {0.001, 200, 1e-3});
  ASSERT_FALSE(points.empty());
  EXPECT_TRUE(std::any_of(points.begin(), points.end(),
                          [](const SlicePoint& p) { return !PointTriangleFeasible(p); }));
}

TEST(ManifoldSlice, RejectsBadArguments) {
  EXPECT_THROW(ManifoldSlice(SliceKind::kDpp, {0.0, 10, 1e-3}), dpp::Error);
  EXPECT_THROW(ManifoldSlice(SliceKind::kDpp, {1.5, 10, 1e-3}), dpp::Error);
  EXPECT_THROW(ManifoldSlice(SliceKind::kMrf, {0.5, 1, 1e-3}), dpp::Error);
  EXPECT_THROW(ParseSliceKind("crf"), dpp::Error);
}

// Any two-item distribution with P(1)P(2) >= P(12) is realized both by a
// pairwise MRF with w12 <= 0 and by an L-ensemble.
TEST(TwoItems, MrfAndDppRealizeEveryNegativelyCorrelatedDistribution) {
  std::mt19937_64 rng(63);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  int checked = 0;
  while (checked < 1000) {
    std::array<double, 4> p{unit(rng), unit(rng), unit(rng), unit(rng)};  // 00 10 01 11
    const double z = p[0] + p[1] + p[2] + p[3];
    for (double& x : p) x /= z;
    const double m1 = p[1] + p[3], m2 = p[2] + p[3];
    if (m1 * m2 < p[3]) continue;
    ++checked;

    // MRF: P(y) proportional to exp(w1 y1 + w2 y2 + w12 y1 y2).
    const double w1 = std::log(p[1] / p[0]), w2 = std::log(p[2] / p[0]);
    const double w12 = std::log(p[3] * p[0] / (p[1] * p[2]));
    EXPECT_LE(w12, 1e-12);
    const std::array<double, 4> mrf{1, std::exp(w1), std::exp(w2), std::exp(w1 + w2 + w12)};
    const double zm = mrf[0] + mrf[1] + mrf[2] + mrf[3];
    for (int k = 0; k < 4; ++k) EXPECT_NEAR(mrf[k] / zm, p[k], 1e-6);

    // DPP: L11 = P(10)/P(00), L22 = P(01)/P(00), L12^2 = L11 L22 - P(11)/P(00).
    const double l11 = p[1] / p[0], l22 = p[2] / p[0];
    const double l12 = std::sqrt(std::max(0.0, l11 * l22 - p[3] / p[0]));
    dpp::Matrix l(2, 2);
    l << l11, l12, l12, l22;
    const dpp::SymmetricKernel kernel(l);
    const std::array<dpp::Subset, 4> ys{dpp::Subset{}, dpp::Subset{0}, dpp::Subset{1}, dpp::Subset{0, 1}};
    for (int k = 0; k < 4; ++k) {
      EXPECT_NEAR(std::exp(dpp::LogProb(kernel, ys[static_cast<std::size_t>(k)])), p[k], 1e-6);
    }
  }
}

}  // namespace
