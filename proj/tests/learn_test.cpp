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

#include "dpp/learn.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "dpp/diagnostics.hpp"
#include "dpp/ensemble.hpp"
#include "dpp/error.hpp"
#include "dpp/sampler.hpp"
#include "support.hpp"

namespace {

using dpp::ConditionalModel;
using dpp::Index;
using dpp::Instance;
using dpp::Matrix;
using dpp::Subset;
using dpp::Vector;

Vector Vec(std::initializer_list<double> v) {
  Vector out(static_cast<Index>(v.size()));
  Index k = 0;
  for (double x : v) out(k++) = x;
  return out;
}

ConditionalModel Model(Vector theta, double sigma2 = std::numeric_limits<double>::infinity()) {
  ConditionalModel m;
  m.theta = std::move(theta);
  m.sigma2 = sigma2;
  return m;
}

Instance SingleItem(std::optional<Subset> gold) {
  Instance inst;
  inst.items.push_back(dpp::Item{Vec({1.0}), Vec({1.0}), 1.0, 0, 1});
  inst.gold = std::move(gold);
  return inst;
}

Vector CentralDifference(const std::vector<Instance>& insts, const Vector& theta,
                         double sigma2, double h) {
  Vector g(theta.size());
  for (Index k = 0; k < theta.size(); ++k) {
    Vector up = theta, down = theta;
    up(k) += h;
    down(k) -= h;
    g(k) = (dpp::LogLikelihood(Model(up, sigma2), insts) -
            dpp::LogLikelihood(Model(down, sigma2), insts)) / (2 * h);
  }
  return g;
}

TEST(Quality, Examples) {
  EXPECT_EQ(dpp::Quality(Vector::Zero(3), Vec({1, 2, 3})), 1.0);
  EXPECT_NEAR(dpp::Quality(Vec({2.0}), Vec({1.0})), std::exp(1.0), 1e-15);
  const Vector theta = Vec({0.3, -0.2}), f = Vec({1.5, 0.7});
  EXPECT_NEAR(dpp::Quality(2 * theta, f), std::pow(dpp::Quality(theta, f), 2), 1e-14);
}

TEST(Quality, ClipsWithWarningAndRejectsNonFinite) {
  int warnings = 0;
  dpp::ScopedWarningHandler capture([&](std::string_view) { ++warnings; });
  EXPECT_EQ(dpp::Quality(Vec({1e4}), Vec({1.0})), std::exp(250.0));
  EXPECT_EQ(warnings, 1);
  try {
    dpp::Quality(Vec({std::numeric_limits<double>::infinity()}), Vec({1.0}));
    FAIL();
  } catch (const dpp::Error& e) {
    EXPECT_EQ(e.kind(), dpp::ErrorKind::kNumerical);
  }
}

TEST(BuildConditionalL, Examples) {
  Instance orth;
  for (Index i = 0; i < 3; ++i) {
    orth.items.push_back(dpp::Item{Vec({0.5, -1}), Vector::Unit(3, i), 1.0, 0, 1});
  }
  EXPECT_EQ(dpp::BuildConditionalL(Model(Vector::Zero(2)), orth).entries(),
            Matrix::Identity(3, 3));
  const auto scalar = dpp::BuildConditionalL(Model(Vec({2.0})), SingleItem(std::nullopt));
  EXPECT_NEAR(scalar(0, 0), std::exp(2.0), 1e-14);
}

TEST(BuildConditionalL, MatchesExplicitQualityPhiConstruction) {
  std::mt19937_64 rng(41);
  const Instance inst = dpptest::RandomInstance(rng, 5, 3);
  const Vector theta = dpptest::RandomGaussian(rng, 3, 1).col(0);
  dpp::QPhiDecomposition d;
  d.q.resize(5);
  d.phi.resize(5, 5);
  for (Index i = 0; i < 5; ++i) {
    const auto& item = inst.items[static_cast<std::size_t>(i)];
    d.q(i) = std::exp(0.5 * theta.dot(item.features));
    d.phi.row(i) = item.phi.transpose();
  }
  const Matrix diff = dpp::BuildConditionalL(Model(theta), inst).entries() - dpp::BuildL(d).entries();
  EXPECT_LT(diff.cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LogLikelihood, Examples) {
  const std::vector<Instance> one{SingleItem(Subset{0})};
  EXPECT_NEAR(dpp::LogLikelihood(Model(Vec({0.0})), one), std::log(0.5), 1e-15);

  const std::vector<Instance> empty_gold{SingleItem(Subset{})};
  const auto model = Model(Vec({1.2}), 2.0);
  const double expected = -dpp::LogNormalizer(dpp::BuildConditionalL(model, empty_gold[0])) -
                          1.2 * 1.2 / (2 * 2.0);
  EXPECT_NEAR(dpp::LogLikelihood(model, empty_gold), expected, 1e-14);
}

TEST(LogLikelihood, MatchesEnumerationOnRandomInstances) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Instance> insts{dpptest::RandomInstance(rng, 4, 3),
                                dpptest::RandomInstance(rng, 3, 3)};
    const Vector theta = dpptest::RandomGaussian(rng, 3, 1).col(0);
    const double sigma2 = trial % 2 ? 3.0 : std::numeric_limits<double>::infinity();
    EXPECT_NEAR(dpp::LogLikelihood(Model(theta, sigma2), insts),
                dpptest::EnumeratedLogLikelihood(theta, sigma2, insts), 1e-9);
  }
}

TEST(LogLikelihood, DuplicateGoldItemsGiveMinusInfinity) {
  Instance inst;
  inst.items.push_back(dpp::Item{Vec({1.0}), Vec({1.0, 0.0}), 1.0, 0, 1});
  inst.items.push_back(dpp::Item{Vec({1.0}), Vec({1.0, 0.0}), 1.0, 0, 2});
  inst.gold = Subset{0, 1};
  EXPECT_EQ(dpp::LogLikelihood(Model(Vec({0.0})), std::vector<Instance>{inst}),
            -std::numeric_limits<double>::infinity());
}

TEST(Gradient, Examples) {
  const std::vector<Instance> one{SingleItem(Subset{0})};
  EXPECT_NEAR(dpp::Gradient(Model(Vec({0.0})), one)(0), 0.5, 1e-15);

  std::mt19937_64 rng(43);
  Instance inst = dpptest::RandomInstance(rng, 5, 2);
  inst.gold = Subset{};
  const std::vector<Instance> insts{inst};
  const auto k = dpp::InclusionProbabilities(dpp::BuildConditionalL(Model(Vector::Zero(2)), inst));
  Vector expected = Vector::Zero(2);
  for (Index i = 0; i < 5; ++i) expected -= k(i) * inst.items[static_cast<std::size_t>(i)].features;
  EXPECT_LT((dpp::Gradient(Model(Vector::Zero(2)), insts) - expected).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Gradient, AgreesWithCentralDifferences) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 2 + trial % 7, m = 1 + trial % 6;
    std::vector<Instance> insts{dpptest::RandomInstance(rng, n, m),
                                dpptest::RandomInstance(rng, 6, m)};
    const Vector theta = dpptest::RandomGaussian(rng, m, 1).col(0);
    const double sigma2 = trial % 3 == 0 ? 0.7 : std::numeric_limits<double>::infinity();
    const Vector g = dpp::Gradient(Model(theta, sigma2), insts);
    const Vector fd = CentralDifference(insts, theta, sigma2, 1e-5);
    EXPECT_LT((g - fd).cwiseAbs().maxCoeff(), 1e-6) << "trial " << trial;
  }
}

TEST(Gradient, IndependentOfInstanceOrder) {
  std::mt19937_64 rng(45);
  std::vector<Instance> insts;
  for (int t = 0; t < 12; ++t) insts.push_back(dpptest::RandomInstance(rng, 6, 4));
  const auto model = Model(dpptest::RandomGaussian(rng, 4, 1).col(0));
  const Vector g1 = dpp::Gradient(model, insts);
  std::reverse(insts.begin(), insts.end());
  const Vector g2 = dpp::Gradient(model, insts);
  EXPECT_LT((g1 - g2).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(LikelihoodProblem, MatchesFreeFunctions) {
  std::mt19937_64 rng(46);
  std::vector<Instance> insts{dpptest::RandomInstance(rng, 6, 3), dpptest::RandomInstance(rng, 4, 3)};
  const dpp::LikelihoodProblem problem(insts, 2.5);
  const Vector theta = dpptest::RandomGaussian(rng, 3, 1).col(0);
  const auto v = problem.Evaluate(theta);
  EXPECT_NEAR(v.objective, dpp::LogLikelihood(Model(theta, 2.5), insts), 1e-10);
  EXPECT_LT((v.gradient - dpp::Gradient(Model(theta, 2.5), insts)).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Concavity, MidpointProbe) {
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Instance> insts{dpptest::RandomInstance(rng, 5, 3)};
    const Vector a = 2 * dpptest::RandomGaussian(rng, 3, 1).col(0);
    const Vector b = 2 * dpptest::RandomGaussian(rng, 3, 1).col(0);
    const double la = dpp::LogLikelihood(Model(a), insts);
    const double lb = dpp::LogLikelihood(Model(b), insts);
    for (int s = 0; s < 20; ++s) {
      const double t = unit(rng);
      EXPECT_GE(dpp::LogLikelihood(Model(t * a + (1 - t) * b), insts),
                t * la + (1 - t) * lb - 1e-9);
    }
  }
}

TEST(Train, SeparableDataHitsIterationCapWithoutPrior) {
  const std::vector<Instance> one{SingleItem(Subset{0})};
  dpp::TrainerConfig config;
  config.tolerance = 0.0;
  config.max_iterations = 20;
  const auto model = dpp::Train(one, config);
  EXPECT_FALSE(model.status.converged);
  EXPECT_EQ(model.status.iterations, 20);
  EXPECT_EQ(model.status.message, "iteration limit reached");
  EXPECT_GT(model.theta(0), 5.0);
}

TEST(Train, SeparableDataGradientVanishesBelowDefaultTolerance) {
  // The gradient 1/(1 + e^theta) drops below 1e-6 near theta = 13.8, so the
  // default tolerance is met at a large but finite theta.
  const std::vector<Instance> one{SingleItem(Subset{0})};
  const auto model = dpp::Train(one, dpp::TrainerConfig{});
  EXPECT_TRUE(model.status.converged);
  EXPECT_GT(model.theta(0), 13.0);
  EXPECT_LT(1.0 / (1.0 + std::exp(model.theta(0))), 1e-6);
}

TEST(Train, UnitPriorSolvesStationarityEquation) {
  // 1 - e^t / (1 + e^t) - t = 0, located by bisection.
  double lo = 0.0, hi = 1.0;
  for (int k = 0; k < 200; ++k) {
    const double mid = (lo + hi) / 2;
    (1 - 1 / (1 + std::exp(-mid)) - mid > 0 ? lo : hi) = mid;
  }
  const std::vector<Instance> one{SingleItem(Subset{0})};
  dpp::TrainerConfig config;
  config.sigma2 = 1.0;
  config.tolerance = 1e-10;
  const auto model = dpp::Train(one, config);
  EXPECT_TRUE(model.status.converged);
  EXPECT_NEAR(model.theta(0), lo, 1e-9);
  EXPECT_NEAR(lo, 0.40106, 1e-5);
}

TEST(Train, ReachesPlantedOptimumAndZeroGradient) {
  std::mt19937_64 rng(48);
  for (int trial = 0; trial < 5; ++trial) {
    const Index m = 3;
    const Vector planted = dpptest::RandomGaussian(rng, m, 1).col(0);
    std::vector<Instance> insts;
    for (int t = 0; t < 15; ++t) {
      Instance inst = dpptest::RandomInstance(rng, 6, m);
      dpp::Sampler sampler(dpp::BuildConditionalL(Model(planted), inst), 1000 + t);
      inst.gold = sampler.Sample();
      insts.push_back(std::move(inst));
    }
    dpp::TrainerConfig config;
    config.sigma2 = 10.0;
    const auto model = dpp::Train(insts, config);
    ASSERT_TRUE(model.status.converged) << model.status.message;
    EXPECT_GE(dpp::LogLikelihood(Model(model.theta, 10.0), insts),
              dpp::LogLikelihood(Model(planted, 10.0), insts) - 1e-6);
    EXPECT_LT(dpp::Gradient(Model(model.theta, 10.0), insts).lpNorm<Eigen::Infinity>(), 1e-6);
  }
}

TEST(Train, PlainGradientAscentAgreesWithQuasiNewton) {
  std::mt19937_64 rng(49);
  std::vector<Instance> insts;
  for (int t = 0; t < 5; ++t) insts.push_back(dpptest::RandomInstance(rng, 5, 2));
  dpp::TrainerConfig config;
  config.sigma2 = 1.0;
  config.tolerance = 1e-7;
  const auto lbfgs = dpp::Train(insts, config);
  config.plain_gradient = true;
  config.max_iterations = 20000;
  const auto gd = dpp::Train(insts, config);
  ASSERT_TRUE(gd.status.converged) << gd.status.message;
  EXPECT_LT((lbfgs.theta - gd.theta).cwiseAbs().maxCoeff(), 1e-5);
}

TEST(Train, RejectsBadInput) {
  EXPECT_THROW(dpp::Train(std::vector<Instance>{}, dpp::TrainerConfig{}), dpp::Error);
  const std::vector<Instance> no_gold{SingleItem(std::nullopt)};
  EXPECT_THROW(dpp::Train(no_gold, dpp::TrainerConfig{}), dpp::Error);
}

TEST(ConditionalModel, Validate) {
  EXPECT_NO_THROW(Model(Vec({1.0})).Validate());
  EXPECT_THROW(Model(Vec({1.0}), 0.0).Validate(), dpp::Error);
  EXPECT_THROW(Model(Vec({std::nan("")})).Validate(), dpp::Error);
}

TEST(Instance, ValidateRejectsNonUnitPhiAndBadGold) {
  Instance inst = SingleItem(Subset{0});
  EXPECT_NO_THROW(inst.Validate());
  inst.gold = Subset{1};
  EXPECT_THROW(inst.Validate(), dpp::Error);
  inst.gold = Subset{0};
  inst.items[0].phi = Vec({0.5});
  EXPECT_THROW(inst.Validate(), dpp::Error);
}

}  // namespace
