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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "dpp/infer.hpp"
#include "dpp/learn.hpp"
#include "dpp/linalg.hpp"
#include "dpp/sampler.hpp"
#include "dpp/text/lexrank.hpp"

namespace {

using dpp::Index;
using dpp::Matrix;
using dpp::Vector;

Matrix Gaussian(std::mt19937_64& rng, Index rows, Index cols) {
  std::normal_distribution<double> normal;
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) m(i, j) = normal(rng);
  }
  return m;
}

// Gram matrix of n random unit vectors scaled so the expected sample size
// stays moderate.
Matrix RandomKernel(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix b = Gaussian(rng, n, n);
  b.rowwise().normalize();
  return 0.5 * b * b.transpose();
}

void BM_JacobiEigen(benchmark::State& state) {
  const Matrix a = RandomKernel(state.range(0), 1);
  for (auto _ : state) {
    auto eig = dpp::JacobiEigen(a);
    benchmark::DoNotOptimize(eig.values.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_JacobiEigen)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void BM_LogDetPsd(benchmark::State& state) {
  const Matrix a = RandomKernel(state.range(0), 2) + Matrix::Identity(state.range(0), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dpp::LogDetPsd(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LogDetPsd)->RangeMultiplier(2)->Range(8, 256)->Complexity();

// Eigendecomposition is cached by the kernel, so this measures the
// projection phase of each draw.
void BM_SamplerDraw(benchmark::State& state) {
  dpp::Sampler sampler(dpp::SymmetricKernel(RandomKernel(state.range(0), 3)), 7);
  sampler.Sample();
  for (auto _ : state) {
    auto y = sampler.Sample();
    benchmark::DoNotOptimize(y);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SamplerDraw)->RangeMultiplier(2)->Range(16, 256)->Complexity();

void BM_GreedyMap(benchmark::State& state) {
  const Index n = state.range(0);
  const dpp::SymmetricKernel l(RandomKernel(n, 4) * 4.0);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> cost(60.0, 200.0);
  dpp::BudgetSpec budget;
  for (Index i = 0; i < n; ++i) budget.costs.push_back(cost(rng));
  budget.budget = 665.0;
  for (auto _ : state) {
    auto r = dpp::GreedyMap(l, budget);
    benchmark::DoNotOptimize(r.log_det);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_GreedyMap)->RangeMultiplier(2)->Range(32, 512)->Complexity();

// One objective and gradient evaluation over ten training clusters.
void BM_LikelihoodGradient(benchmark::State& state) {
  const Index n = state.range(0);
  const Index m = 39;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<dpp::Instance> instances(10);
  for (auto& inst : instances) {
    const Matrix phi = Gaussian(rng, n, 2 * n);
    for (Index i = 0; i < n; ++i) {
      dpp::Item item;
      item.features = Gaussian(rng, m, 1).col(0) * 0.1;
      item.phi = phi.row(i).transpose().normalized();
      item.cost = 1.0;
      inst.items.push_back(std::move(item));
    }
    std::vector<Index> gold;
    for (Index i = 0; i < n; ++i) {
      if (unit(rng) < 0.1) gold.push_back(i);
    }
    inst.gold = dpp::Subset(gold);
  }
  const dpp::LikelihoodProblem problem(instances, 1.0);
  const Vector theta = Vector::Zero(m);
  for (auto _ : state) {
    auto value = problem.Evaluate(theta);
    benchmark::DoNotOptimize(value.objective);
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_LikelihoodGradient)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_LexRank(benchmark::State& state) {
  const Matrix c = RandomKernel(state.range(0), 8).cwiseAbs();
  for (auto _ : state) {
    auto r = dpp::text::LexRank(c);
    benchmark::DoNotOptimize(r.scores.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LexRank)->RangeMultiplier(2)->Range(16, 256)->Complexity();

}  // namespace

BENCHMARK_MAIN();
