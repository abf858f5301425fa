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

#include "dpp/text/pipeline.hpp"

#include <algorithm>
#include <utility>

#include "dpp/error.hpp"
#include "dpp/sampler.hpp"
#include "dpp/text/tfidf.hpp"

namespace dpp::text {
namespace {

void RequireTrained(const ModelFile& model) {
  Require(model.model.theta.size() == kNumQualityFeatures,
          "model has " + std::to_string(model.model.theta.size()) +
              " weights; expected " + std::to_string(kNumQualityFeatures) +
              " (was it trained?)");
}

}  // namespace

Instance BuildInstance(const Cluster& cluster, const FeatureConfig& config,
                       std::optional<Subset> gold) {
  const Matrix f = QualityFeatures(cluster, config);
  const Matrix phi = PhiFeatures(TfidfVectors(cluster, config.idf), config.rho);
  Instance instance;
  instance.id = cluster.id;
  instance.gold = std::move(gold);
  for (std::size_t i = 0; i < cluster.sentences.size(); ++i) {
    const Sentence& s = cluster.sentences[i];
    const auto row = static_cast<Index>(i);
    instance.items.push_back(Item{f.row(row).transpose(), phi.row(row).transpose(),
                                  static_cast<double>(s.bytes), s.document, s.position});
  }
  instance.Validate();
  return instance;
}

ModelFile TrainModel(std::span<const Cluster> clusters, const TrainOptions& options) {
  ModelFile out;
  out.features = FitFeatureConfig(clusters, options.rho);
  std::vector<Instance> instances;
  for (const Cluster& cluster : clusters) {
    instances.push_back(BuildInstance(cluster, out.features,
                                      OracleSummary(cluster, options.budget).chosen));
  }
  out.model = Train(instances, options.trainer);
  out.model.rho = options.rho;
  out.model.feature_names = QualityFeatureNames();
  return out;
}

SummaryOutput Summarize(const Cluster& cluster, const ModelFile& model,
                        const SummarizeOptions& options) {
  RequireTrained(model);
  const Instance instance = BuildInstance(cluster, model.features);
  const SymmetricKernel l = BuildConditionalL(model.model, instance);
  const std::vector<double> costs = instance.Costs();
  const auto budget = static_cast<double>(options.budget);

  SummaryOutput out;
  if (options.method == InferenceMethod::kGreedy) {
    out.selection = GreedyMap(l, BudgetSpec{costs, budget}, options.mode);
  } else {
    const double lo = options.window_lo.value_or(std::max(0.0, budget - 5.0));
    const double hi = options.window_hi.value_or(budget + 15.0);
    Sampler sampler(l, options.seed);
    out.selection = SampledMap(sampler, costs, lo, hi, options.samples);
  }
  out.text = AssembleSummary(cluster, out.selection.chosen, options.budget);
  return out;
}

SummaryOutput SummarizeMmr(const Cluster& cluster, const ModelFile& model,
                           double lambda, std::size_t budget) {
  RequireTrained(model);
  const Instance instance = BuildInstance(cluster, model.features);
  Vector quality(instance.size());
  for (Index i = 0; i < instance.size(); ++i) {
    quality(i) = Quality(model.model.theta, instance.items[static_cast<std::size_t>(i)].features);
  }
  Matrix cosine = CosineMatrix(TfidfVectors(cluster, model.features.idf));
  cosine.diagonal().setOnes();
  SummaryOutput out;
  out.selection = MmrSelect(quality, SymmetricKernel(cosine), lambda,
                            BudgetSpec{instance.Costs(), static_cast<double>(budget)});
  out.text = AssembleSummary(cluster, out.selection.chosen, budget);
  return out;
}

}  // namespace dpp::text
