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

// End-to-end summarization: featurize clusters, train a conditional DPP on
// oracle summaries, and extract budgeted summaries from new clusters.

#ifndef DPP_TEXT_PIPELINE_HPP_
#define DPP_TEXT_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpp/infer.hpp"
#include "dpp/learn.hpp"
#include "dpp/model_io.hpp"
#include "dpp/text/cluster.hpp"
#include "dpp/text/features.hpp"
#include "dpp/text/summary.hpp"

namespace dpp::text {

// Items carry the 39 quality features, phi from tf-idf plus rho, and the
// sentence byte length as cost.
Instance BuildInstance(const Cluster& cluster, const FeatureConfig& config,
                       std::optional<Subset> gold = std::nullopt);

struct TrainOptions {
  TrainerConfig trainer;
  double rho = 0.3;
  std::size_t budget = kDefaultBudget;  // for the oracle targets
};

// Fits bins and idf on `clusters`, builds oracle targets, trains theta.
ModelFile TrainModel(std::span<const Cluster> clusters, const TrainOptions& options);

enum class InferenceMethod { kGreedy, kSampled };

struct SummarizeOptions {
  std::size_t budget = kDefaultBudget;
  InferenceMethod method = InferenceMethod::kGreedy;
  GreedyMode mode = GreedyMode::kLiteral;
  std::uint64_t seed = 1;
  std::size_t samples = 100000;
  // Accepted total sentence bytes for sampled MAP; defaults to
  // [budget - 5, budget + 15].
  std::optional<double> window_lo;
  std::optional<double> window_hi;
};

struct SummaryOutput {
  std::string text;
  SelectionResult selection;
};

SummaryOutput Summarize(const Cluster& cluster, const ModelFile& model,
                        const SummarizeOptions& options);

// Maximal marginal relevance over the learned qualities and tf-idf cosine.
SummaryOutput SummarizeMmr(const Cluster& cluster, const ModelFile& model,
                           double lambda, std::size_t budget);

}  // namespace dpp::text

#endif  // DPP_TEXT_PIPELINE_HPP_
