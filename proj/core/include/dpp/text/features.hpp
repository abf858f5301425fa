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

// The 39 sentence quality features:
//
//   [0]      constant 1
//   [1, 6)   length (bytes), five global bins
//   [6, 12)  document position 1..5, then "later"
//   [12]     mean tf-idf cosine to the other sentences of the cluster
//   [13, 18) ... five global bins
//   [18, 28) ... ten local bins
//   [28]     LexRank score
//   [29, 34) ... five global bins
//   [34, 39) ... five local bins
//
// Global bin edges are quantiles over all training sentences; local edges
// are quantiles within the cluster being featurized.

#ifndef DPP_TEXT_FEATURES_HPP_
#define DPP_TEXT_FEATURES_HPP_

#include <span>
#include <string>
#include <vector>

#include "dpp/linalg.hpp"
#include "dpp/text/cluster.hpp"
#include "dpp/text/tfidf.hpp"

namespace dpp::text {

inline constexpr Index kNumQualityFeatures = 39;
inline constexpr int kGlobalBins = 5;
inline constexpr int kPositionSlots = 5;

struct FeatureConfig {
  double rho = 0.3;
  std::vector<double> length_edges;      // kGlobalBins - 1 each
  std::vector<double> similarity_edges;
  std::vector<double> lexrank_edges;
  int local_similarity_bins = 10;
  int local_lexrank_bins = 5;
  IdfTable idf;

  bool fitted() const;
  // Edge counts, monotone edges, rho >= 0. kInvalidArgument otherwise.
  void Validate() const;
};

// Per-sentence raw scores that feed the binned features.
struct RawFeatures {
  Vector length;
  Vector mean_similarity;
  Vector lexrank;
};

RawFeatures ComputeRawFeatures(const Cluster& cluster, const IdfTable& idf);

// Quantiles at 1/k, ..., (k-1)/k with linear interpolation between order
// statistics (position p * (N - 1) in the sorted values).
std::vector<double> QuantileEdges(std::vector<double> values, int bins);

// Number of edges strictly below `value`, i.e. a 0-based bin index.
int BinIndex(const std::vector<double>& edges, double value);

// Idf over the training documents, then global edges over the pooled
// training sentences.
FeatureConfig FitFeatureConfig(std::span<const Cluster> clusters, double rho);

// n x 39. kInvalidArgument when the config is not fitted.
Matrix QualityFeatures(const Cluster& cluster, const FeatureConfig& config);

std::vector<std::string> QualityFeatureNames();

}  // namespace dpp::text

#endif  // DPP_TEXT_FEATURES_HPP_
