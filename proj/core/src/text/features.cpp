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

#include "dpp/text/features.hpp"

#include <algorithm>
#include <cmath>

#include "dpp/error.hpp"
#include "dpp/text/lexrank.hpp"

namespace dpp::text {
namespace {

constexpr int kLengthOffset = 1;
constexpr int kPositionOffset = 6;
constexpr int kSimilarityRaw = 12;
constexpr int kSimilarityGlobal = 13;
constexpr int kSimilarityLocal = 18;
constexpr int kLexRankRaw = 28;
constexpr int kLexRankGlobal = 29;
constexpr int kLexRankLocal = 34;

std::vector<double> ToStd(const Vector& v) { return {v.data(), v.data() + v.size()}; }

bool Monotone(const std::vector<double>& edges) {
  return std::all_of(edges.begin(), edges.end(),
                     [](double e) { return std::isfinite(e); }) &&
         std::is_sorted(edges.begin(), edges.end());
}

}  // namespace

bool FeatureConfig::fitted() const {
  const auto expected = static_cast<std::size_t>(kGlobalBins - 1);
  return length_edges.size() == expected && similarity_edges.size() == expected &&
         lexrank_edges.size() == expected && idf.documents > 0;
}

void FeatureConfig::Validate() const {
  Require(std::isfinite(rho) && rho >= 0.0, "FeatureConfig: rho must be >= 0");
  Require(fitted(), "FeatureConfig: bin edges and idf table are not fitted");
  Require(Monotone(length_edges) && Monotone(similarity_edges) &&
              Monotone(lexrank_edges),
          "FeatureConfig: bin edges must be finite and nondecreasing");
  Require(local_similarity_bins == 10 && local_lexrank_bins == 5,
          "FeatureConfig: local bin counts must be 10 (similarity) and 5 (LexRank)");
}

RawFeatures ComputeRawFeatures(const Cluster& cluster, const IdfTable& idf) {
  const auto n = static_cast<Index>(cluster.sentences.size());
  RawFeatures raw;
  raw.length.resize(n);
  for (Index i = 0; i < n; ++i) {
    raw.length(i) = static_cast<double>(cluster.sentences[static_cast<std::size_t>(i)].bytes);
  }
  const Matrix cosine = CosineMatrix(TfidfVectors(cluster, idf));
  raw.mean_similarity = Vector::Zero(n);
  if (n > 1) {
    for (Index i = 0; i < n; ++i) {
      raw.mean_similarity(i) =
          (cosine.row(i).sum() - cosine(i, i)) / static_cast<double>(n - 1);
    }
  }
  raw.lexrank = LexRank(cosine.cwiseMax(0.0)).scores;
  return raw;
}

std::vector<double> QuantileEdges(std::vector<double> values, int bins) {
  Require(bins >= 1, "QuantileEdges: bins must be positive");
  Require(!values.empty(), "QuantileEdges: no values");
  std::sort(values.begin(), values.end());
  const double last = static_cast<double>(values.size() - 1);
  std::vector<double> edges;
  for (int k = 1; k < bins; ++k) {
    const double pos = last * k / bins;
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    edges.push_back(values[lo] + frac * (values[hi] - values[lo]));
  }
  return edges;
}

int BinIndex(const std::vector<double>& edges, double value) {
  return static_cast<int>(std::lower_bound(edges.begin(), edges.end(), value) -
                          edges.begin());
}

FeatureConfig FitFeatureConfig(std::span<const Cluster> clusters, double rho) {
  Require(!clusters.empty(), "FitFeatureConfig: no training clusters");
  FeatureConfig config;
  config.rho = rho;
  config.idf = FitIdf(clusters);
  std::vector<double> length, similarity, lexrank;
  for (const Cluster& cluster : clusters) {
    const RawFeatures raw = ComputeRawFeatures(cluster, config.idf);
    const auto append = [](std::vector<double>& to, const Vector& v) {
      to.insert(to.end(), v.data(), v.data() + v.size());
    };
    append(length, raw.length);
    append(similarity, raw.mean_similarity);
    append(lexrank, raw.lexrank);
  }
  Require(!length.empty(), "FitFeatureConfig: training clusters have no sentences");
  config.length_edges = QuantileEdges(length, kGlobalBins);
  config.similarity_edges = QuantileEdges(similarity, kGlobalBins);
  config.lexrank_edges = QuantileEdges(lexrank, kGlobalBins);
  config.Validate();
  return config;
}

Matrix QualityFeatures(const Cluster& cluster, const FeatureConfig& config) {
  config.Validate();
  const auto n = static_cast<Index>(cluster.sentences.size());
  const RawFeatures raw = ComputeRawFeatures(cluster, config.idf);
  const std::vector<double> local_similarity =
      n > 0 ? QuantileEdges(ToStd(raw.mean_similarity), config.local_similarity_bins)
            : std::vector<double>{};
  const std::vector<double> local_lexrank =
      n > 0 ? QuantileEdges(ToStd(raw.lexrank), config.local_lexrank_bins)
            : std::vector<double>{};

  Matrix f = Matrix::Zero(n, kNumQualityFeatures);
  for (Index i = 0; i < n; ++i) {
    const Sentence& s = cluster.sentences[static_cast<std::size_t>(i)];
    f(i, 0) = 1.0;
    f(i, kLengthOffset + BinIndex(config.length_edges, raw.length(i))) = 1.0;
    f(i, kPositionOffset + std::min(s.position, kPositionSlots + 1) - 1) = 1.0;

    f(i, kSimilarityRaw) = raw.mean_similarity(i);
    f(i, kSimilarityGlobal + BinIndex(config.similarity_edges, raw.mean_similarity(i))) = 1.0;
    f(i, kSimilarityLocal + BinIndex(local_similarity, raw.mean_similarity(i))) = 1.0;

    f(i, kLexRankRaw) = raw.lexrank(i);
    f(i, kLexRankGlobal + BinIndex(config.lexrank_edges, raw.lexrank(i))) = 1.0;
    f(i, kLexRankLocal + BinIndex(local_lexrank, raw.lexrank(i))) = 1.0;
  }
  return f;
}

std::vector<std::string> QualityFeatureNames() {
  std::vector<std::string> names{"constant"};
  const auto bins = [&](const std::string& stem, int count) {
    for (int k = 1; k <= count; ++k) names.push_back(stem + std::to_string(k));
  };
  bins("length_global_bin_", kGlobalBins);
  bins("position_", kPositionSlots);
  names.emplace_back("position_later");
  names.emplace_back("mean_similarity");
  bins("mean_similarity_global_bin_", kGlobalBins);
  bins("mean_similarity_local_bin_", 10);
  names.emplace_back("lexrank");
  bins("lexrank_global_bin_", kGlobalBins);
  bins("lexrank_local_bin_", 5);
  return names;
}

}  // namespace dpp::text
