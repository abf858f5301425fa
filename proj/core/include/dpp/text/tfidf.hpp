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

#ifndef DPP_TEXT_TFIDF_HPP_
#define DPP_TEXT_TFIDF_HPP_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "dpp/linalg.hpp"
#include "dpp/text/cluster.hpp"

namespace dpp::text {

// Document frequencies over a training corpus; each document file counts
// once. Weight(t) = log((D + 1) / (df(t) + 1)) + 1, so unseen terms get
// log(D + 1) + 1.
struct IdfTable {
  int documents = 0;
  std::map<std::string, int> df;

  double Weight(const std::string& term) const;
};

IdfTable FitIdf(std::span<const Cluster> clusters);

// One row per sentence over the sentences' joint vocabulary: raw term count
// times idf, then L2-normalized. Sentences with no tokens give zero rows.
Matrix TfidfVectors(const std::vector<std::vector<std::string>>& sentences,
                    const IdfTable& idf);
Matrix TfidfVectors(const Cluster& cluster, const IdfTable& idf);

// Pairwise dot products of the (normalized) rows.
Matrix CosineMatrix(const Matrix& tfidf);

// Appends the constant rho and renormalizes, so that
// <phi_i, phi_j> = (cos_ij + rho^2) / (1 + rho^2) for nonzero rows.
// kDomain when the input is zero and rho is 0.
Vector PhiFeatures(const Vector& tfidf, double rho);

// Row-wise version. A zero row with rho = 0 gets its own extra coordinate,
// which keeps it unit norm and orthogonal to every other sentence.
Matrix PhiFeatures(const Matrix& tfidf, double rho);

}  // namespace dpp::text

#endif  // DPP_TEXT_TFIDF_HPP_
