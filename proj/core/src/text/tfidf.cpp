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

#include "dpp/text/tfidf.hpp"

#include <cmath>
#include <set>

#include "dpp/error.hpp"
#include "dpp/text/tokenize.hpp"

namespace dpp::text {

double IdfTable::Weight(const std::string& term) const {
  const auto it = df.find(term);
  const int count = it == df.end() ? 0 : it->second;
  return std::log((documents + 1.0) / (count + 1.0)) + 1.0;
}

IdfTable FitIdf(std::span<const Cluster> clusters) {
  Require(!clusters.empty(), "FitIdf: no training clusters");
  IdfTable idf;
  for (const Cluster& cluster : clusters) {
    std::vector<std::set<std::string>> seen(
        static_cast<std::size_t>(cluster.num_documents));
    for (const Sentence& s : cluster.sentences) {
      for (std::string& t : Tokenize(s.text)) {
        seen[static_cast<std::size_t>(s.document)].insert(std::move(t));
      }
    }
    for (const auto& terms : seen) {
      for (const std::string& t : terms) ++idf.df[t];
    }
    idf.documents += cluster.num_documents;
  }
  return idf;
}

Matrix TfidfVectors(const std::vector<std::vector<std::string>>& sentences,
                    const IdfTable& idf) {
  std::map<std::string, Index> column;
  for (const auto& tokens : sentences) {
    for (const std::string& t : tokens) column.emplace(t, 0);
  }
  Index next = 0;
  for (auto& [term, col] : column) col = next++;

  Vector weight(next);
  for (const auto& [term, col] : column) weight(col) = idf.Weight(term);

  Matrix out = Matrix::Zero(static_cast<Index>(sentences.size()), next);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const auto row = static_cast<Index>(i);
    for (const std::string& t : sentences[i]) out(row, column.at(t)) += 1.0;
    out.row(row).array() *= weight.transpose().array();
    const double norm = out.row(row).norm();
    if (norm > 0.0) out.row(row) /= norm;
  }
  return out;
}

Matrix TfidfVectors(const Cluster& cluster, const IdfTable& idf) {
  std::vector<std::vector<std::string>> tokens;
  tokens.reserve(cluster.sentences.size());
  for (const Sentence& s : cluster.sentences) tokens.push_back(Tokenize(s.text));
  return TfidfVectors(tokens, idf);
}

Matrix CosineMatrix(const Matrix& tfidf) {
  Matrix c = tfidf * tfidf.transpose();
  return (c + c.transpose()) / 2.0;
}

Vector PhiFeatures(const Vector& tfidf, double rho) {
  Require(std::isfinite(rho) && rho >= 0.0, "PhiFeatures: rho must be >= 0");
  Vector phi(tfidf.size() + 1);
  phi << tfidf, rho;
  const double norm = phi.norm();
  if (!(norm > 0.0)) {
    Fail(ErrorKind::kDomain, "PhiFeatures: zero vector with rho = 0");
  }
  return phi / norm;
}

Matrix PhiFeatures(const Matrix& tfidf, double rho) {
  Require(std::isfinite(rho) && rho >= 0.0, "PhiFeatures: rho must be >= 0");
  const Index n = tfidf.rows();
  std::vector<Index> isolated;
  for (Index i = 0; i < n; ++i) {
    if (rho == 0.0 && tfidf.row(i).squaredNorm() == 0.0) isolated.push_back(i);
  }
  const Index d = tfidf.cols();
  Matrix phi = Matrix::Zero(n, d + 1 + static_cast<Index>(isolated.size()));
  phi.leftCols(d) = tfidf;
  phi.col(d).setConstant(rho);
  for (std::size_t k = 0; k < isolated.size(); ++k) {
    phi(isolated[k], d + 1 + static_cast<Index>(k)) = 1.0;
  }
  for (Index i = 0; i < n; ++i) phi.row(i) /= phi.row(i).norm();
  return phi;
}

}  // namespace dpp::text
