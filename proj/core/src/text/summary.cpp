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

#include "dpp/text/summary.hpp"

#include <algorithm>

#include "dpp/error.hpp"
#include "dpp/text/rouge.hpp"
#include "dpp/text/tokenize.hpp"

namespace dpp::text {

OracleResult OracleSummary(const Cluster& cluster, std::size_t budget) {
  Require(!cluster.references.empty(),
          "OracleSummary: cluster " + cluster.id + " has no references");
  std::vector<NgramCounts> refs;
  for (const std::string& r : cluster.references) {
    refs.push_back(CountNgrams(Tokenize(r), 1));
  }
  std::vector<NgramCounts> sentences;
  for (const Sentence& s : cluster.sentences) {
    sentences.push_back(CountNgrams(Tokenize(s.text), 1));
  }

  OracleResult result;
  std::vector<bool> taken(sentences.size(), false);
  std::size_t remaining = budget;
  for (;;) {
    Index best = -1;
    double best_f = 0.0;
    for (std::size_t i = 0; i < sentences.size(); ++i) {
      if (taken[i] || cluster.sentences[i].bytes > remaining) continue;
      double total = 0.0;
      for (const NgramCounts& ref : refs) {
        total += ScoreCounts(sentences[i], ref).f_measure;
      }
      const double mean = total / static_cast<double>(refs.size());
      if (mean > best_f) {
        best_f = mean;
        best = static_cast<Index>(i);
      }
    }
    if (best < 0) break;

    const auto b = static_cast<std::size_t>(best);
    taken[b] = true;
    result.order.push_back(best);
    result.mean_f.push_back(best_f);
    result.total_bytes += cluster.sentences[b].bytes;
    remaining -= cluster.sentences[b].bytes;
    for (NgramCounts& ref : refs) {
      for (const auto& [word, count] : sentences[b]) {
        const auto it = ref.find(word);
        if (it == ref.end()) continue;
        it->second -= std::min(count, it->second);
        if (it->second == 0) ref.erase(it);
      }
    }
  }
  result.chosen = Subset(result.order);
  return result;
}

std::string AssembleSummary(const Cluster& cluster, const Subset& y,
                            std::size_t budget) {
  y.CheckBounds(static_cast<Index>(cluster.sentences.size()));
  std::vector<const Sentence*> picked;
  for (Index i : y) picked.push_back(&cluster.sentences[static_cast<std::size_t>(i)]);
  std::stable_sort(picked.begin(), picked.end(), [](const Sentence* a, const Sentence* b) {
    return std::pair(a->document, a->position) < std::pair(b->document, b->position);
  });
  std::string out;
  for (const Sentence* s : picked) {
    if (!out.empty()) out += ' ';
    out += s->text;
  }
  if (out.size() > budget) out.resize(budget);
  return out;
}

std::string BeginBaseline(const Cluster& cluster, std::size_t budget) {
  std::string text = cluster.FullText();
  if (text.size() > budget) text.resize(budget);
  return text;
}

}  // namespace dpp::text
