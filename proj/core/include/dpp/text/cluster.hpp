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

// Document clusters on disk:
//
//   <cluster>/docs/<k>.txt   one pre-split sentence per line, k = 1, 2, ...
//   <cluster>/refs/<j>.txt   one reference summary per file (optional)
//   <cluster>/meta           optional "key = value" lines ('#' comments)
//
// A corpus is a directory whose subdirectories are clusters.

#ifndef DPP_TEXT_CLUSTER_HPP_
#define DPP_TEXT_CLUSTER_HPP_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace dpp::text {

struct Sentence {
  std::string text;
  std::size_t bytes = 0;  // text.size(), spaces included
  int document = 0;       // 0-based, in document file order
  int position = 0;       // 1-based within its document
};

struct Cluster {
  std::string id;
  int num_documents = 0;
  std::vector<Sentence> sentences;  // document order, then position order
  std::vector<std::string> references;
  std::map<std::string, std::string> meta;

  // Sentences of all documents joined by single spaces.
  std::string FullText() const;
};

// kIo when the directory is missing, kFormat for malformed content (the
// message names the offending file and line).
Cluster Ingest(const std::filesystem::path& dir);

// Every subdirectory containing docs/, in lexicographic order.
std::vector<Cluster> IngestCorpus(const std::filesystem::path& dir);

// Reads every regular file in `dir` (sorted by name) as one reference.
std::vector<std::string> ReadReferences(const std::filesystem::path& dir);

std::string ReadFile(const std::filesystem::path& path);

}  // namespace dpp::text

#endif  // DPP_TEXT_CLUSTER_HPP_
