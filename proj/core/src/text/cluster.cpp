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

#include "dpp/text/cluster.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "dpp/error.hpp"

namespace fs = std::filesystem;

namespace dpp::text {
namespace {

std::string Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<fs::path> SortedFiles(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::vector<Sentence> ReadDocument(const fs::path& path, int document) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kIo, "cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && Trim(lines.back()).empty()) lines.pop_back();

  std::vector<Sentence> out;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (Trim(lines[k]).empty()) {
      Fail(ErrorKind::kFormat, path.string() + ": sentence " +
                                   std::to_string(k + 1) + " is empty");
    }
    Sentence s;
    s.text = std::move(lines[k]);
    s.bytes = s.text.size();
    s.document = document;
    s.position = static_cast<int>(k) + 1;
    out.push_back(std::move(s));
  }
  if (out.empty()) {
    Fail(ErrorKind::kFormat, path.string() + ": document has no sentences");
  }
  return out;
}

std::map<std::string, std::string> ReadMeta(const fs::path& path) {
  std::map<std::string, std::string> meta;
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kIo, "cannot open " + path.string());
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = Trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      Fail(ErrorKind::kFormat, path.string() + ": line " +
                                   std::to_string(line_no) +
                                   " is not 'key = value'");
    }
    meta[Trim(trimmed.substr(0, eq))] = Trim(trimmed.substr(eq + 1));
  }
  return meta;
}

}  // namespace

std::string Cluster::FullText() const {
  std::string out;
  for (const Sentence& s : sentences) {
    if (!out.empty()) out += ' ';
    out += s.text;
  }
  return out;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> ReadReferences(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    Fail(ErrorKind::kIo, "reference directory " + dir.string() + " not found");
  }
  std::vector<std::string> refs;
  for (const fs::path& file : SortedFiles(dir)) refs.push_back(ReadFile(file));
  return refs;
}

Cluster Ingest(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    Fail(ErrorKind::kIo, "cluster directory " + dir.string() + " not found");
  }
  const fs::path docs = dir / "docs";
  if (!fs::is_directory(docs)) {
    Fail(ErrorKind::kFormat, dir.string() + ": missing docs/ directory");
  }

  std::vector<std::pair<long, fs::path>> numbered;
  for (const fs::path& file : SortedFiles(docs)) {
    if (file.extension() != ".txt") continue;
    const std::string stem = file.stem().string();
    long k = 0;
    const auto [ptr, ec] = std::from_chars(stem.data(), stem.data() + stem.size(), k);
    if (ec != std::errc() || ptr != stem.data() + stem.size()) {
      Fail(ErrorKind::kFormat,
           file.string() + ": document files must be named <number>.txt");
    }
    numbered.emplace_back(k, file);
  }
  std::sort(numbered.begin(), numbered.end());
  if (numbered.empty()) {
    Fail(ErrorKind::kFormat, dir.string() + ": cluster has no documents");
  }

  Cluster cluster;
  cluster.id = dir.filename().string();
  if (cluster.id.empty()) cluster.id = dir.parent_path().filename().string();
  for (std::size_t d = 0; d < numbered.size(); ++d) {
    auto sentences = ReadDocument(numbered[d].second, static_cast<int>(d));
    std::move(sentences.begin(), sentences.end(),
              std::back_inserter(cluster.sentences));
  }
  cluster.num_documents = static_cast<int>(numbered.size());

  if (fs::is_directory(dir / "refs")) {
    cluster.references = ReadReferences(dir / "refs");
  }
  if (fs::is_regular_file(dir / "meta")) {
    cluster.meta = ReadMeta(dir / "meta");
    if (auto it = cluster.meta.find("id"); it != cluster.meta.end()) {
      cluster.id = it->second;
    }
  }
  return cluster;
}

std::vector<Cluster> IngestCorpus(const fs::path& dir) {
  if (!fs::is_directory(dir)) {
    Fail(ErrorKind::kIo, "corpus directory " + dir.string() + " not found");
  }
  std::vector<fs::path> subdirs;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory() && fs::is_directory(entry.path() / "docs")) {
      subdirs.push_back(entry.path());
    }
  }
  std::sort(subdirs.begin(), subdirs.end());
  if (subdirs.empty()) {
    Fail(ErrorKind::kFormat, dir.string() + ": corpus contains no clusters");
  }
  std::vector<Cluster> clusters;
  for (const fs::path& sub : subdirs) clusters.push_back(Ingest(sub));
  return clusters;
}

}  // namespace dpp::text
