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

#include "dpp/model_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "dpp/error.hpp"

namespace dpp {
namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "dppsum-model";
constexpr int kFormatVersion = 1;

json EncodeReal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return nullptr;
  return x;
}

double DecodeReal(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  Fail(ErrorKind::kFormat, "model file: expected a number, got " + j.dump());
}

json EncodeFeatures(const text::FeatureConfig& f) {
  json df = json::object();
  for (const auto& [term, count] : f.idf.df) df[term] = count;
  return {
      {"rho", f.rho},
      {"length_edges", f.length_edges},
      {"similarity_edges", f.similarity_edges},
      {"lexrank_edges", f.lexrank_edges},
      {"local_similarity_bins", f.local_similarity_bins},
      {"local_lexrank_bins", f.local_lexrank_bins},
      {"idf", {{"documents", f.idf.documents}, {"df", df}}},
  };
}

text::FeatureConfig DecodeFeatures(const json& j) {
  text::FeatureConfig f;
  f.rho = j.at("rho").get<double>();
  f.length_edges = j.at("length_edges").get<std::vector<double>>();
  f.similarity_edges = j.at("similarity_edges").get<std::vector<double>>();
  f.lexrank_edges = j.at("lexrank_edges").get<std::vector<double>>();
  f.local_similarity_bins = j.at("local_similarity_bins").get<int>();
  f.local_lexrank_bins = j.at("local_lexrank_bins").get<int>();
  f.idf.documents = j.at("idf").at("documents").get<int>();
  for (const auto& [term, count] : j.at("idf").at("df").items()) {
    f.idf.df[term] = count.get<int>();
  }
  return f;
}

}  // namespace

void WriteModel(std::ostream& out, const ModelFile& file) {
  const ConditionalModel& m = file.model;
  json doc = {
      {"format", kFormatTag},
      {"version", kFormatVersion},
      {"m", m.theta.size()},
      {"theta", std::vector<double>(m.theta.data(), m.theta.data() + m.theta.size())},
      {"sigma2", EncodeReal(m.sigma2)},
      {"rho", m.rho},
      {"feature_names", m.feature_names},
      {"features", EncodeFeatures(file.features)},
      {"trainer",
       {{"converged", m.status.converged},
        {"iterations", m.status.iterations},
        {"gradient_norm", EncodeReal(m.status.gradient_norm)},
        {"objective", EncodeReal(m.status.objective)},
        {"message", m.status.message}}},
  };
  out << doc.dump(2) << '\n';
  if (!out) Fail(ErrorKind::kIo, "failed writing model file");
}

void WriteModel(const std::filesystem::path& path, const ModelFile& file) {
  std::ofstream out(path);
  if (!out) Fail(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  WriteModel(out, file);
}

ModelFile ReadModel(std::istream& in) {
  try {
    const json doc = json::parse(in);
    if (doc.value("format", std::string()) != kFormatTag) {
      Fail(ErrorKind::kFormat, "model file: not a dppsum model");
    }
    if (doc.at("version").get<int>() != kFormatVersion) {
      Fail(ErrorKind::kFormat, "model file: unsupported version");
    }
    ModelFile file;
    ConditionalModel& m = file.model;
    const auto theta = doc.at("theta").get<std::vector<double>>();
    if (static_cast<std::size_t>(doc.at("m").get<long>()) != theta.size()) {
      Fail(ErrorKind::kFormat, "model file: m does not match theta length");
    }
    m.theta = Eigen::Map<const Vector>(theta.data(), static_cast<Index>(theta.size()));
    m.sigma2 = DecodeReal(doc.at("sigma2"));
    m.rho = doc.at("rho").get<double>();
    m.feature_names = doc.at("feature_names").get<std::vector<std::string>>();
    const json& t = doc.at("trainer");
    m.status.converged = t.at("converged").get<bool>();
    m.status.iterations = t.at("iterations").get<int>();
    m.status.gradient_norm = DecodeReal(t.at("gradient_norm"));
    m.status.objective = DecodeReal(t.at("objective"));
    m.status.message = t.value("message", std::string());
    file.features = DecodeFeatures(doc.at("features"));
    return file;
  } catch (const json::exception& e) {
    Fail(ErrorKind::kFormat, std::string("model file: ") + e.what());
  }
}

ModelFile ReadModel(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) Fail(ErrorKind::kIo, "cannot open " + path.string());
  try {
    return ReadModel(in);
  } catch (const Error& e) {
    Fail(e.kind(), path.string() + ": " + e.what());
  }
}

}  // namespace dpp
