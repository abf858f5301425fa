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

#include "cli.hpp"

#if __has_include(<CLI11.hpp>)
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "dpp/diagnostics.hpp"
#include "dpp/error.hpp"
#include "dpp/infer.hpp"
#include "dpp/kernel_io.hpp"
#include "dpp/model_io.hpp"
#include "dpp/mrf.hpp"
#include "dpp/sampler.hpp"
#include "dpp/text/cluster.hpp"
#include "dpp/text/features.hpp"
#include "dpp/text/pipeline.hpp"
#include "dpp/text/rouge.hpp"
#include "dpp/text/summary.hpp"

namespace dppsum {
namespace {

namespace fs = std::filesystem;
using dpp::ErrorKind;
using dpp::Fail;
using dpp::Require;

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return kExitInvalidArgument;
    case ErrorKind::kDomain:
      return kExitDomain;
    case ErrorKind::kNumerical:
      return kExitNumerical;
    case ErrorKind::kIo:
      return kExitIo;
    case ErrorKind::kFormat:
      return kExitFormat;
  }
  return kExitInternal;
}

// Writes to `path` when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path.empty() || path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path);
      if (!file_) Fail(ErrorKind::kIo, "cannot open " + path + " for writing");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

std::vector<dpp::text::Cluster> LoadClusters(const std::string& cluster,
                                             const std::string& corpus) {
  Require(cluster.empty() != corpus.empty(),
          "give exactly one of --cluster and --corpus");
  if (!cluster.empty()) return {dpp::text::Ingest(cluster)};
  return dpp::text::IngestCorpus(corpus);
}

std::size_t CheckedBudget(double budget) {
  Require(std::isfinite(budget) && budget > 0.0, "--budget must be positive");
  return static_cast<std::size_t>(std::floor(budget));
}

// Writes one summary per cluster: to --out for a single cluster, or to
// <out-dir>/<id>.txt for a corpus.
void EmitSummaries(const std::vector<dpp::text::Cluster>& clusters,
                   const std::vector<std::string>& texts, const std::string& out_path,
                   const std::string& out_dir, std::ostream& out) {
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    for (std::size_t c = 0; c < clusters.size(); ++c) {
      Sink sink((fs::path(out_dir) / (clusters[c].id + ".txt")).string(), out);
      sink.get() << texts[c];  // exact summary bytes; no trailing newline
    }
    return;
  }
  Sink sink(out_path, out);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    if (clusters.size() > 1) sink.get() << "# " << clusters[c].id << '\n';
    sink.get() << texts[c] << '\n';
  }
}

std::vector<double> ParseList(const std::string& text) {
  std::vector<double> values;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stod(item, &used));
      Require(used == item.size() || item.find_first_not_of(" \t", used) == std::string::npos,
              "bad number '" + item + "' in --params");
    } catch (const std::logic_error&) {
      Fail(ErrorKind::kInvalidArgument, "bad number '" + item + "' in --params");
    }
  }
  return values;
}

void PrintSelection(std::ostream& out, const std::string& label,
                    const dpp::SelectionResult& r) {
  out << label << ": " << r.chosen.ToString() << '\n'
      << "  order: ";
  for (std::size_t k = 0; k < r.order.size(); ++k) out << (k ? " " : "") << r.order[k];
  out << "\n  cost: " << r.total_cost << "\n  log_det: " << r.log_det
      << "\n  status: " << dpp::ToString(r.status) << '\n';
}

dpp::GreedyMode ParseMode(const std::string& mode) {
  if (mode == "literal") return dpp::GreedyMode::kLiteral;
  if (mode == "nonneg") return dpp::GreedyMode::kNonnegativeGain;
  Fail(ErrorKind::kInvalidArgument, "unknown --mode '" + mode + "'");
}

struct ClusterArgs {
  std::string cluster;
  std::string corpus;
  std::string out;
  std::string out_dir;
  double budget = static_cast<double>(dpp::text::kDefaultBudget);
};

void AddClusterArgs(CLI::App* cmd, ClusterArgs& a) {
  cmd->add_option("--cluster", a.cluster, "Cluster directory");
  cmd->add_option("--corpus", a.corpus, "Directory of cluster directories")
      ;
  cmd->add_option("--out", a.out, "Output file (default: stdout)");
  cmd->add_option("--out-dir", a.out_dir, "Write <id>.txt per cluster into this directory");
  cmd->add_option("--budget", a.budget, "Summary budget in bytes")->capture_default_str();
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  dpp::ScopedWarningHandler warnings(
      [&err](std::string_view message) { err << "warning: " << message << '\n'; });

  CLI::App app{"Determinantal point process toolkit and extractive summarizer", "dppsum"};
  app.set_config("--config", "", "Key-value configuration file; command-line flags override it");
  app.require_subcommand(1);
  out << std::setprecision(10);

  // train
  struct {
    std::string corpus, out;
    double sigma2 = 1.0, rho = 0.3, tol = 1e-6, budget = 665;
    int max_iter = 500;
    bool plain_gd = false;
  } train;
  auto* cmd_train = app.add_subcommand("train", "Fit bins, build oracle targets and train a model");
  cmd_train->add_option("--corpus", train.corpus, "Training corpus directory")
      ->required();
  cmd_train->add_option("--out", train.out, "Model file to write")->required();
  cmd_train->add_option("--sigma2", train.sigma2, "Gaussian prior variance ('inf' for none)")
      ->capture_default_str();
  cmd_train->add_option("--rho", train.rho, "Constant similarity feature")->capture_default_str();
  cmd_train->add_option("--tol", train.tol, "Gradient infinity-norm tolerance")->capture_default_str();
  cmd_train->add_option("--max-iter", train.max_iter, "Iteration limit")->capture_default_str();
  cmd_train->add_option("--budget", train.budget, "Oracle summary budget in bytes")
      ->capture_default_str();
  cmd_train->add_flag("--plain-gd", train.plain_gd, "Plain gradient ascent instead of L-BFGS");
  cmd_train->callback([&] {
    Require(train.sigma2 > 0.0, "--sigma2 must be positive");
    Require(train.rho >= 0.0, "--rho must be >= 0");
    Require(train.tol >= 0.0, "--tol must be >= 0");
    Require(train.max_iter >= 0, "--max-iter must be >= 0");
    const auto clusters = dpp::text::IngestCorpus(train.corpus);
    dpp::text::TrainOptions options;
    options.rho = train.rho;
    options.budget = CheckedBudget(train.budget);
    options.trainer.sigma2 = train.sigma2;
    options.trainer.tolerance = train.tol;
    options.trainer.max_iterations = train.max_iter;
    options.trainer.plain_gradient = train.plain_gd;
    const dpp::ModelFile model = dpp::text::TrainModel(clusters, options);
    dpp::WriteModel(fs::path(train.out), model);
    const auto& s = model.model.status;
    out << "converged: " << (s.converged ? "true" : "false") << "\niterations: " << s.iterations
        << "\ngradient_norm: " << s.gradient_norm << "\nobjective: " << s.objective
        << "\nmessage: " << s.message << '\n';
  });

  // features
  struct {
    std::string corpus, model;
    bool fit_bins = false;
    double rho = 0.3;
  } feat;
  auto* cmd_feat = app.add_subcommand("features", "Fit feature bins or print feature vectors");
  cmd_feat->add_option("--corpus", feat.corpus, "Corpus directory")
      ->required();
  cmd_feat->add_option("--model", feat.model, "Model file")->required();
  cmd_feat->add_flag("--fit-bins", feat.fit_bins,
                     "Fit idf and global bins on the corpus and store them in the model file");
  cmd_feat->add_option("--rho", feat.rho, "Constant similarity feature (with --fit-bins)")
      ->capture_default_str();
  cmd_feat->callback([&] {
    const auto clusters = dpp::text::IngestCorpus(feat.corpus);
    if (feat.fit_bins) {
      dpp::ModelFile model;
      if (fs::exists(feat.model)) model = dpp::ReadModel(fs::path(feat.model));
      model.features = dpp::text::FitFeatureConfig(clusters, feat.rho);
      model.model.rho = feat.rho;
      model.model.feature_names = dpp::text::QualityFeatureNames();
      dpp::WriteModel(fs::path(feat.model), model);
      out << "fitted bins on " << clusters.size() << " clusters, "
          << model.features.idf.documents << " documents\n";
      return;
    }
    const dpp::ModelFile model = dpp::ReadModel(fs::path(feat.model));
    out << std::setprecision(17);
    for (const auto& cluster : clusters) {
      const dpp::Matrix f = dpp::text::QualityFeatures(cluster, model.features);
      for (dpp::Index i = 0; i < f.rows(); ++i) {
        out << cluster.id << '\t' << i;
        for (dpp::Index k = 0; k < f.cols(); ++k) out << '\t' << f(i, k);
        out << '\n';
      }
    }
  });

  // summarize
  ClusterArgs sum_args;
  struct {
    std::string model, method = "greedy", mode = "literal";
    std::uint64_t seed = 1;
    std::size_t samples = 100000;
    std::optional<double> window_lo, window_hi;
  } sum;
  auto* cmd_sum = app.add_subcommand("summarize", "Summarize clusters with a trained model");
  AddClusterArgs(cmd_sum, sum_args);
  cmd_sum->add_option("--model", sum.model, "Model file")->required();
  cmd_sum->add_option("--method", sum.method, "greedy or sampled")
      ->check(CLI::IsMember({"greedy", "sampled"}))->capture_default_str();
  cmd_sum->add_option("--mode", sum.mode, "Greedy mode: literal or nonneg")
      ->check(CLI::IsMember({"literal", "nonneg"}))->capture_default_str();
  cmd_sum->add_option("--seed", sum.seed, "Sampler seed")->capture_default_str();
  cmd_sum->add_option("--samples", sum.samples, "Number of samples for sampled MAP")
      ->capture_default_str();
  cmd_sum->add_option("--window-lo", sum.window_lo, "Lowest accepted sample cost (default budget-5)");
  cmd_sum->add_option("--window-hi", sum.window_hi, "Highest accepted sample cost (default budget+15)");
  cmd_sum->callback([&] {
    const auto clusters = LoadClusters(sum_args.cluster, sum_args.corpus);
    const dpp::ModelFile model = dpp::ReadModel(fs::path(sum.model));
    dpp::text::SummarizeOptions options;
    options.budget = CheckedBudget(sum_args.budget);
    options.method = sum.method == "sampled" ? dpp::text::InferenceMethod::kSampled
                                             : dpp::text::InferenceMethod::kGreedy;
    options.mode = ParseMode(sum.mode);
    options.seed = sum.seed;
    options.samples = sum.samples;
    options.window_lo = sum.window_lo;
    options.window_hi = sum.window_hi;
    std::vector<std::string> texts;
    for (const auto& cluster : clusters) {
      const auto result = dpp::text::Summarize(cluster, model, options);
      if (result.selection.status == dpp::SelectionStatus::kNoFeasibleSample) {
        dpp::Warn(cluster.id + ": no sample fell inside the cost window");
      }
      texts.push_back(result.text);
    }
    EmitSummaries(clusters, texts, sum_args.out, sum_args.out_dir, out);
  });

  // baseline-mmr
  ClusterArgs mmr_args;
  std::string mmr_model;
  double mmr_lambda = 0.5;
  auto* cmd_bmmr = app.add_subcommand("baseline-mmr", "Maximal marginal relevance baseline");
  AddClusterArgs(cmd_bmmr, mmr_args);
  cmd_bmmr->add_option("--model", mmr_model, "Model file supplying qualities")
      ->required();
  cmd_bmmr->add_option("--lambda", mmr_lambda, "Relevance/redundancy tradeoff in [0, 1]")
      ->capture_default_str();
  cmd_bmmr->callback([&] {
    Require(mmr_lambda >= 0.0 && mmr_lambda <= 1.0, "--lambda must be in [0, 1]");
    const auto clusters = LoadClusters(mmr_args.cluster, mmr_args.corpus);
    const dpp::ModelFile model = dpp::ReadModel(fs::path(mmr_model));
    std::vector<std::string> texts;
    for (const auto& cluster : clusters) {
      texts.push_back(dpp::text::SummarizeMmr(cluster, model, mmr_lambda,
                                              CheckedBudget(mmr_args.budget)).text);
    }
    EmitSummaries(clusters, texts, mmr_args.out, mmr_args.out_dir, out);
  });

  // baseline-begin
  ClusterArgs begin_args;
  auto* cmd_begin = app.add_subcommand("baseline-begin", "First budget bytes of the cluster text");
  AddClusterArgs(cmd_begin, begin_args);
  cmd_begin->callback([&] {
    const auto clusters = LoadClusters(begin_args.cluster, begin_args.corpus);
    std::vector<std::string> texts;
    for (const auto& cluster : clusters) {
      texts.push_back(dpp::text::BeginBaseline(cluster, CheckedBudget(begin_args.budget)));
    }
    EmitSummaries(clusters, texts, begin_args.out, begin_args.out_dir, out);
  });

  // eval
  struct {
    std::string summaries, corpus, out;
  } eval;
  auto* cmd_eval = app.add_subcommand(
      "eval", "Score <summaries>/<id>.txt against each cluster's references");
  cmd_eval->add_option("--summaries", eval.summaries, "Directory of <cluster id>.txt summaries")
      ->required();
  cmd_eval->add_option("--corpus", eval.corpus, "Corpus with references")
      ->required();
  cmd_eval->add_option("--out", eval.out, "Output file (default: stdout)");
  cmd_eval->callback([&] {
    const auto clusters = dpp::text::IngestCorpus(eval.corpus);
    Sink sink(eval.out, out);
    std::ostream& os = sink.get();
    os << "cluster\tr1p\tr1r\tr1f\tr2p\tr2r\tr2f\n" << std::fixed << std::setprecision(6);
    std::array<double, 6> mean{};
    for (const auto& cluster : clusters) {
      Require(!cluster.references.empty(), cluster.id + ": no references");
      std::string text = dpp::text::ReadFile(fs::path(eval.summaries) / (cluster.id + ".txt"));
      const auto r1 = dpp::text::ScoreNgrams(text, cluster.references, 1);
      const auto r2 = dpp::text::ScoreNgrams(text, cluster.references, 2);
      const std::array<double, 6> row{r1.precision, r1.recall, r1.f_measure,
                                      r2.precision, r2.recall, r2.f_measure};
      os << cluster.id;
      for (std::size_t k = 0; k < row.size(); ++k) {
        os << '\t' << row[k];
        mean[k] += row[k] / static_cast<double>(clusters.size());
      }
      os << '\n';
    }
    os << "mean";
    for (double v : mean) os << '\t' << v;
    os << '\n';
  });

  // score
  struct {
    std::string summary, refs, metric = "rouge1f";
  } score;
  auto* cmd_score = app.add_subcommand("score", "Score one summary against a reference directory");
  cmd_score->add_option("--summary", score.summary, "Summary text file")
      ->required();
  cmd_score->add_option("--refs", score.refs, "Directory of reference files")
      ->required();
  cmd_score->add_option("--metric", score.metric, "rouge1f or rouge2f")
      ->check(CLI::IsMember({"rouge1f", "rouge2f"}))->capture_default_str();
  cmd_score->callback([&] {
    const auto refs = dpp::text::ReadReferences(score.refs);
    const auto text = dpp::text::ReadFile(score.summary);
    const auto s = dpp::text::ScoreNgrams(text, refs, score.metric == "rouge1f" ? 1 : 2);
    out << std::fixed << std::setprecision(6) << s.f_measure << '\n';
  });

  // oracle
  std::string oracle_cluster;
  double oracle_budget = 665;
  bool oracle_text = false;
  auto* cmd_oracle = app.add_subcommand("oracle", "Greedy oracle summary against the references");
  cmd_oracle->add_option("--cluster", oracle_cluster, "Cluster directory")
      ->required();
  cmd_oracle->add_option("--budget", oracle_budget, "Budget in bytes")->capture_default_str();
  cmd_oracle->add_flag("--text", oracle_text, "Also print the assembled summary");
  cmd_oracle->callback([&] {
    const auto cluster = dpp::text::Ingest(oracle_cluster);
    const auto budget = CheckedBudget(oracle_budget);
    const auto result = dpp::text::OracleSummary(cluster, budget);
    for (std::size_t k = 0; k < result.order.size(); ++k) out << (k ? " " : "") << result.order[k];
    out << '\n';
    if (oracle_text) out << dpp::text::AssembleSummary(cluster, result.chosen, budget) << '\n';
  });

  // sample
  struct {
    std::string kernel;
    std::uint64_t seed = 1;
    std::size_t count = 1;
  } sample;
  auto* cmd_sample = app.add_subcommand("sample", "Draw exact samples from an L-ensemble");
  cmd_sample->add_option("--kernel", sample.kernel, "Kernel file (n, then n rows)")
      ->required();
  cmd_sample->add_option("--seed", sample.seed, "Random seed")->capture_default_str();
  cmd_sample->add_option("--count", sample.count, "Number of samples")->capture_default_str();
  cmd_sample->callback([&] {
    dpp::Sampler sampler(dpp::ReadKernel(fs::path(sample.kernel)), sample.seed);
    for (std::size_t s = 0; s < sample.count; ++s) out << sampler.Sample().ToString() << '\n';
  });

  // map
  struct {
    std::string kernel, costs, mode = "literal";
    double budget = 0;
    bool oracle = false;
  } map;
  auto* cmd_map = app.add_subcommand("map", "Budgeted greedy MAP on a kernel file");
  cmd_map->add_option("--kernel", map.kernel, "Kernel file")->required();
  cmd_map->add_option("--costs", map.costs, "Cost file, one value per line")
      ->required();
  cmd_map->add_option("--budget", map.budget, "Cost budget")->required();
  cmd_map->add_option("--mode", map.mode, "literal or nonneg")
      ->check(CLI::IsMember({"literal", "nonneg"}))->capture_default_str();
  cmd_map->add_flag("--oracle", map.oracle, "Also solve exactly by enumeration (n <= 20)");
  cmd_map->callback([&] {
    const auto l = dpp::ReadKernel(fs::path(map.kernel));
    const dpp::BudgetSpec spec{dpp::ReadVector(fs::path(map.costs)), map.budget};
    const auto greedy = dpp::GreedyMap(l, spec, ParseMode(map.mode));
    PrintSelection(out, "greedy", greedy);
    if (map.oracle) {
      const auto exact = dpp::ExactMapBruteForce(l, spec);
      PrintSelection(out, "exact", exact);
      out << "probability_ratio: " << std::exp(greedy.log_det - exact.log_det) << '\n';
    }
  });

  // mmr
  struct {
    std::string similarity, quality, costs;
    double lambda = 0.5, budget = 0;
  } mmr;
  auto* cmd_mmr = app.add_subcommand("mmr", "Maximal marginal relevance on explicit inputs");
  cmd_mmr->add_option("--similarity", mmr.similarity, "Unit-diagonal similarity kernel file")
      ->required();
  cmd_mmr->add_option("--quality", mmr.quality, "Quality file, one value per line")
      ->required();
  cmd_mmr->add_option("--costs", mmr.costs, "Cost file")->required();
  cmd_mmr->add_option("--budget", mmr.budget, "Cost budget")->required();
  cmd_mmr->add_option("--lambda", mmr.lambda, "Tradeoff in [0, 1]")->capture_default_str();
  cmd_mmr->callback([&] {
    const auto q = dpp::ReadVector(fs::path(mmr.quality));
    const dpp::Vector quality = dpp::Vector::Map(q.data(), static_cast<dpp::Index>(q.size()));
    const auto result = dpp::MmrSelect(quality, dpp::ReadKernel(fs::path(mmr.similarity)),
                                       mmr.lambda,
                                       dpp::BudgetSpec{dpp::ReadVector(fs::path(mmr.costs)), mmr.budget});
    PrintSelection(out, "mmr", result);
  });

  // diag
  auto* cmd_diag = app.add_subcommand("diag", "Three-item MRF and DPP diagnostics");
  cmd_diag->require_subcommand(1);
  struct {
    std::string kind = "dpp", out;
    double v111 = 0.25, tolerance = 1e-3;
    int res = 200;
  } slice;
  auto* cmd_slice = cmd_diag->add_subcommand("slice", "Realizable (110, 101, 011) at fixed 111");
  cmd_slice->add_option("--kind", slice.kind, "mrf or dpp")
      ->check(CLI::IsMember({"mrf", "dpp"}))->capture_default_str();
  cmd_slice->add_option("--v111", slice.v111, "Target 111 entry in (0, 1]")->capture_default_str();
  cmd_slice->add_option("--res", slice.res, "Grid points per parameter")->capture_default_str();
  cmd_slice->add_option("--tolerance", slice.tolerance, "Accepted deviation of the 111 entry")
      ->capture_default_str();
  cmd_slice->add_option("--out", slice.out, "Output table (default: stdout)");
  cmd_slice->callback([&] {
    const auto points = dpp::mrf::ManifoldSlice(
        dpp::mrf::ParseSliceKind(slice.kind), {slice.v111, slice.res, slice.tolerance});
    Sink sink(slice.out, out);
    sink.get() << std::setprecision(10);
    for (const auto& p : points) {
      sink.get() << p.e110 << '\t' << p.e101 << '\t' << p.e011 << '\n';
    }
  });
  struct {
    std::string kind = "dpp", params;
  } table;
  auto* cmd_table = cmd_diag->add_subcommand("table", "Ternary factor table");
  cmd_table->add_option("--kind", table.kind, "mrf or dpp")
      ->check(CLI::IsMember({"mrf", "dpp"}))->capture_default_str();
  cmd_table->add_option(
      "--params", table.params,
      "Comma list. mrf: w12,w13,w23 or w1,w2,w3,w12,w13,w23. "
      "dpp: s12,s13,s23 or q1,q2,q3,s12,s13,s23")
      ->required();
  cmd_table->callback([&] {
    const auto p = ParseList(table.params);
    Require(p.size() == 3 || p.size() == 6, "--params needs 3 or 6 values");
    const std::size_t o = p.size() == 6 ? 3 : 0;
    dpp::mrf::TernaryFactorTable t;
    if (table.kind == "mrf") {
      dpp::mrf::MrfParams mp;
      if (o) mp.w1 = p[0], mp.w2 = p[1], mp.w3 = p[2];
      mp.w12 = p[o], mp.w13 = p[o + 1], mp.w23 = p[o + 2];
      t = dpp::mrf::MrfFactorTable(mp);
    } else {
      dpp::mrf::DppParams3 dp;
      if (o) dp.q1 = p[0], dp.q2 = p[1], dp.q3 = p[2];
      dp.s12 = p[o], dp.s13 = p[o + 1], dp.s23 = p[o + 2];
      t = dpp::mrf::DppFactorTable(dp);
    }
    for (const char* config : {"000", "001", "010", "100", "110", "101", "011", "111"}) {
      out << config << '\t' << t.At(config) << '\n';
    }
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const dpp::Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace dppsum
