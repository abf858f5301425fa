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

#include "dpp/mrf.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <tuple>

#include "dpp/error.hpp"
#include "dpp/linalg.hpp"

namespace dpp::mrf {
namespace {

constexpr double kPsdSlack = 1e-9;
constexpr double kTriangleSlack = 1e-12;

Matrix Similarity3(double s12, double s13, double s23) {
  Matrix s(3, 3);
  s << 1.0, s12, s13,
       s12, 1.0, s23,
       s13, s23, 1.0;
  return s;
}

TernaryFactorTable Table(double e110, double e101, double e011, double e111) {
  TernaryFactorTable t;
  t.values.fill(1.0);
  t.values[0b110] = e110;
  t.values[0b101] = e101;
  t.values[0b011] = e011;
  t.values[0b111] = e111;
  return t;
}

double Gap(double s) { return std::sqrt(std::max(0.0, 1.0 - s * s)); }

std::vector<double> Linspace(double lo, double hi, int count) {
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    grid[static_cast<std::size_t>(k)] =
        k == count - 1 ? hi : lo + (hi - lo) * k / (count - 1);
  }
  return grid;
}

}  // namespace

double TernaryFactorTable::At(std::string_view config) const {
  Require(config.size() == 3 &&
              std::all_of(config.begin(), config.end(),
                          [](char c) { return c == '0' || c == '1'; }),
          "TernaryFactorTable: configuration must be three binary digits");
  const int bits = (config[0] - '0') << 2 | (config[1] - '0') << 1 | (config[2] - '0');
  return (*this)[bits];
}

TernaryFactorTable MrfFactorTable(const MrfParams& p) {
  for (double w : {p.w12, p.w13, p.w23}) {
    Require(w <= 0.0, "MrfFactorTable: pairwise weights must be <= 0 (got " +
                          std::to_string(w) + ")");
  }
  return Table(std::exp(p.w12), std::exp(p.w13), std::exp(p.w23),
               std::exp(p.w12 + p.w13 + p.w23));
}

double MinSimilarityEigenvalue(double s12, double s13, double s23) {
  return JacobiEigen(Similarity3(s12, s13, s23)).values(0);
}

TernaryFactorTable DppFactorTable(const DppParams3& p) {
  for (double q : {p.q1, p.q2, p.q3}) {
    Require(q > 0.0, "DppFactorTable: qualities must be positive");
  }
  for (double s : {p.s12, p.s13, p.s23}) {
    Require(s >= -1.0 && s <= 1.0, "DppFactorTable: similarities must be in [-1, 1]");
  }
  const double smallest = MinSimilarityEigenvalue(p.s12, p.s13, p.s23);
  if (smallest < -kPsdSlack) {
    std::ostringstream os;
    os << "DppFactorTable: similarity matrix is not PSD (eigenvalue "
       << smallest << ")";
    Fail(ErrorKind::kDomain, os.str());
  }
  const double a = p.s12, b = p.s13, c = p.s23;
  return Table(1.0 - a * a, 1.0 - b * b, 1.0 - c * c,
               1.0 + 2.0 * a * b * c - a * a - b * b - c * c);
}

bool TriangleFeasible(double s12, double s13, double s23) {
  for (double s : {s12, s13, s23}) {
    Require(s >= -1.0 && s <= 1.0, "TriangleFeasible: values must be in [-1, 1]");
  }
  const double d12 = Gap(s12), d13 = Gap(s13), d23 = Gap(s23);
  return d12 + d23 >= d13 - kTriangleSlack &&
         d12 + d13 >= d23 - kTriangleSlack &&
         d13 + d23 >= d12 - kTriangleSlack;
}

bool PointTriangleFeasible(const SlicePoint& point) {
  const auto implied = [](double psi) {
    return std::sqrt(std::clamp(1.0 - psi, 0.0, 1.0));
  };
  return TriangleFeasible(implied(point.e110), implied(point.e101),
                          implied(point.e011));
}

std::vector<SlicePoint> ManifoldSlice(SliceKind kind, const SliceOptions& options) {
  Require(options.v111 > 0.0 && options.v111 <= 1.0,
          "ManifoldSlice: v111 must be in (0, 1]");
  Require(options.resolution >= 2, "ManifoldSlice: resolution must be >= 2");
  Require(options.tolerance >= 0.0, "ManifoldSlice: tolerance must be >= 0");

  std::vector<SlicePoint> points;
  std::set<std::tuple<double, double, double>> seen;
  const auto emit = [&](double e110, double e101, double e011, double e111) {
    if (std::abs(e111 - options.v111) > options.tolerance) return;
    if (seen.emplace(e110, e101, e011).second) {
      points.push_back({e110, e101, e011});
    }
  };

  if (kind == SliceKind::kMrf) {
    const double log_v = std::log(options.v111);
    const auto grid = Linspace(log_v, 0.0, options.resolution);
    for (double w12 : grid) {
      for (double w13 : grid) {
        const double w23 = log_v - w12 - w13;
        if (w23 > 0.0) continue;
        emit(std::exp(w12), std::exp(w13), std::exp(w23),
             std::exp(w12 + w13 + w23));
      }
    }
    return points;
  }

  const auto grid = Linspace(-1.0, 1.0, options.resolution);
  for (double a : grid) {
    for (double b : grid) {
      const double disc = (1.0 - a * a) * (1.0 - b * b) - options.v111;
      if (disc < 0.0) continue;
      const double root = std::sqrt(disc);
      for (double c : {a * b - root, a * b + root}) {
        if (std::abs(c) > 1.0) continue;
        if (MinSimilarityEigenvalue(a, b, c) < -kPsdSlack) continue;
        emit(1.0 - a * a, 1.0 - b * b, 1.0 - c * c,
             1.0 + 2.0 * a * b * c - a * a - b * b - c * c);
        if (root == 0.0) break;
      }
    }
  }
  return points;
}

SliceKind ParseSliceKind(std::string_view name) {
  if (name == "mrf") return SliceKind::kMrf;
  if (name == "dpp") return SliceKind::kDpp;
  Fail(ErrorKind::kInvalidArgument,
       "unknown slice kind '" + std::string(name) + "' (expected mrf or dpp)");
}

}  // namespace dpp::mrf
