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

// Three-item comparison between pairwise repulsive MRFs and DPPs.
//
// Both models are written as node potentials times one ternary factor
// psi(y1 y2 y3). For the MRF psi = exp(sum_{i<j} w_ij y_i y_j) with w_ij <= 0;
// for the DPP psi = det(S_Y). The last four entries (110, 101, 011, 111)
// carry all the interaction structure.

#ifndef DPP_MRF_HPP_
#define DPP_MRF_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

namespace dpp::mrf {

struct TernaryFactorTable {
  // Indexed by the bit pattern y1 y2 y3, so values[0b110] is psi(110).
  std::array<double, 8> values{};

  double operator[](int bits) const { return values[static_cast<std::size_t>(bits)]; }
  // `config` is a three-character string such as "110".
  double At(std::string_view config) const;
};

struct MrfParams {
  double w1 = 0, w2 = 0, w3 = 0;
  double w12 = 0, w13 = 0, w23 = 0;
};

struct DppParams3 {
  double q1 = 1, q2 = 1, q3 = 1;
  double s12 = 0, s13 = 0, s23 = 0;
};

// kInvalidArgument on a positive pairwise weight.
TernaryFactorTable MrfFactorTable(const MrfParams& params);

// kDomain error when the unit-diagonal S is not PSD (message carries the
// offending eigenvalue); kInvalidArgument on nonpositive q.
TernaryFactorTable DppFactorTable(const DppParams3& params);

// sqrt(1 - S_ij^2) + sqrt(1 - S_jk^2) >= sqrt(1 - S_ik^2) in all three
// rotations. Arguments must lie in [-1, 1].
bool TriangleFeasible(double s12, double s13, double s23);

// Smallest eigenvalue of the unit-diagonal 3x3 similarity matrix.
double MinSimilarityEigenvalue(double s12, double s13, double s23);

enum class SliceKind { kMrf, kDpp };

struct SliceOptions {
  double v111 = 0.25;      // target psi(111), in (0, 1]
  int resolution = 200;    // grid points per free parameter
  double tolerance = 1e-3; // accepted |psi(111) - v111|
};

struct SlicePoint {
  double e110 = 0, e101 = 0, e011 = 0;
};

// Realizable (psi(110), psi(101), psi(011)) with psi(111) = v111.
//
// MRF: w12, w13 on a uniform grid over [log v111, 0]; w23 closes the sum
// w12 + w13 + w23 = log v111 and must be <= 0.
// DPP: S12, S13 on a uniform grid over [-1, 1]; S23 solves
// det(S) = v111 exactly (both roots), kept when |S23| <= 1 and S is PSD.
// Points come out in row-major grid order with exact duplicates removed.
std::vector<SlicePoint> ManifoldSlice(SliceKind kind, const SliceOptions& options);

// Nonnegative similarities implied by a DPP-style point: S_ij = sqrt(1 - psi).
bool PointTriangleFeasible(const SlicePoint& point);

SliceKind ParseSliceKind(std::string_view name);

}  // namespace dpp::mrf

#endif  // DPP_MRF_HPP_
