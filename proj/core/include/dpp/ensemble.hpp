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

// Exact probability computations for L-ensembles and marginal kernels.
//
// An L-ensemble over n items assigns P(Y) = det(L_Y) / det(L + I), with
// det(L_{}) = 1. Its marginal kernel K = L (L + I)^{-1} gives inclusion
// probabilities P(A in Y) = det(K_A). All log-domain results use -infinity
// for zero-probability sets.

#ifndef DPP_ENSEMBLE_HPP_
#define DPP_ENSEMBLE_HPP_

#include "dpp/kernel.hpp"

namespace dpp {

// Eigenvalues in [-tol, 0) are clamped to zero with a warning; anything more
// negative is a kDomain error. tol = kPsdTolerance * max(1, max |lambda|).
inline constexpr double kPsdTolerance = 1e-9;

// L_ij = q_i q_j <phi_i, phi_j>.
SymmetricKernel BuildL(const QPhiDecomposition& decomposition);

// Inverse of BuildL for a kernel with positive diagonal: q_i = sqrt(L_ii),
// phi taken from the eigendecomposition of the similarity matrix.
QPhiDecomposition DecomposeL(const SymmetricKernel& l);

// Validated eigenvalues of a PSD kernel (ascending, negatives clamped).
Vector PsdEigenvalues(const SymmetricKernel& l);

// log det(L + I) = sum_k log(1 + lambda_k).
double LogNormalizer(const SymmetricKernel& l);

// log det(L_Y) via pivoted Cholesky; -infinity for singular L_Y.
double LogDetPrincipal(const SymmetricKernel& l, const Subset& y);

// log P_L(Y) = log det(L_Y) - log det(L + I).
double LogProb(const SymmetricKernel& l, const Subset& y);

// K = sum_k lambda_k / (1 + lambda_k) v_k v_k^T.
SymmetricKernel MarginalKernel(const SymmetricKernel& l);

// Diagonal of the marginal kernel only.
Vector InclusionProbabilities(const SymmetricKernel& l);

// L = K (I - K)^{-1}. kDomain error when an eigenvalue of K reaches
// 1 - 1e-9 (I - K not invertible) or K is not PSD.
SymmetricKernel KernelFromMarginal(const SymmetricKernel& k);

// P(A in Y) = det(K_A), clamped to [0, 1].
double MarginalProb(const SymmetricKernel& k, const Subset& a);

// P(Y = A u B | A in Y) = det(L_{AuB}) / det(L + I_{complement of A}).
// A and B must be disjoint. kDomain error when P(A in Y) = 0.
double ConditionalProb(const SymmetricKernel& l, const Subset& a,
                       const Subset& b);

// S_ij = L_ij / sqrt(L_ii L_jj). kDomain error on a nonpositive diagonal.
SymmetricKernel SimilarityOf(const SymmetricKernel& l);

}  // namespace dpp

#endif  // DPP_ENSEMBLE_HPP_
