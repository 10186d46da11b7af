// Copyright 2026 The wilsonlab Authors
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

#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "wg/groups.hpp"
#include "wg/synth.hpp"

// Symplectic machinery: membership and block criteria for Sp(d), the four
// block decompositions into Fourier / dilation / chirp primitives, phase
// factors of the intertwining relation, exact application of primitive
// chains on the grid, and symplectic Wilson systems.

namespace wg::sympl {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

struct PrimitiveOp {
  enum class Kind { Fourier, InverseFourier, Dilation, Chirp };
  Kind kind = Kind::Fourier;
  Mat param;  // C for Dilation (invertible), M for Chirp (symmetric)

  static PrimitiveOp fourier() { return {Kind::Fourier, Mat()}; }
  static PrimitiveOp inverse_fourier() { return {Kind::InverseFourier, Mat()}; }
  static PrimitiveOp dilation(Mat C) { return {Kind::Dilation, std::move(C)}; }
  static PrimitiveOp chirp(Mat M) { return {Kind::Chirp, std::move(M)}; }
};

/// Primitive chain in composition order: ops.back() is applied first.
struct OperatorPlan {
  int d = 1;
  std::vector<PrimitiveOp> ops;
};

/// The 2d x 2d matrix attached to one primitive.
Mat associated_matrix(const PrimitiveOp& op, int d);

struct SymplecticResiduals {
  double defining = 0.0;       // ||A^T J A - J||_max
  double block_ktq = 0.0;      // ||K^T Q - (K^T Q)^T||_max
  double block_ltr = 0.0;      // ||L^T R - (L^T R)^T||_max
  double block_identity = 0.0; // ||K^T R - Q^T L - I||_max
};

bool is_symplectic(const Mat& A, double tol = 1e-10,
                   SymplecticResiduals* residuals = nullptr);

/// Picks the first block in the order L, K, R, Q with condition number
/// <= 1e8 and emits the corresponding primitive chain.
OperatorPlan decompose(const Mat& A);

/// Ordered product of the associated matrices.
Mat recompose(const OperatorPlan& plan);

/// Drops identity primitives and cancels adjacent inverse Fourier pairs.
OperatorPlan simplify(const OperatorPlan& plan);

/// Unimodular phase in  mu(A) pi(nu) = phi(A,nu) pi(A nu) mu(A),
/// folded right-to-left over the chain.
cd phase_factor(const OperatorPlan& plan, const Vec& nu);

/// Applies the chain to a grid signal: Fourier = grid dft, chirp = pointwise
/// e^{i pi <j/r, M j/r>}, dilation = index permutation j -> C j mod L.
/// Compatibility is checked, never coerced.
grid::GridSignal apply_plan(const OperatorPlan& plan, const grid::GridSignal& f);

/// The shear family A = [[2a, c],[0, 1/2a]] with chain
/// D_{1/2a} o F o S_{-c/2a} o F^{-1} (simplified).
std::pair<Mat, OperatorPlan> ks_plan(double a, double c);

/// Wilson system transported by mu(A): members
/// pi(A lambda) pi(A lambda*_h) c_gamma sum_sigma phi(A, R~_sigma gamma)
/// (-1)^{<I(h)+gamma,sigma>} pi(A R~_sigma gamma) mu(A) g.
/// include_phase=false drops the phi factors (the omission variant).
synth::SystemFamily symplectic_wilson_family(const grid::GridSignal& g,
                                             const groups::SeparableGroup& G,
                                             const OperatorPlan& plan,
                                             bool include_phase = true);

}  // namespace wg::sympl
