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

#include <optional>
#include <vector>

#include "wg/synth.hpp"

// Frame analysis on the finite model: Gram and frame-operator matrices with
// full Hermitian eigensolves, autocorrelation tables of shift-invariant
// families, the weak frame-operator identity, the Gabor/Wilson frame-operator
// ratio, and Zak-domain canonical tight windows.

namespace wg::frames {

using grid::GridSignal;
using grid::GridSpec;
using synth::SystemFamily;

inline constexpr double kFlagTolerance = 1e-9;  // relative, on eigenvalue spread

/// Gram[a*m+b] = <f_b, f_a> under the weighted inner product.
cvec gram(const SystemFamily& F);

/// S = sum_m f_m <., f_m> as a dense Hermitian matrix over Z_L^d.
cvec frame_operator(const SystemFamily& F);

std::vector<double> hermitian_eigenvalues(const cvec& matrix);

struct FrameReport {
  double lower = 0.0, upper = 0.0;        // spectrum of S on the span
  double riesz_lower = 0.0, riesz_upper = 0.0;  // nonzero Gram spectrum
  std::size_t members = 0, dimension = 0, rank = 0;
  bool bessel = false, frame = false, tight = false, parseval = false,
       riesz_basis = false, onb = false;
  double tolerance = kFlagTolerance;
};

FrameReport frame_bounds(const SystemFamily& F, double tolerance = kFlagTolerance);

/// Dual-lattice autocorrelation table: one grid function per residue alpha
/// with <alpha, t> = 0 mod r for every translation offset t.
struct AutocorrTable {
  GridSpec spec;
  std::vector<ivec> alphas;   // labels in [0,r)^d
  std::vector<cvec> values;   // per alpha, indexed by kappa in Z_L^d
  double density = 1.0;

  const cvec& at(const ivec& alpha) const;
};

AutocorrTable autocorr_table(const SystemFamily& F);

/// Single t_alpha(kappa) = density * sum_gen ghat(kappa) conj(ghat(kappa-P alpha)).
cvec autocorrelation(const SystemFamily& F, const ivec& alpha);

struct TightnessCheck {
  double max_deviation = 0.0;  // max |t_alpha - a delta_{alpha,0}|
  bool pass = false;
};

/// Dual-Gramian tightness criterion: the family is tight with bound a iff
/// the deviation vanishes.
TightnessCheck verify_tight_via_autocorr(const SystemFamily& F, double a,
                                         double tol = 1e-10);

/// | sum_m |<f,m>|^2  -  sum_alpha <M_{t_alpha} T_alpha fhat, fhat> |.
double wf_identity_check(const SystemFamily& F, const GridSignal& f);

/// Frobenius residual ||S_G - 2^k S_W|| / ||S_G||.  For k >= 2 a separable
/// factorization must be supplied (the window is assembled from it) unless
/// allow_nonseparable is set.
double frame_operator_ratio_check(
    const GridSignal& g, const groups::SeparableGroup& G,
    const std::optional<std::vector<GridSignal>>& factors = {},
    bool allow_nonseparable = false);

/// Zak-domain h with S_{G(h,G)} = 2^k Id; preserves window symmetry.
GridSignal canonical_tight(const GridSignal& g, const groups::SeparableGroup& G,
                           double eps = 1e-12);

/// Max |<M_beta g, g>| over nonzero residues beta dual to the family's
/// translation lattice; requires F tight.
double orthogonal_modulates_check(const GridSignal& g, const SystemFamily& F);

}  // namespace wg::frames
