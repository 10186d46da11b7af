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

#include <cstdint>
#include <functional>
#include <vector>

#include "wg/kernels.hpp"
#include "wg/multiindex.hpp"

// The finite model: complex-valued functions on Z_L^d with L = P*r.  Grid
// point j represents the position x = j/r, so one period cell has r samples
// and the torus spans P cells per axis.  The weighted l2 norm carries the
// quadrature factor 1/r^d so that discrete norms track continuous L2 norms.

namespace wg::grid {

struct GridSpec {
  int d = 1;
  int P = 2;  // unit cells per axis, even
  int r = 2;  // samples per unit, even
  int L = 4;  // P*r

  std::size_t total() const { return static_cast<std::size_t>(ipow(L, d)); }
  std::size_t cells() const { return static_cast<std::size_t>(ipow(P, d)); }
  std::size_t residues() const { return static_cast<std::size_t>(ipow(r, d)); }
  double weight() const;  // 1/r^d
  bool operator==(const GridSpec&) const = default;
};

/// Validates (d, P, r); throws BadParameters / TooLarge.
GridSpec make_grid(int d, int P, int r, std::int64_t max_total = (1 << 24));

struct GridSignal {
  GridSpec spec;
  cvec values;  // row-major over Z_L^d

  /// Weighted inner product <f, h> = (1/r^d) sum f conj(h).
  static cd dot(const GridSignal& f, const GridSignal& h);
  double norm() const;
  double max_abs() const;
  GridSignal& operator+=(const GridSignal& o);
  GridSignal& operator*=(cd s);
};

GridSignal zeros(const GridSpec& spec);

/// Distance max_j |f(j) - g(j)|.
double max_dist(const GridSignal& f, const GridSignal& g);

/// Zak coefficients Zf(j,k) = sum_{m in Z_P^d} f(j + m r) e^{-2pi i <m,k>/P},
/// stored row-major as values[flat(j) * P^d + flat(k)].
struct ZakArray {
  GridSpec spec;
  cvec values;
};

/// (M_gamma T_lambda f)(j) = e^{2pi i <gamma, j>/r} f(j - lambda*r).
/// lambda*r and gamma*P must be integral (OffGridShift otherwise).
GridSignal tf_shift(const GridSignal& f, const std::vector<double>& lambda,
                    const std::vector<double>& gamma);

/// Translation by an integer index shift s (grid steps).
GridSignal translate_idx(const GridSignal& f, const ivec& s);

/// Modulation by an integer frequency vector (label mod r).
GridSignal modulate(const GridSignal& f, const ivec& gamma);

/// Forward: fhat(kappa) = (1/r^d) sum_j f(j) e^{-2pi i <kappa,j>/L};
/// frequencies are kappa/P cycles per unit.  Inverse is the exact inverse.
GridSignal dft(const GridSignal& f, bool inverse = false);

ZakArray zak(const GridSignal& f);
GridSignal inverse_zak(const ZakArray& z);

/// g(j) = sum_m w(j/r + m P); the tail beyond `support` vanishes for
/// compactly supported w.  Throws PeriodTooSmall when mass beyond one period
/// exceeds tail_tol.
GridSignal periodize_sample(const std::function<double(const std::vector<double>&)>& w,
                            double support, const GridSpec& spec,
                            double tail_tol = 1e-14);

/// Real, even (g(-j) = g(j)), unit-norm window; deterministic in seed.
GridSignal random_symmetric_window(const GridSpec& spec, std::uint64_t seed);

/// Unit-norm window with a random real transform (g itself is complex
/// hermitian).  Real-even windows carry structural Zak zeros at the
/// quarter points in d >= 2, which this generator avoids.
GridSignal random_real_spectrum_window(const GridSpec& spec, std::uint64_t seed);

/// Tensor product of per-axis signals (all on d=1 grids with equal P, r).
GridSignal tensor(const std::vector<GridSignal>& factors);

}  // namespace wg::grid
