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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wg/groups.hpp"
#include "wg/kernels.hpp"

// Continuous-model verification on frequency grids: window evaluators with
// decay certificates, lattice-sum autocorrelations with certified truncation,
// unit-cell power partitions, the lattice-convention report for the classical
// example windows, and the non-separable indicator counterexample.

namespace wg::contin {

struct AnalyticWindow {
  std::string name;
  int dim = 1;

  // time side (univariate windows only): exact evaluator with compact support
  std::function<double(double)> time_eval;
  double support = 0.0;  // radius; 0 when no time evaluator

  // frequency side: closed form or quadrature of time_eval
  std::function<cd(const std::vector<double>&)> freq_eval;

  // |ghat(w)| <= decay_C (1+|w|)^{-decay_p}; freq_support > 0 marks an
  // exactly compactly supported transform (sup-norm radius)
  double decay_C = 0.0;
  double decay_p = 0.0;
  double freq_support = 0.0;

  bool has_time() const { return static_cast<bool>(time_eval); }
};

/// cos, tent or indicator_D (the unit-norm windows of the worked examples).
AnalyticWindow builtin_window(const std::string& name);

struct PartitionCheck {
  double max_deviation = 0.0;
  double constant = 0.0;  // grid mean of sum_n |g(x - n step)|^2
};

/// Deviation of sum_n |g(x - n*step)|^2 from its mean over a fine grid.
PartitionCheck partition_of_unity_check(const AnalyticWindow& w, double step,
                                        int grid_count);

struct AutocorrValues {
  std::vector<cd> values;   // one per requested frequency point
  double tail_bound = 0.0;  // certified truncation error
};

/// t_alpha(w) = density * sum_m ghat(w - m*mod_step) conj(ghat(w - m*mod_step
/// - alpha)) truncated to |w - m*mod_step|_inf <= radius, with a certified
/// tail bound from the window's decay (0 for compact transforms).
/// When a group is supplied, alpha must lie in 2 Lambda^perp.
AutocorrValues autocorr_continuous(const AnalyticWindow& w, double mod_step,
                                   double density,
                                   const std::vector<double>& alpha,
                                   const std::vector<std::vector<double>>& omega_grid,
                                   double radius,
                                   const groups::SeparableGroup* G = nullptr,
                                   std::optional<double> required_tail = {});

struct LatticeVerdict {
  double bound = 0.0;         // fitted tightness constant
  double max_deviation = 0.0; // over tested alpha and grid points
  bool tight = false;
};

struct LatticeConventionReport {
  LatticeVerdict half_freq;  // modulations at m/2, integer translations
  LatticeVerdict half_time;  // integer modulations, translations at n/2
};

/// Exact time-side tightness test of the two lattice conventions for a
/// compactly supported window; sums are finite so the certificate is exact.
LatticeConventionReport lattice_convention_report(const AnalyticWindow& w,
                                                  int grid_count = 2000,
                                                  double tol = 1e-10);

struct CounterexampleReport {
  double wilson_value_dev = 0.0;   // max |sum - 1/2| on the interior grid
  double gabor_t0_dev = 0.0;       // max |t_0 - 4|
  double gabor_other_dev = 0.0;    // max |t_alpha| over the other tested alpha
  std::size_t points = 0;
  bool pass = false;
};

/// The non-separable indicator window: its redundancy-4 Gabor system is
/// tight while the tensor Wilson autocorrelation at alpha = (1,1) sits at
/// 1/2 on the interior region, so the Wilson system is not an ONB.
CounterexampleReport counterexample_report(double tol = 1e-12);

/// 20x20 interior sample of the region where the counterexample identity
/// holds, margin away from every discontinuity line.
std::vector<std::vector<double>> omega_interior_grid(int nx = 20, int ny = 20,
                                                     double margin = 0.05);

}  // namespace wg::contin
