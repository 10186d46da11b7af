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

#include "wg/contin.hpp"

#include <cmath>

#include "wg/errors.hpp"
#include "wg/quad.hpp"

namespace wg::contin {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;

bool in_D(double x, double y) {
  return x >= 0.0 && x <= 4.0 && y >= 0.0 && y <= 2.0 && y >= x - 2.0 && y <= x;
}

/// Real transform of a real even compactly supported window.
double quad_transform(const std::function<double(double)>& g, double support,
                      double omega) {
  // 2 * int_0^s g(x) cos(2 pi w x) dx; split per oscillation for stability
  const auto f = [&](double x) { return g(x) * std::cos(kTau * omega * x); };
  const int panels = std::max(2, static_cast<int>(std::ceil(std::abs(omega) * support)));
  double acc = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = support * i / panels, b = support * (i + 1) / panels;
    acc += quad::integrate(f, a, b, 1e-13 / panels);
  }
  return 2.0 * acc;
}

}  // namespace

AnalyticWindow builtin_window(const std::string& name) {
  AnalyticWindow w;
  w.name = name;
  if (name == "cos") {
    w.dim = 1;
    w.support = 1.0;
    w.time_eval = [](double x) {
      return std::abs(x) <= 1.0 ? std::cos(0.5 * M_PI * x) : 0.0;
    };
    w.decay_C = 2.0;
    w.decay_p = 2.0;
  } else if (name == "tent") {
    w.dim = 1;
    w.support = 1.0;
    w.time_eval = [](double x) {
      return std::abs(x) <= 1.0 ? std::sqrt(1.0 - std::abs(x)) : 0.0;
    };
    w.decay_C = 2.0;
    w.decay_p = 1.5;
  } else if (name == "indicator_D") {
    w.dim = 2;
    w.freq_eval = [](const std::vector<double>& omega) {
      return cd(in_D(omega[0], omega[1]) ? 0.5 : 0.0);
    };
    w.decay_C = 0.5;
    w.decay_p = 0.0;
    w.freq_support = 4.0;
    return w;
  } else {
    throw UnknownName("no builtin window named '" + name + "'");
  }
  const auto teval = w.time_eval;
  const double support = w.support;
  w.freq_eval = [teval, support](const std::vector<double>& omega) {
    return cd(quad_transform(teval, support, omega[0]));
  };
  return w;
}

PartitionCheck partition_of_unity_check(const AnalyticWindow& w, double step,
                                        int grid_count) {
  if (!w.has_time()) throw NoTimeEvaluator("window has no time evaluator");
  if (step <= 0.0 || grid_count < 2) throw BadParameters("partition check grid");
  std::vector<double> vals(grid_count);
  double mean = 0.0;
  for (int i = 0; i < grid_count; ++i) {
    const double x = step * i / grid_count;
    const int n_lo = static_cast<int>(std::floor((x - w.support) / step)) - 1;
    const int n_hi = static_cast<int>(std::ceil((x + w.support) / step)) + 1;
    double acc = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) {
      const double v = w.time_eval(x - n * step);
      acc += v * v;
    }
    vals[i] = acc;
    mean += acc;
  }
  mean /= grid_count;
  PartitionCheck check;
  check.constant = mean;
  for (double v : vals)
    check.max_deviation = std::max(check.max_deviation, std::abs(v - mean));
  return check;
}

AutocorrValues autocorr_continuous(const AnalyticWindow& w, double mod_step,
                                   double density, const std::vector<double>& alpha,
                                   const std::vector<std::vector<double>>& omega_grid,
                                   double radius,
                                   const groups::SeparableGroup* G,
                                   std::optional<double> required_tail) {
  const int d = w.dim;
  if (static_cast<int>(alpha.size()) != d) throw DimensionMismatch("alpha");
  if (G) {
    ivec ai(d);
    for (int i = 0; i < d; ++i) {
      ai[i] = static_cast<int>(std::llround(alpha[i]));
      if (std::abs(alpha[i] - ai[i]) > 1e-9)
        throw AlphaNotInDual("alpha must be integral for the group dual test");
    }
    if (!groups::in_dual_two_lambda(*G, ai))
      throw AlphaNotInDual("alpha is not in 2 Lambda^perp");
  }

  double alpha_norm = 0.0;
  for (double a : alpha) alpha_norm = std::max(alpha_norm, std::abs(a));

  AutocorrValues out;
  if (w.freq_support > 0.0) {
    if (radius < w.freq_support)
      throw TruncationInsufficient("radius is below the transform support");
    out.tail_bound = 0.0;  // compact transform, omitted terms vanish
  } else if (d == 1 && w.decay_p > 1.0) {
    const double R = radius, s = mod_step, p = w.decay_p, C = w.decay_C;
    const double far = std::pow(1.0 + std::max(0.0, R - alpha_norm), -p);
    const double shell =
        2.0 * (std::pow(1.0 + R, -p) + std::pow(1.0 + R, 1.0 - p) / (s * (p - 1.0)));
    out.tail_bound = density * C * C * far * shell;
  } else {
    throw TruncationInsufficient("no truncation certificate for this window");
  }
  if (required_tail && out.tail_bound > *required_tail)
    throw TruncationInsufficient("certified tail " + std::to_string(out.tail_bound) +
                                 " exceeds " + std::to_string(*required_tail));

  out.values.reserve(omega_grid.size());
  for (const auto& omega : omega_grid) {
    if (static_cast<int>(omega.size()) != d) throw DimensionMismatch("omega point");
    // enumerate lattice shifts m*mod_step with |omega - m*mod_step|_inf <= radius
    std::vector<int> lo(d), hi(d);
    for (int i = 0; i < d; ++i) {
      lo[i] = static_cast<int>(std::ceil((omega[i] - radius) / mod_step));
      hi[i] = static_cast<int>(std::floor((omega[i] + radius) / mod_step));
    }
    cd acc = 0.0;
    ivec m = lo;
    while (true) {
      std::vector<double> u(d), ua(d);
      for (int i = 0; i < d; ++i) {
        u[i] = omega[i] - m[i] * mod_step;
        ua[i] = u[i] - alpha[i];
      }
      acc += w.freq_eval(u) * std::conj(w.freq_eval(ua));
      int i = d - 1;
      for (; i >= 0; --i) {
        if (++m[i] <= hi[i]) break;
        m[i] = lo[i];
      }
      if (i < 0) break;
    }
    out.values.push_back(density * acc);
  }
  return out;
}

namespace {

/// Exact time-side tightness test: tau_alpha(u) = density * sum_n
/// g(u - n*step) conj(g(u - n*step + alpha)); tight iff a*delta_{alpha,0}.
LatticeVerdict time_side_verdict(const AnalyticWindow& w, double trans_step,
                                 double density, double alpha_step, int grid_count,
                                 double tol) {
  LatticeVerdict v;
  const int alpha_max = static_cast<int>(std::ceil(2.0 * w.support / alpha_step));
  // bound = mean of the diagonal term
  std::vector<double> diag(grid_count);
  double mean = 0.0;
  for (int i = 0; i < grid_count; ++i) {
    const double u = trans_step * i / grid_count;
    const int n_lo = static_cast<int>(std::floor((u - w.support) / trans_step)) - 1;
    const int n_hi = static_cast<int>(std::ceil((u + w.support) / trans_step)) + 1;
    double acc = 0.0;
    for (int n = n_lo; n <= n_hi; ++n) {
      const double g = w.time_eval(u - n * trans_step);
      acc += g * g;
    }
    diag[i] = density * acc;
    mean += diag[i];
  }
  mean /= grid_count;
  v.bound = mean;
  for (double x : diag) v.max_deviation = std::max(v.max_deviation, std::abs(x - mean));
  for (int a = 1; a <= alpha_max; ++a) {
    const double alpha = a * alpha_step;
    for (int i = 0; i < grid_count; ++i) {
      const double u = trans_step * i / grid_count;
      const int n_lo = static_cast<int>(std::floor((u - w.support) / trans_step)) - 1;
      const int n_hi = static_cast<int>(std::ceil((u + w.support) / trans_step)) + 1;
      double acc = 0.0;
      for (int n = n_lo; n <= n_hi; ++n)
        acc += w.time_eval(u - n * trans_step) * w.time_eval(u - n * trans_step + alpha);
      v.max_deviation = std::max(v.max_deviation, density * std::abs(acc));
    }
  }
  v.tight = v.max_deviation <= tol;
  return v;
}

}  // namespace

LatticeConventionReport lattice_convention_report(const AnalyticWindow& w,
                                                  int grid_count, double tol) {
  if (!w.has_time()) throw NoTimeEvaluator("window has no time evaluator");
  LatticeConventionReport rep;
  // {M_{m/2} T_n g}: Fourier image is shift-invariant along (1/2)Z with
  // integer-modulation generators; its autocorrelations reduce to integer
  // time correlations with density 2 and dual spacing 2.
  rep.half_freq = time_side_verdict(w, 1.0, 2.0, 2.0, grid_count, tol);
  // {M_m T_{n/2} g}: image translations Z, half-integer time correlations,
  // density 1 and dual spacing 1.
  rep.half_time = time_side_verdict(w, 0.5, 1.0, 1.0, grid_count, tol);
  return rep;
}

std::vector<std::vector<double>> omega_interior_grid(int nx, int ny, double margin) {
  // x strip [2.1, 2.9] keeps every point `margin` away from the
  // discontinuity lines x in Z, y in Z and y - x in Z of the translated
  // indicator, except the y = x - 1 band which is filtered per column
  std::vector<std::vector<double>> pts;
  for (int i = 0; i < nx; ++i) {
    const double x = 2.1 + 0.8 * i / (nx - 1);
    std::vector<double> ys;
    const double ylo = 1.0 + margin, yhi = 2.0 - margin;
    for (int step = 0; static_cast<int>(ys.size()) < ny; ++step) {
      if (step > 100000) throw Error("interior grid construction failed");
      const double y = ylo + (yhi - ylo) * ((step * 37) % 1009) / 1009.0;
      const double band = y - (x - 1.0);
      if (std::abs(band) < margin + 1e-9) continue;
      ys.push_back(y);
    }
    for (double y : ys) pts.push_back({x, y});
  }
  return pts;
}

CounterexampleReport counterexample_report(double tol) {
  const AnalyticWindow w = builtin_window("indicator_D");
  const auto grid = omega_interior_grid();
  CounterexampleReport rep;
  rep.points = grid.size();

  // alternating Wilson autocorrelation at alpha = (1,1)
  for (const auto& omega : grid) {
    cd acc = 0.0;
    for (int m1 = -8; m1 <= 8; ++m1)
      for (int m2 = -8; m2 <= 8; ++m2) {
        const double sign = ((m1 + m2) % 2 == 0) ? 1.0 : -1.0;
        const cd a = w.freq_eval({omega[0] - m1, omega[1] - m2});
        const cd b = w.freq_eval({omega[0] + m1 - 1.0, omega[1] + m2 - 1.0});
        acc += sign * std::conj(a) * b;
      }
    rep.wilson_value_dev = std::max(rep.wilson_value_dev, std::abs(acc - cd(0.5)));
  }

  // the redundancy-4 Gabor system is tight with bound 4
  const auto t0 = autocorr_continuous(w, 1.0, 4.0, {0.0, 0.0}, grid, 10.0);
  for (const cd& v : t0.values)
    rep.gabor_t0_dev = std::max(rep.gabor_t0_dev, std::abs(v - cd(4.0)));
  const std::vector<std::vector<double>> alphas = {
      {2.0, 0.0}, {0.0, 2.0}, {2.0, 2.0}, {-2.0, 2.0}, {4.0, 0.0}};
  for (const auto& alpha : alphas) {
    const auto t = autocorr_continuous(w, 1.0, 4.0, alpha, grid, 12.0);
    for (const cd& v : t.values)
      rep.gabor_other_dev = std::max(rep.gabor_other_dev, std::abs(v));
  }
  rep.pass = rep.wilson_value_dev <= tol && rep.gabor_t0_dev <= tol &&
             rep.gabor_other_dev <= tol;
  return rep;
}

}  // namespace wg::contin
