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

#include "wg/grid.hpp"

#include <cmath>
#include <random>

#include "wg/errors.hpp"

namespace wg::grid {

namespace {
constexpr double kTau = 6.283185307179586476925286766559;

int round_to_int(double x, const char* what) {
  const double n = std::round(x);
  if (std::abs(x - n) > 1e-9)
    throw OffGridShift(std::string(what) + " is not integral: " + std::to_string(x));
  return static_cast<int>(n);
}
}  // namespace

double GridSpec::weight() const { return 1.0 / static_cast<double>(ipow(r, d)); }

GridSpec make_grid(int d, int P, int r, std::int64_t max_total) {
  if (d < 1) throw BadParameters("dimension must be >= 1");
  if (P < 2 || P % 2 != 0) throw BadParameters("P must be a positive even integer");
  if (r < 2 || r % 2 != 0) throw BadParameters("r must be a positive even integer");
  GridSpec s;
  s.d = d;
  s.P = P;
  s.r = r;
  s.L = P * r;
  if (ipow(s.L, d) > max_total)
    throw TooLarge("grid has " + std::to_string(ipow(s.L, d)) +
                   " samples, cap is " + std::to_string(max_total));
  return s;
}

cd GridSignal::dot(const GridSignal& f, const GridSignal& h) {
  if (!(f.spec == h.spec)) throw IncompatibleGrid("inner product across grids");
  cd acc = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    acc += f.values[i] * std::conj(h.values[i]);
  return acc * f.spec.weight();
}

double GridSignal::norm() const {
  double acc = 0.0;
  for (const cd& v : values) acc += std::norm(v);
  return std::sqrt(acc * spec.weight());
}

double GridSignal::max_abs() const {
  double m = 0.0;
  for (const cd& v : values) m = std::max(m, std::abs(v));
  return m;
}

GridSignal& GridSignal::operator+=(const GridSignal& o) {
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

GridSignal& GridSignal::operator*=(cd s) {
  for (cd& v : values) v *= s;
  return *this;
}

GridSignal zeros(const GridSpec& spec) { return {spec, cvec(spec.total(), cd(0.0))}; }

double max_dist(const GridSignal& f, const GridSignal& g) {
  double m = 0.0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    m = std::max(m, std::abs(f.values[i] - g.values[i]));
  return m;
}

GridSignal tf_shift(const GridSignal& f, const std::vector<double>& lambda,
                    const std::vector<double>& gamma) {
  const GridSpec& s = f.spec;
  if (static_cast<int>(lambda.size()) != s.d || static_cast<int>(gamma.size()) != s.d)
    throw DimensionMismatch("tf_shift label dimension");
  ivec shift(s.d);
  for (int i = 0; i < s.d; ++i) {
    shift[i] = mod(round_to_int(lambda[i] * s.r, "lambda*r"), s.L);
    // gamma*P integral makes the modulation L-periodic on the index grid
    round_to_int(gamma[i] * s.P, "gamma*P");
  }
  bool modulated = false;
  for (double gi : gamma)
    if (gi != 0.0) modulated = true;

  std::vector<std::vector<int>> source(s.d, std::vector<int>(s.L));
  for (int i = 0; i < s.d; ++i)
    for (int j = 0; j < s.L; ++j) source[i][j] = mod(j - shift[i], s.L);
  // the modulation factorizes per axis; tabulating e^{2pi i gamma_i j_i / r}
  // keeps the inner loop free of trig
  std::vector<cvec> phase;
  if (modulated) {
    phase.assign(s.d, cvec(s.L));
    for (int i = 0; i < s.d; ++i)
      for (int j = 0; j < s.L; ++j)
        phase[i][j] = std::polar(1.0, kTau * gamma[i] * j / s.r);
  }

  GridSignal out = zeros(s);
  ivec j(s.d, 0);
  std::size_t idx = 0;
  do {
    cd w = 1.0;
    std::size_t src = 0;
    for (int i = 0; i < s.d; ++i) {
      if (modulated) w *= phase[i][j[i]];
      src = src * static_cast<std::size_t>(s.L) + source[i][j[i]];
    }
    out.values[idx] = modulated ? w * f.values[src] : f.values[src];
    ++idx;
  } while (next_index(j, s.L));
  return out;
}

GridSignal translate_idx(const GridSignal& f, const ivec& s) {
  std::vector<double> lambda(f.spec.d), gamma(f.spec.d, 0.0);
  for (int i = 0; i < f.spec.d; ++i) lambda[i] = static_cast<double>(s[i]) / f.spec.r;
  return tf_shift(f, lambda, gamma);
}

GridSignal modulate(const GridSignal& f, const ivec& gamma) {
  std::vector<double> lambda(f.spec.d, 0.0), g(f.spec.d);
  for (int i = 0; i < f.spec.d; ++i) g[i] = static_cast<double>(gamma[i]);
  return tf_shift(f, lambda, g);
}

GridSignal dft(const GridSignal& f, bool inverse) {
  GridSignal out = f;
  std::vector<int> dims(f.spec.d, f.spec.L);
  for (int ax = 0; ax < f.spec.d; ++ax) kern::axis_dft(out.values, dims, ax, inverse);
  const double scale = inverse ? 1.0 / static_cast<double>(ipow(f.spec.P, f.spec.d))
                               : f.spec.weight();
  for (cd& v : out.values) v *= scale;
  return out;
}

ZakArray zak(const GridSignal& f) {
  const GridSpec& s = f.spec;
  const std::size_t nj = s.residues(), nk = s.cells();
  ZakArray z{s, cvec(nj * nk)};
  // gather into [j-block][m-block] layout, then DFT the m axes in place
  ivec j(s.d, 0);
  std::size_t jf = 0;
  do {
    ivec m(s.d, 0);
    std::size_t mf = 0;
    do {
      ivec idx(s.d);
      for (int i = 0; i < s.d; ++i) idx[i] = j[i] + m[i] * s.r;
      z.values[jf * nk + mf] = f.values[flatten(idx, s.L)];
      ++mf;
    } while (next_index(m, s.P));
    ++jf;
  } while (next_index(j, s.r));

  std::vector<int> dims(1 + s.d, s.P);
  dims[0] = static_cast<int>(nj);
  for (int ax = 1; ax <= s.d; ++ax) kern::axis_dft(z.values, dims, ax, false);
  return z;
}

GridSignal inverse_zak(const ZakArray& z) {
  const GridSpec& s = z.spec;
  const std::size_t nj = s.residues(), nk = s.cells();
  cvec work = z.values;
  std::vector<int> dims(1 + s.d, s.P);
  dims[0] = static_cast<int>(nj);
  for (int ax = 1; ax <= s.d; ++ax) kern::axis_dft(work, dims, ax, true);
  const double scale = 1.0 / static_cast<double>(nk);
  GridSignal f = zeros(s);
  ivec j(s.d, 0);
  std::size_t jf = 0;
  do {
    ivec m(s.d, 0);
    std::size_t mf = 0;
    do {
      ivec idx(s.d);
      for (int i = 0; i < s.d; ++i) idx[i] = j[i] + m[i] * s.r;
      f.values[flatten(idx, s.L)] = work[jf * nk + mf] * scale;
      ++mf;
    } while (next_index(m, s.P));
    ++jf;
  } while (next_index(j, s.r));
  return f;
}

GridSignal periodize_sample(const std::function<double(const std::vector<double>&)>& w,
                            double support, const GridSpec& spec, double tail_tol) {
  // terms beyond the declared support radius must vanish; one period must
  // already contain the support up to tail_tol
  const int mmax = static_cast<int>(std::ceil((support + 1.0) / spec.P)) + 1;
  GridSignal g = zeros(spec);
  double tail = 0.0;
  ivec j(spec.d, 0);
  std::size_t idx = 0;
  std::vector<double> x(spec.d);
  ivec m(spec.d, 0);
  do {
    double acc = 0.0, wrap = 0.0;
    m.assign(spec.d, -mmax);
    while (true) {
      bool inside = true;
      for (int i = 0; i < spec.d; ++i) {
        x[i] = static_cast<double>(j[i]) / spec.r + m[i] * spec.P;
        if (std::abs(x[i]) > support + 1e-12) inside = false;
      }
      if (inside) {
        const double v = w(x);
        acc += v;
        bool principal = true;  // the unique term with x in [-P/2, P/2)^d
        for (int i = 0; i < spec.d; ++i) {
          const double xp = static_cast<double>(j[i]) / spec.r;
          const double centered = xp - spec.P * std::floor(xp / spec.P + 0.5);
          if (std::abs(x[i] - centered) > 1e-9) principal = false;
        }
        if (!principal) wrap += std::abs(v);
      }
      int i = spec.d - 1;
      for (; i >= 0; --i) {
        if (++m[i] <= mmax) break;
        m[i] = -mmax;
      }
      if (i < 0) break;
    }
    g.values[idx] = acc;
    tail = std::max(tail, wrap);
    ++idx;
  } while (next_index(j, spec.L));
  if (support > spec.P / 2.0 && tail > tail_tol)
    throw PeriodTooSmall("window support " + std::to_string(support) +
                         " wraps around period " + std::to_string(spec.P) +
                         " with mass " + std::to_string(tail));
  return g;
}

GridSignal random_symmetric_window(const GridSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  GridSignal g = zeros(spec);
  for (cd& v : g.values) v = dist(rng);
  // enforce g(-j) = g(j); real and even makes the transform real
  GridSignal sym = g;
  ivec j(spec.d, 0);
  std::size_t idx = 0;
  do {
    ivec neg(spec.d);
    for (int i = 0; i < spec.d; ++i) neg[i] = mod(-j[i], spec.L);
    sym.values[idx] = 0.5 * (g.values[idx] + g.values[flatten(neg, spec.L)]);
    ++idx;
  } while (next_index(j, spec.L));
  const double n = sym.norm();
  if (n > 0) sym *= cd(1.0 / n);
  return sym;
}

GridSignal random_real_spectrum_window(const GridSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> dist(0.0, 1.0);
  GridSignal hat = zeros(spec);
  for (cd& v : hat.values) v = dist(rng);
  GridSignal g = dft(hat, true);
  const double n = g.norm();
  if (n > 0) g *= cd(1.0 / n);
  return g;
}

GridSignal tensor(const std::vector<GridSignal>& factors) {
  if (factors.empty()) throw BadParameters("tensor of zero factors");
  const int d = static_cast<int>(factors.size());
  const GridSpec base = factors[0].spec;
  for (const auto& f : factors)
    if (f.spec.d != 1 || f.spec.P != base.P || f.spec.r != base.r)
      throw IncompatibleGrid("tensor factors must be 1-D on a common grid");
  GridSpec spec = make_grid(d, base.P, base.r);
  GridSignal g = zeros(spec);
  ivec j(d, 0);
  std::size_t idx = 0;
  do {
    cd v = 1.0;
    for (int i = 0; i < d; ++i) v *= factors[i].values[j[i]];
    g.values[idx] = v;
    ++idx;
  } while (next_index(j, spec.L));
  return g;
}

}  // namespace wg::grid
