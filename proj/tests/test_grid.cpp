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

#include <cmath>
#include <random>

#include "doctest.h"
#include "wg/errors.hpp"
#include "wg/grid.hpp"

using namespace wg;
using grid::GridSignal;
using grid::GridSpec;

namespace {

GridSignal random_signal(const GridSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  GridSignal f = grid::zeros(spec);
  for (cd& v : f.values) v = cd(dist(rng), dist(rng));
  return f;
}

}  // namespace

TEST_CASE("make_grid validates parameters") {
  CHECK(grid::make_grid(1, 4, 8).L == 32);
  const auto s = grid::make_grid(2, 2, 4);
  CHECK(s.L == 8);
  CHECK(s.total() == 64);
  CHECK_THROWS_AS(grid::make_grid(1, 3, 8), BadParameters);
  CHECK_THROWS_AS(grid::make_grid(1, 4, 7), BadParameters);
  CHECK_THROWS_AS(grid::make_grid(0, 4, 8), BadParameters);
  CHECK_THROWS_AS(grid::make_grid(4, 16, 16), TooLarge);
}

TEST_CASE("tf_shift identities") {
  const auto spec = grid::make_grid(1, 4, 8);
  const GridSignal f = random_signal(spec, 1);

  SUBCASE("zero shift is the identity") {
    CHECK(grid::max_dist(grid::tf_shift(f, {0.0}, {0.0}), f) == 0.0);
  }
  SUBCASE("half-integer translation moves the delta") {
    GridSignal delta = grid::zeros(spec);
    delta.values[0] = 1.0;
    const GridSignal moved = grid::tf_shift(delta, {0.5}, {0.0});
    CHECK(std::abs(moved.values[4] - cd(1.0)) < 1e-15);
    CHECK(std::abs(moved.values[0]) == 0.0);
  }
  SUBCASE("off-grid shifts are rejected") {
    CHECK_THROWS_AS(grid::tf_shift(f, {0.3}, {0.0}), OffGridShift);
    CHECK_THROWS_AS(grid::tf_shift(f, {0.0}, {0.3}), OffGridShift);
  }
  SUBCASE("commutator M_g T_l = e^{2pi i <g,l>} T_l M_g") {
    const std::vector<double> lam = {1.5}, gam = {3.0};
    const GridSignal lhs = grid::tf_shift(grid::tf_shift(f, lam, {0.0}), {0.0}, gam);
    GridSignal rhs = grid::tf_shift(grid::tf_shift(f, {0.0}, gam), lam, {0.0});
    rhs *= std::polar(1.0, 2.0 * M_PI * gam[0] * lam[0]);
    CHECK(grid::max_dist(lhs, rhs) < 1e-12);
  }
  SUBCASE("composition law carries the scalar e^{-2pi i <g1,l2>}") {
    const std::vector<double> l1 = {0.5}, g1 = {2.0}, l2 = {1.0}, g2 = {3.0};
    const GridSignal lhs = grid::tf_shift(grid::tf_shift(f, l1, g1), l2, g2);
    GridSignal rhs = grid::tf_shift(f, {l1[0] + l2[0]}, {g1[0] + g2[0]});
    rhs *= std::polar(1.0, -2.0 * M_PI * g1[0] * l2[0]);
    CHECK(grid::max_dist(lhs, rhs) < 1e-12);
  }
  SUBCASE("shifts are unitary") {
    CHECK(grid::tf_shift(f, {1.5}, {5.0}).norm() == doctest::Approx(f.norm()).epsilon(1e-12));
  }
}

TEST_CASE("dft basics") {
  const auto spec = grid::make_grid(1, 4, 8);

  SUBCASE("delta transforms to a constant") {
    GridSignal delta = grid::zeros(spec);
    delta.values[0] = 1.0;
    const GridSignal hat = grid::dft(delta);
    for (const cd& v : hat.values) CHECK(std::abs(v - hat.values[0]) < 1e-15);
    CHECK(std::abs(hat.values[0] - cd(1.0 / spec.r)) < 1e-15);
  }
  SUBCASE("inverse recovers the signal") {
    const GridSignal f = random_signal(spec, 2);
    CHECK(grid::max_dist(grid::dft(grid::dft(f), true), f) < 1e-13);
  }
  SUBCASE("Parseval with the module weights") {
    const GridSignal f = random_signal(spec, 3);
    const GridSignal fhat = grid::dft(f);
    double freq_norm2 = 0.0;
    for (const cd& v : fhat.values) freq_norm2 += std::norm(v);
    freq_norm2 /= spec.cells();
    CHECK(freq_norm2 == doctest::Approx(f.norm() * f.norm()).epsilon(1e-12));
  }
  SUBCASE("real even signals have a real transform, and conversely") {
    const GridSignal g = grid::random_symmetric_window(spec, 4);
    const GridSignal ghat = grid::dft(g);
    double max_im = 0.0;
    for (const cd& v : ghat.values) max_im = std::max(max_im, std::abs(v.imag()));
    CHECK(max_im < 1e-13);

    // real transform forces g(-j) = conj(g(j))
    GridSignal f = random_signal(spec, 5);
    GridSignal fhat = grid::dft(f);
    for (cd& v : fhat.values) v = v.real();
    const GridSignal back = grid::dft(fhat, true);
    for (int j = 0; j < spec.L; ++j) {
      const cd a = back.values[j];
      const cd b = back.values[mod(-j, spec.L)];
      CHECK(std::abs(a - std::conj(b)) < 1e-12);
    }
  }
  SUBCASE("2-D transform is unitary too") {
    const auto s2 = grid::make_grid(2, 2, 4);
    const GridSignal f = random_signal(s2, 6);
    const GridSignal fhat = grid::dft(f);
    double freq_norm2 = 0.0;
    for (const cd& v : fhat.values) freq_norm2 += std::norm(v);
    freq_norm2 /= s2.cells();
    CHECK(freq_norm2 == doctest::Approx(f.norm() * f.norm()).epsilon(1e-12));
    CHECK(grid::max_dist(grid::dft(fhat, true), f) < 1e-13);
  }
}

TEST_CASE("Zak transform") {
  const auto spec = grid::make_grid(1, 4, 8);

  SUBCASE("delta concentrates on one residue") {
    GridSignal delta = grid::zeros(spec);
    delta.values[0] = 1.0;
    const auto z = grid::zak(delta);
    for (int j = 0; j < spec.r; ++j)
      for (int k = 0; k < spec.P; ++k)
        CHECK(std::abs(z.values[j * spec.P + k] - cd(j == 0 ? 1.0 : 0.0)) < 1e-15);
  }
  SUBCASE("inverse_zak inverts") {
    const GridSignal f = random_signal(spec, 7);
    CHECK(grid::max_dist(grid::inverse_zak(grid::zak(f)), f) < 1e-13);
  }
  SUBCASE("normalization: ||Zf||^2 = P^d sum |f|^2") {
    const GridSignal f = random_signal(spec, 8);
    double zn = 0.0, fn = 0.0;
    const auto z = grid::zak(f);
    for (const cd& v : z.values) zn += std::norm(v);
    for (const cd& v : f.values) fn += std::norm(v);
    CHECK(zn == doctest::Approx(spec.P * fn).epsilon(1e-12));
  }
  SUBCASE("integer-cell translation becomes a k-phase") {
    for (std::uint64_t seed = 10; seed < 20; ++seed) {
      const GridSignal f = random_signal(spec, seed);
      const auto z = grid::zak(f);
      const auto zt = grid::zak(grid::translate_idx(f, {spec.r}));
      for (int j = 0; j < spec.r; ++j)
        for (int k = 0; k < spec.P; ++k) {
          const cd want = std::polar(1.0, -2.0 * M_PI * k / spec.P) * z.values[j * spec.P + k];
          CHECK(std::abs(zt.values[j * spec.P + k] - want) < 1e-12);
        }
    }
  }
}

TEST_CASE("periodize_sample") {
  const auto spec = grid::make_grid(1, 4, 8);

  SUBCASE("cos window lands exactly on the grid") {
    const auto g = grid::periodize_sample(
        [](const std::vector<double>& x) {
          return std::abs(x[0]) <= 1.0 ? std::cos(0.5 * M_PI * x[0]) : 0.0;
        },
        1.0, spec);
    for (int j = 0; j < spec.L; ++j) {
      const double xc = j / double(spec.r);
      const double x = xc - spec.P * std::floor(xc / spec.P + 0.5);
      const double want = std::abs(x) <= 1.0 ? std::cos(0.5 * M_PI * x) : 0.0;
      CHECK(std::abs(g.values[j] - cd(want)) < 1e-15);
    }
  }
  SUBCASE("zero window gives the zero signal") {
    const auto g =
        grid::periodize_sample([](const std::vector<double>&) { return 0.0; }, 1.0, spec);
    CHECK(g.max_abs() == 0.0);
  }
  SUBCASE("support wider than the period is rejected") {
    CHECK_THROWS_AS(grid::periodize_sample(
                        [](const std::vector<double>& x) {
                          return std::abs(x[0]) <= 3.0 ? 1.0 : 0.0;
                        },
                        3.0, spec),
                    PeriodTooSmall);
  }
}

TEST_CASE("random symmetric windows") {
  const auto spec = grid::make_grid(1, 4, 8);
  const auto g1 = grid::random_symmetric_window(spec, 1);
  const auto g2 = grid::random_symmetric_window(spec, 2);
  CHECK(g1.norm() == doctest::Approx(1.0).epsilon(1e-13));
  const auto hat = grid::dft(g1);
  double max_im = 0.0;
  for (const cd& v : hat.values) max_im = std::max(max_im, std::abs(v.imag()));
  CHECK(max_im < 1e-13);
  CHECK(grid::max_dist(g1, g2) > 1e-3);
  CHECK(grid::max_dist(g1, grid::random_symmetric_window(spec, 1)) == 0.0);
}

TEST_CASE("random real-spectrum windows") {
  const auto spec = grid::make_grid(2, 2, 4);
  const auto g = grid::random_real_spectrum_window(spec, 3);
  CHECK(g.norm() == doctest::Approx(1.0).epsilon(1e-13));
  const auto hat = grid::dft(g);
  double max_im = 0.0;
  for (const cd& v : hat.values) max_im = std::max(max_im, std::abs(v.imag()));
  CHECK(max_im < 1e-13);

  // real-even windows force Zak zeros at the quarter points in d = 2:
  // Zg(j,k) picks up the factor -1 under (j,k) -> (-j,-k) when exactly one
  // axis has j = r/2 and k = P/2
  const auto even = grid::random_symmetric_window(spec, 4);
  const auto z = grid::zak(even);
  const std::size_t nk = spec.cells();
  const std::size_t jf = flatten({spec.r / 2, 0}, spec.r);
  const std::size_t kf = flatten({spec.P / 2, spec.P / 2}, spec.P);
  CHECK(std::abs(z.values[jf * nk + kf]) < 1e-14);
  // the hermitian window has no such structural zero
  const auto zh = grid::zak(g);
  CHECK(std::abs(zh.values[jf * nk + kf]) > 1e-6);
}
