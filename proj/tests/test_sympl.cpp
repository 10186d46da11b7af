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
#include "wg/frames.hpp"
#include "wg/sympl.hpp"

using namespace wg;
using sympl::Mat;
using sympl::OperatorPlan;
using sympl::PrimitiveOp;
using sympl::Vec;

namespace {

grid::GridSignal random_complex(const grid::GridSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  grid::GridSignal f = grid::zeros(spec);
  for (cd& v : f.values) v = cd(dist(rng), dist(rng));
  return f;
}

Mat J2() {
  Mat J(2, 2);
  J << 0, 1, -1, 0;
  return J;
}

}  // namespace

TEST_CASE("symplectic membership") {
  CHECK(sympl::is_symplectic(J2()));
  CHECK(sympl::is_symplectic(Mat::Identity(4, 4)));
  Mat bad(2, 2);
  bad << 2, 0, 0, 1;
  CHECK_FALSE(sympl::is_symplectic(bad));
  CHECK_THROWS_AS(sympl::is_symplectic(Mat::Identity(3, 3)), OddDimension);
}

TEST_CASE("associated matrices") {
  CHECK((sympl::recompose({1, {PrimitiveOp::fourier()}}) - J2()).cwiseAbs().maxCoeff() == 0.0);
  Mat M(2, 2);
  M << 1, 2, 2, -1;
  const Mat chirp = sympl::recompose({2, {PrimitiveOp::chirp(M)}});
  CHECK((chirp.topLeftCorner(2, 2) - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((chirp.bottomLeftCorner(2, 2) - M).cwiseAbs().maxCoeff() == 0.0);
  CHECK(chirp.topRightCorner(2, 2).cwiseAbs().maxCoeff() == 0.0);
  Mat C(2, 2);
  C << 2, 1, 1, 1;
  const Mat dil = sympl::recompose({2, {PrimitiveOp::dilation(C)}});
  CHECK((dil.topLeftCorner(2, 2) - C.inverse()).cwiseAbs().maxCoeff() < 1e-14);
  CHECK((dil.bottomRightCorner(2, 2) - C.transpose()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("decompose") {
  SUBCASE("the Fourier matrix reduces to a bare Fourier op") {
    const auto plan = sympl::decompose(J2());
    REQUIRE(plan.ops.size() == 1);
    CHECK(plan.ops[0].kind == PrimitiveOp::Kind::Fourier);
  }
  SUBCASE("shear matrices use the conjugated-chirp plan") {
    Mat A(2, 2);
    A << 1, 1, 0, 1;
    const auto plan = sympl::decompose(A);
    CHECK((sympl::recompose(plan) - A).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("matrices with four singular blocks are rejected") {
    // direct sum of the identity on one axis and the Fourier rotation on the
    // other: every d x d block has a zero diagonal entry
    Mat A = Mat::Zero(4, 4);
    A(0, 0) = 1;  // K = diag(1, 0)
    A(1, 3) = 1;  // L = diag(0, 1)
    A(3, 1) = -1; // Q = diag(0, -1)
    A(2, 2) = 1;  // R = diag(1, 0)
    REQUIRE(sympl::is_symplectic(A));
    CHECK_THROWS_AS(sympl::decompose(A), AllBlocksSingular);
  }
  SUBCASE("round trips over random primitive products") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int d = 1; d <= 3; ++d)
      for (int t = 0; t < 10; ++t) {
        OperatorPlan gen;
        gen.d = d;
        for (int o = 0; o < 4; ++o) {
          const int k = static_cast<int>(rng() % 3);
          if (k == 0) {
            gen.ops.push_back(PrimitiveOp::fourier());
          } else if (k == 1) {
            Mat M = Mat::NullaryExpr(d, d, [&]() { return u(rng); });
            M = ((M + M.transpose()) / 2).eval();
            gen.ops.push_back(PrimitiveOp::chirp(M));
          } else {
            Mat C;
            do {
              C = Mat::NullaryExpr(d, d, [&]() { return u(rng); });
            } while (std::abs(C.determinant()) < 0.2);
            gen.ops.push_back(PrimitiveOp::dilation(C));
          }
        }
        const Mat A = sympl::recompose(gen);
        REQUIRE(sympl::is_symplectic(A, 1e-9));
        OperatorPlan dec;
        try {
          dec = sympl::decompose(A);
        } catch (const AllBlocksSingular&) {
          continue;
        }
        const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
        CHECK((sympl::recompose(dec) - A).cwiseAbs().maxCoeff() / scale < 1e-9);
      }
  }
}

TEST_CASE("ks plans") {
  {
    const auto [A, plan] = sympl::ks_plan(0.5, 0.0);
    CHECK((A - Mat::Identity(2, 2)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(plan.ops.empty());
  }
  {
    const auto [A, plan] = sympl::ks_plan(0.5, 1.0);
    Mat want(2, 2);
    want << 1, 1, 0, 1;
    CHECK((A - want).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(plan.ops.size() == 3);
    CHECK(plan.ops[0].kind == PrimitiveOp::Kind::Fourier);
    CHECK(plan.ops[1].kind == PrimitiveOp::Kind::Chirp);
    CHECK(plan.ops[1].param(0, 0) == doctest::Approx(-1.0));
    CHECK(plan.ops[2].kind == PrimitiveOp::Kind::InverseFourier);
    CHECK((sympl::recompose(plan) - A).cwiseAbs().maxCoeff() < 1e-14);
  }
  {
    const auto [A, plan] = sympl::ks_plan(1.0, 0.0);
    Mat want(2, 2);
    want << 2, 0, 0, 0.5;
    CHECK((A - want).cwiseAbs().maxCoeff() == 0.0);
    REQUIRE(plan.ops.size() == 1);
    CHECK(plan.ops[0].kind == PrimitiveOp::Kind::Dilation);
    CHECK(plan.ops[0].param(0, 0) == doctest::Approx(0.5));
  }
  CHECK_THROWS_AS(sympl::ks_plan(0.0, 1.0), BadParameters);
}

TEST_CASE("phase factors") {
  OperatorPlan fourier{1, {PrimitiveOp::fourier()}};
  Vec nu(2);
  nu << 0.75, 2.0;
  CHECK(std::abs(sympl::phase_factor(fourier, nu) -
                 std::polar(1.0, 2.0 * M_PI * 0.75 * 2.0)) < 1e-14);
  CHECK(std::abs(sympl::phase_factor(fourier, Vec::Zero(2)) - cd(1.0)) == 0.0);

  SUBCASE("reflection invariance on random chains") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int t = 0; t < 50; ++t) {
      const int d = 1 + static_cast<int>(rng() % 3);
      OperatorPlan plan;
      plan.d = d;
      for (int o = 0; o < 3; ++o) {
        const int k = static_cast<int>(rng() % 3);
        if (k == 0) {
          plan.ops.push_back(PrimitiveOp::fourier());
        } else if (k == 1) {
          Mat M = Mat::NullaryExpr(d, d, [&]() { return u(rng); });
          M = ((M + M.transpose()) / 2).eval();
          plan.ops.push_back(PrimitiveOp::chirp(M));
        } else {
          Mat C;
          do {
            C = Mat::NullaryExpr(d, d, [&]() { return u(rng); });
          } while (std::abs(C.determinant()) < 0.2);
          plan.ops.push_back(PrimitiveOp::dilation(C));
        }
      }
      const Vec v = Vec::NullaryExpr(2 * d, [&]() { return u(rng); });
      CHECK(std::abs(sympl::phase_factor(plan, v) - sympl::phase_factor(plan, -v)) < 1e-12);
    }
  }
}

TEST_CASE("grid application of primitive chains") {
  const auto spec = grid::make_grid(1, 4, 4);  // square: position/frequency units agree
  const auto f = random_complex(spec, 1);

  SUBCASE("Fourier chain is the grid dft") {
    const OperatorPlan plan{1, {PrimitiveOp::fourier()}};
    CHECK(grid::max_dist(sympl::apply_plan(plan, f), grid::dft(f)) == 0.0);
  }
  SUBCASE("Fourier primitives refuse rectangular grids") {
    const auto rect = random_complex(grid::make_grid(1, 4, 8), 2);
    CHECK_THROWS_AS(sympl::apply_plan({1, {PrimitiveOp::fourier()}}, rect),
                    IncompatiblePlan);
  }
  SUBCASE("zero chirp is the identity") {
    Mat M0 = Mat::Zero(1, 1);
    const OperatorPlan plan{1, {PrimitiveOp::chirp(M0)}};
    CHECK(grid::max_dist(sympl::apply_plan(plan, f), f) == 0.0);
  }
  SUBCASE("incompatible primitives are named") {
    const auto rect = random_complex(grid::make_grid(1, 4, 8), 2);
    Mat M1(1, 1), Chalf(1, 1), C2(1, 1);
    M1 << 1.0;
    Chalf << 0.5;
    C2 << 2.0;
    CHECK_THROWS_AS(sympl::apply_plan({1, {PrimitiveOp::chirp(M1)}}, rect),
                    IncompatibleChirp);
    CHECK_THROWS_AS(sympl::apply_plan({1, {PrimitiveOp::dilation(Chalf)}}, f),
                    IncompatibleDilation);
    CHECK_THROWS_AS(sympl::apply_plan({1, {PrimitiveOp::dilation(C2)}}, f),
                    IncompatibleDilation);
  }
  SUBCASE("plans act unitarily") {
    Mat M2(1, 1), Cm1(1, 1);
    M2 << 2.0;
    Cm1 << -1.0;
    const OperatorPlan plan{
        1, {PrimitiveOp::chirp(M2), PrimitiveOp::fourier(), PrimitiveOp::dilation(Cm1)}};
    CHECK(sympl::apply_plan(plan, f).norm() == doctest::Approx(f.norm()).epsilon(1e-12));
  }
  SUBCASE("intertwining identity on the grid") {
    Mat M2(1, 1);
    M2 << 2.0;
    const OperatorPlan plan{1, {PrimitiveOp::fourier(), PrimitiveOp::chirp(M2)}};
    const Mat A = sympl::recompose(plan);
    const grid::GridSignal pf = sympl::apply_plan(plan, f);
    for (double lam : {0.0, 0.5, 1.0})
      for (double gam : {0.0, 1.0, 2.0}) {
        Vec nu(2);
        nu << lam, gam;
        const Vec anu = A * nu;
        const auto lhs = sympl::apply_plan(plan, grid::tf_shift(f, {lam}, {gam}));
        auto rhs = grid::tf_shift(pf, {anu(0)}, {anu(1)});
        rhs *= sympl::phase_factor(plan, nu);
        CHECK(grid::max_dist(lhs, rhs) < 1e-11);
      }
  }
}

TEST_CASE("symplectic Wilson families") {
  // rectangular grids support plans without Fourier steps; Fourier-bearing
  // plans run on the square grid
  const auto rect = grid::make_grid(1, 4, 8);
  const auto spec = grid::make_grid(1, 4, 4);
  const auto G = groups::make_group(1, {{1}});
  const auto g = grid::random_symmetric_window(spec, 4);
  const auto W = synth::wilson_family(g, G);

  SUBCASE("identity plan reproduces the Wilson family") {
    const OperatorPlan id{1, {}};
    const auto grect = grid::random_symmetric_window(rect, 4);
    const auto WR = synth::wilson_family(grect, G);
    const auto WS = sympl::symplectic_wilson_family(grect, G, id);
    REQUIRE(WS.size() == WR.size());
    CHECK(WS.labels == WR.labels);
    for (std::size_t i = 0; i < WR.size(); ++i)
      CHECK(grid::max_dist(WS.members[i], WR.members[i]) < 1e-12);
  }
  SUBCASE("the Fourier plan preserves the Gram matrix") {
    const OperatorPlan fp{1, {PrimitiveOp::fourier()}};
    const auto WS = sympl::symplectic_wilson_family(g, G, fp);
    const cvec a = frames::gram(W), b = frames::gram(WS);
    double dev = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) dev = std::max(dev, std::abs(a[i] - b[i]));
    CHECK(dev < 1e-10);
  }
  SUBCASE("shear plan on a canonical tight window gives an ONB") {
    const auto h = frames::canonical_tight(g, G);
    const auto [A, plan] = sympl::ks_plan(0.5, 2.0);
    const auto WS = sympl::symplectic_wilson_family(h, G, plan);
    const auto rep = frames::frame_bounds(WS);
    CHECK(rep.onb);
  }
}
