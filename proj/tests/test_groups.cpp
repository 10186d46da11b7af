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

#include <random>

#include "doctest.h"
#include "wg/errors.hpp"
#include "wg/groups.hpp"

using namespace wg;
using groups::ParityVector;
using groups::SeparableGroup;

TEST_CASE("make_group validates and derives blocks") {
  const auto G = groups::make_group(2, {{1, 1}});
  CHECK(G.k() == 1);
  CHECK(G.blocks[0] == std::vector<int>{0, 1});
  CHECK(G.remainder().empty());
  CHECK(G.order() == 2);

  const auto T = groups::make_group(2, {});
  CHECK(T.k() == 0);
  CHECK(T.order() == 1);

  const auto G3 = groups::make_group(3, {{1, 0, 0}, {0, 1, 1}});
  CHECK(G3.k() == 2);
  CHECK(G3.blocks[0] == std::vector<int>{0});
  CHECK(G3.blocks[1] == std::vector<int>{1, 2});
  CHECK(G3.anchors == std::vector<int>{0, 1});

  CHECK_THROWS_AS(groups::make_group(2, {{1, 0}, {1, 1}}), OverlappingSupports);
  CHECK_THROWS_AS(groups::make_group(2, {{0, 0}}), ZeroGenerator);
}

TEST_CASE("reflect") {
  CHECK(groups::reflect({1, 0}, {3, 5}) == ivec{-3, 5});
  CHECK(groups::reflect({0, 0}, {7, -2}) == ivec{7, -2});
  CHECK(groups::reflect({1, 1}, {1, 1}, 4) == ivec{3, 3});
  CHECK_THROWS_AS(groups::reflect({1}, {1, 2}), DimensionMismatch);

  // group law over all pairs of a two-generator group
  const auto G = groups::make_group(3, {{1, 0, 0}, {0, 1, 1}});
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(-9, 9);
  for (const auto& s : G.elements)
    for (const auto& t : G.elements) {
      const ivec x = {pick(rng), pick(rng), pick(rng)};
      CHECK(groups::reflect(s, groups::reflect(t, x)) ==
            groups::reflect(groups::parity_add(s, t), x));
    }
}

TEST_CASE("orbits and stabilizers") {
  const auto G = groups::make_group(2, {{1, 1}});
  SUBCASE("free orbit") {
    const auto info = groups::orbit_and_stabilizer(G, {1, 2});
    CHECK(info.orbit.size() == 2);
    CHECK(info.stabilizer.size() == 1);
  }
  SUBCASE("origin is fixed") {
    const auto info = groups::orbit_and_stabilizer(G, {0, 0});
    CHECK(info.orbit.size() == 1);
    CHECK(info.stabilizer.size() == 2);
  }
  SUBCASE("self-paired residue mod 4") {
    const auto G1 = groups::make_group(1, {{1}});
    const auto info = groups::orbit_and_stabilizer(G1, {2}, 4);
    CHECK(info.orbit == std::vector<ivec>{{2}});
    CHECK(info.stabilizer.size() == 2);
  }
  SUBCASE("orbit-stabilizer product") {
    const auto G2 = groups::make_group(3, {{1, 0, 0}, {0, 1, 1}});
    for (int a = -2; a <= 2; ++a)
      for (int b = -2; b <= 2; ++b) {
        const auto info = groups::orbit_and_stabilizer(G2, {a, b, 1 - b});
        CHECK(info.orbit.size() * info.stabilizer.size() == 4);
      }
  }
}

TEST_CASE("annihilator membership") {
  const auto G = groups::make_group(2, {{1, 1}});
  CHECK(groups::in_dual_two_lambda(G, {1, 1}));
  CHECK_FALSE(groups::in_dual_two_lambda(G, {1, 0}));
  const auto T = groups::make_group(2, {});
  CHECK(groups::in_dual_two_lambda(T, {3, -7}));
  const auto F = groups::make_group(2, {{1, 0}, {0, 1}});
  CHECK_FALSE(groups::in_dual_two_lambda(F, {1, 2}));
  CHECK(groups::in_dual_two_lambda(F, {2, 2}));

  CHECK(groups::in_lambda(G, {1, 1}));
  CHECK(groups::in_lambda(G, {3, -1}));
  CHECK_FALSE(groups::in_lambda(G, {1, 0}));
  CHECK(groups::in_lambda(G, {2, 4}));
}

TEST_CASE("self-duality isomorphism") {
  const auto G = groups::make_group(2, {{1, 1}});
  CHECK(groups::iso_I(G, {1, 1}) == ParityVector{1, 0});
  CHECK(groups::iso_I(G, {0, 0}) == ParityVector{0, 0});
  CHECK_THROWS_AS(groups::iso_I(G, {1, 0}), NotAGroupElement);

  const auto F = groups::make_group(2, {{1, 0}, {0, 1}});
  CHECK(groups::iso_I(F, {1, 1}) == ParityVector{1, 1});

  // <I(s^i), s^j> = delta_ij mod 2 and <I(s), h> = <s, I(h)> mod 2
  for (const auto& G2 : {G, F, groups::make_group(3, {{1, 1, 0}, {0, 0, 1}})}) {
    for (int i = 0; i < G2.k(); ++i)
      for (int j = 0; j < G2.k(); ++j)
        CHECK(groups::pairing(groups::iso_I(G2, G2.generators[i]), G2.generators[j]) ==
              (i == j ? -1 : 1));
    for (const auto& s : G2.elements)
      for (const auto& h : G2.elements) {
        CHECK(groups::pairing(groups::iso_I(G2, s), h) ==
              groups::pairing(s, groups::iso_I(G2, h)));
        if (s != h) CHECK(groups::iso_I(G2, s) != groups::iso_I(G2, h));
      }
  }

  // tilde inverts I up to the annihilator
  const ivec alphas[] = {{0, 0}, {1, 0}, {1, 1}, {2, 3}, {-1, 4}};
  for (const auto& a : alphas) {
    const auto t = groups::tilde_of(G, a);
    ivec diff(2);
    const auto ia = groups::iso_I(G, t);
    for (int i = 0; i < 2; ++i) diff[i] = a[i] - ia[i];
    CHECK(groups::in_dual_two_lambda(G, diff));
  }
}

TEST_CASE("pairing and coset invariance") {
  CHECK(groups::pairing({1, 1}, {1, 1}) == 1);
  CHECK(groups::pairing({0, 0}, {1, 1}) == 1);
  CHECK(groups::pairing({1, 0}, {1, 1}) == -1);
  CHECK(groups::pairing({2, 1}, {1, 1}) == -1);  // alpha shifted by (1,1) in 2Lambda^perp

  const auto G = groups::make_group(2, {{1, 1}});
  // invariance when alpha moves by 2Lambda^perp and sigma by 2Z^d
  for (int a1 = -2; a1 <= 2; ++a1)
    for (int a2 = -2; a2 <= 2; ++a2) {
      const ivec alpha = {a1, a2};
      const ivec shifted = {a1 + 1, a2 + 1};  // (1,1) lies in 2Lambda^perp here
      for (const auto& s : G.elements) {
        CHECK(groups::pairing(alpha, s) == groups::pairing(shifted, s));
        const ivec s2 = {s[0] + 2, s[1] - 2};
        CHECK(groups::pairing(alpha, s) == groups::pairing(alpha, s2));
      }
    }
}

TEST_CASE("fundamental domains") {
  const auto G1 = groups::make_group(1, {{1}});
  CHECK(groups::fundamental_domain(G1, 4) == std::vector<ivec>{{0}, {1}, {2}});
  CHECK_THROWS_AS(groups::fundamental_domain(G1, 3), BadModulus);

  const auto T = groups::make_group(1, {});
  CHECK(groups::fundamental_domain(T, 2) == std::vector<ivec>{{0}, {1}});

  const auto G2 = groups::make_group(2, {{1, 1}});
  CHECK(groups::fundamental_domain(G2, 2) ==
        std::vector<ivec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});

  SUBCASE("partition property") {
    for (int r : {2, 4, 8}) {
      const auto reps = groups::fundamental_domain(G2, r);
      std::vector<bool> seen(r * r, false);
      std::size_t covered = 0;
      for (const auto& rep : reps)
        for (const auto& img : groups::orbit_and_stabilizer(G2, rep, r).orbit) {
          CHECK_FALSE(seen[flatten(img, r)]);
          seen[flatten(img, r)] = true;
          ++covered;
        }
      CHECK(covered == seen.size());
    }
  }
}

TEST_CASE("character sums") {
  const auto G1 = groups::make_group(1, {{1}});
  CHECK(groups::char_sum(G1, {0}, {0}, {0}) == 2);   // |G| at the origin
  CHECK(groups::char_sum(G1, {0}, {1}, {0}) == 1);   // free orbit, singleton coset
  CHECK(groups::char_sum(G1, {1}, {0}, {0}) == 0);   // vacuous pair
  CHECK(groups::is_vacuous(G1, {1}, {0}));
  CHECK_FALSE(groups::is_vacuous(G1, {0}, {0}));
  CHECK_THROWS_AS(groups::char_sum(G1, {0}, {0}, {2}), NotAGroupElement);

  SUBCASE("always zero or +-|stabilizer|") {
    const auto G = groups::make_group(2, {{1, 0}, {0, 1}});
    for (int g1 = -3; g1 <= 3; ++g1)
      for (int g2 = -3; g2 <= 3; ++g2)
        for (const auto& h : G.elements)
          for (const auto& s0 : G.elements) {
            const ivec gamma = {g1, g2};
            const int v = groups::char_sum(G, h, gamma, s0);
            const int stab =
                static_cast<int>(groups::orbit_and_stabilizer(G, gamma).stabilizer.size());
            CHECK((v == 0 || v == stab || v == -stab));
          }
  }
  SUBCASE("grid vacuity count per residue equals the orbit size") {
    const auto G = groups::make_group(2, {{1, 1}});
    const int r = 4;
    for (const auto& gamma : groups::fundamental_domain(G, r)) {
      int survivors = 0;
      for (const auto& h : G.elements)
        if (!groups::is_vacuous(G, h, gamma, r)) ++survivors;
      const auto info = groups::orbit_and_stabilizer(G, gamma, r);
      CHECK(survivors == static_cast<int>(info.orbit.size()));
    }
  }
}
