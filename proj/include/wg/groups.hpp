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

#include "wg/multiindex.hpp"

// Combinatorics of separable subgroups G of Z^d/(2Z^d): reflections R_sigma,
// orbits and stabilizers of integer frequencies, the lattice
// Lambda = union of (sigma + 2Z^d), its scaled dual 2Lambda^perp, the
// self-duality isomorphism I, and the character sums that decide which
// Wilson generators are vacuous.

namespace wg::groups {

/// Coset representative of Z^d/(2Z^d): every entry 0 or 1.
using ParityVector = ivec;

ParityVector parity_add(const ParityVector& a, const ParityVector& b);

struct SeparableGroup {
  int d = 1;
  std::vector<ParityVector> generators;    // sigma^1..sigma^k, disjoint supports
  std::vector<std::vector<int>> blocks;    // supports S_1..S_k (0-based indices)
  std::vector<int> anchors;                // n_i = min S_i
  std::vector<ParityVector> elements;      // all 2^k elements, index = subset mask

  int k() const { return static_cast<int>(generators.size()); }
  int order() const { return 1 << k(); }
  /// S_0 = [d] minus the union of the supports.
  std::vector<int> remainder() const;
  /// Index of an element in `elements`; throws NotAGroupElement.
  int element_index(const ParityVector& sigma) const;
  bool contains(const ParityVector& sigma) const;
};

/// Validates disjoint supports and nonzero generators.
SeparableGroup make_group(int d, const std::vector<ParityVector>& generators);

/// ((-1)^{sigma_1} x_1, ..., (-1)^{sigma_d} x_d); reduced mod r if given.
ivec reflect(const ParityVector& sigma, const ivec& x, std::optional<int> modulus = {});
std::vector<double> reflect_real(const ParityVector& sigma, const std::vector<double>& x);

struct OrbitInfo {
  std::vector<ivec> orbit;                // distinct images of gamma
  std::vector<ParityVector> stabilizer;   // subgroup fixing gamma
  std::vector<ParityVector> coset_reps;   // representatives of G / G_gamma
};

OrbitInfo orbit_and_stabilizer(const SeparableGroup& G, const ivec& gamma,
                               std::optional<int> modulus = {});

/// alpha in 2Lambda^perp: every block coordinate sum is even.
bool in_dual_two_lambda(const SeparableGroup& G, const ivec& alpha);

/// alpha in Lambda = union of (sigma + 2Z^d).
bool in_lambda(const SeparableGroup& G, const ivec& alpha);

/// I(sigma^i) = delta_{n_i}, extended as a homomorphism; returns the
/// {0,1}-representative of the coset in Z^d/(2Lambda^perp).
ParityVector iso_I(const SeparableGroup& G, const ParityVector& sigma);

/// The unique tilde in G with I(tilde) = alpha + 2Lambda^perp.
ParityVector tilde_of(const SeparableGroup& G, const ivec& alpha);

/// (-1)^{<alpha, sigma>}.
int pairing(const ivec& alpha, const ivec& sigma);

/// One lexicographically-smallest representative per orbit of Z_r^d.
std::vector<ivec> fundamental_domain(const SeparableGroup& G, int r);

/// sum over sigma in (sigma0 + G_gamma) of (-1)^{<I(h)+gamma, sigma>};
/// always 0 or +-|G_gamma|.
int char_sum(const SeparableGroup& G, const ParityVector& h, const ivec& gamma,
             const ParityVector& sigma0, std::optional<int> modulus = {});

/// True when the character sigma -> (-1)^{<I(h)+gamma, sigma>} is nontrivial
/// on the stabilizer of gamma, i.e. when the Wilson generator (h, gamma)
/// collapses to zero.
bool is_vacuous(const SeparableGroup& G, const ParityVector& h, const ivec& gamma,
                std::optional<int> modulus = {});

}  // namespace wg::groups
