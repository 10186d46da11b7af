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
#include <string>
#include <vector>

#include "wg/grid.hpp"
#include "wg/groups.hpp"

// Construction of Gabor and Wilson system families on the finite model.
// A family is stored in expanded form together with its shift-invariant
// factorization (generators + translation offsets), which drives the
// autocorrelation machinery.

namespace wg::synth {

using grid::GridSignal;
using grid::GridSpec;

struct SiForm {
  std::vector<GridSignal> generators;  // ordered generator list
  std::vector<ivec> translations;      // index shifts in Z_L^d (grid steps)
  double density = 1.0;                // |translations| / P^d
};

struct SystemFamily {
  GridSpec spec;
  std::vector<GridSignal> members;
  std::vector<std::string> labels;
  std::optional<SiForm> si_form;

  std::size_t size() const { return members.size(); }
};

/// Expands generators over translations; members ordered generator-major.
SystemFamily expand(const GridSpec& spec, std::vector<GridSignal> generators,
                    std::vector<std::string> generator_labels,
                    std::vector<ivec> translations);

/// G(g, G) = {T_lambda M_gamma g}, lambda in (1/2)Lambda mod P, gamma in
/// Z_r^d; cardinality 2^k L^d.
SystemFamily gabor_family(const GridSignal& g, const groups::SeparableGroup& G);

/// psi_{h,gamma} = T_{h/2} c_gamma sum_sigma (-1)^{<I(h)+gamma,sigma>}
/// M_{R_sigma gamma} g with c_gamma = 2^{-k} |orbit(gamma)|^{1/2}; the zero
/// signal when (h, gamma) is vacuous.
GridSignal wilson_generator(const GridSignal& g, const groups::SeparableGroup& G,
                            const groups::ParityVector& h, const ivec& gamma);

/// W(g, G) = {T_lambda psi_{h,gamma}}, lambda in Z_P^d, non-vacuous (h,gamma),
/// gamma over the orbit fundamental domain of Z_r^d; exactly L^d members.
SystemFamily wilson_family(const GridSignal& g, const groups::SeparableGroup& G);

/// d=2 tensor Wilson family: tensor product of the two univariate Wilson
/// branch lists, written out with hard-coded sign patterns (independent of
/// the character-sum route).
SystemFamily tensor_wilson_family(const GridSignal& g);

/// Phase-normalizes members (first significant entry positive real) and
/// orders them by label; used before Gram set-comparisons.
SystemFamily canonical_order(const SystemFamily& fam);

}  // namespace wg::synth
