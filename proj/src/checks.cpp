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

#include "wg/checks.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <random>

#include "wg/contin.hpp"
#include "wg/errors.hpp"
#include "wg/frames.hpp"
#include "wg/sympl.hpp"

namespace wg::checks {

namespace {

using grid::GridSignal;
using grid::GridSpec;
using groups::SeparableGroup;
using synth::SystemFamily;

GridSpec d1_spec() { return grid::make_grid(1, 4, 8); }
GridSpec d2_spec() { return grid::make_grid(2, 2, 4); }
SeparableGroup d1_group() { return groups::make_group(1, {{1}}); }
SeparableGroup d2_diag_group() { return groups::make_group(2, {{1, 1}}); }
SeparableGroup d2_full_group() { return groups::make_group(2, {{1, 0}, {0, 1}}); }

GridSpec spec_from_cfg(const config::Config& cfg) {
  const int d = cfg.has("dimension") ? cfg.get_int("dimension", 1) : cfg.get_int("d", 1);
  return grid::make_grid(d, cfg.get_int("P", 4), cfg.get_int("r", 8));
}

double gram_identity_dev(const SystemFamily& F) {
  const cvec G = frames::gram(F);
  const std::size_t m = F.size();
  double dev = 0.0;
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const cd target = (a == b) ? cd(1.0) : cd(0.0);
      dev = std::max(dev, std::abs(G[a * m + b] - target));
    }
  return dev;
}

GridSignal normalized(GridSignal f) {
  const double n = f.norm();
  if (n > 0) f *= cd(1.0 / n);
  return f;
}

GridSignal random_complex_signal(const GridSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  GridSignal f = grid::zeros(spec);
  for (cd& v : f.values) v = cd(dist(rng), dist(rng));
  return normalized(f);
}

/// Non-separable control window: the sharp indicator of the staircase region
/// sampled on the frequency grid (real transform, so the symmetry hypothesis
/// holds while separability fails).
GridSignal indicator_control_window(const GridSpec& spec) {
  GridSignal ghat = grid::zeros(spec);
  ivec kappa(spec.d, 0);
  std::size_t idx = 0;
  do {
    const double x = static_cast<double>(kappa[0]) / spec.P;
    const double y = static_cast<double>(kappa[1]) / spec.P;
    const bool in = x <= 4.0 && y <= 2.0 && y >= x - 2.0 && y <= x;
    ghat.values[idx] = in ? 0.5 : 0.0;
    ++idx;
  } while (next_index(kappa, spec.L));
  return grid::dft(ghat, true);
}

GridSignal separable_symmetric_window(const GridSpec& spec, std::uint64_t seed) {
  const GridSpec axis = grid::make_grid(1, spec.P, spec.r);
  std::vector<GridSignal> factors;
  for (int i = 0; i < spec.d; ++i)
    factors.push_back(grid::random_symmetric_window(axis, seed + i));
  return grid::tensor(factors);
}

struct NamedFamily {
  std::string name;
  SystemFamily family;
};

/// The families the frame-operator criteria run on; shared by the
/// autocorrelation-verdict and weak-identity checks.
std::vector<NamedFamily> standard_families() {
  std::vector<NamedFamily> fams;
  const GridSpec s1 = d1_spec();
  const SeparableGroup G1 = d1_group();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GridSignal g = grid::random_symmetric_window(s1, seed);
    fams.push_back({"gabor_d1_seed" + std::to_string(seed), synth::gabor_family(g, G1)});
    fams.push_back({"wilson_d1_seed" + std::to_string(seed), synth::wilson_family(g, G1)});
  }
  const GridSpec s2 = d2_spec();
  const SeparableGroup G2 = d2_full_group();
  const GridSignal gsep = separable_symmetric_window(s2, 11);
  fams.push_back({"gabor_d2_separable", synth::gabor_family(gsep, G2)});
  fams.push_back({"wilson_d2_separable", synth::wilson_family(gsep, G2)});
  const GridSignal gctl = indicator_control_window(s2);
  fams.push_back({"gabor_d2_control", synth::gabor_family(gctl, G2)});
  fams.push_back({"wilson_d2_control", synth::wilson_family(gctl, G2)});

  const GridSignal h1 = frames::canonical_tight(grid::random_symmetric_window(s1, 1), G1);
  fams.push_back({"gabor_d1_tight", synth::gabor_family(h1, G1)});
  fams.push_back({"wilson_d1_tight", synth::wilson_family(h1, G1)});
  const SeparableGroup Gd = d2_diag_group();
  const GridSignal h2 = frames::canonical_tight(grid::random_real_spectrum_window(s2, 2), Gd);
  fams.push_back({"gabor_d2_tight", synth::gabor_family(h2, Gd)});
  fams.push_back({"wilson_d2_tight", synth::wilson_family(h2, Gd)});

  GridSignal pert = h1;
  const GridSignal noise = grid::random_symmetric_window(s1, 2);
  for (std::size_t i = 0; i < pert.values.size(); ++i)
    pert.values[i] += 0.35 * noise.values[i];
  pert = normalized(pert);
  fams.push_back({"gabor_d1_perturbed", synth::gabor_family(pert, G1)});
  fams.push_back({"wilson_d1_perturbed", synth::wilson_family(pert, G1)});
  return fams;
}

// ---------------------------------------------------------------------------
// individual checks
// ---------------------------------------------------------------------------

std::vector<CheckRecord> check_frame_op_ratio_k1(const CheckContext& ctx) {
  const GridSpec spec = (ctx.cfg.has("d") || ctx.cfg.has("dimension"))
                            ? spec_from_cfg(ctx.cfg)
                            : d1_spec();
  if (spec.d != 1) throw ConfigError("frame_op_ratio_k1 needs a d = 1 grid");
  const SeparableGroup G = d1_group();
  const int windows = ctx.cfg.get_int("windows", 20);
  double worst = 0.0;
  for (int seed = 1; seed <= windows; ++seed) {
    const GridSignal g = grid::random_symmetric_window(spec, seed);
    worst = std::max(worst, frames::frame_operator_ratio_check(g, G));
  }
  CheckRecord rec;
  rec.check = "frame_op_ratio_k1";
  rec.parameters = {{"d", spec.d}, {"P", spec.P}, {"r", spec.r}, {"windows", windows}};
  rec.value = worst;
  rec.tolerance = ctx.tol("frame_op_ratio_k1", 1e-10);
  rec.pass = rec.value <= rec.tolerance;
  return {rec};
}

std::vector<CheckRecord> check_frame_op_ratio_k2(const CheckContext& ctx) {
  const GridSpec spec = d2_spec();
  const SeparableGroup G = d2_full_group();
  const GridSpec axis = grid::make_grid(1, spec.P, spec.r);
  const std::vector<GridSignal> factors = {grid::random_symmetric_window(axis, 11),
                                           grid::random_symmetric_window(axis, 12)};
  const GridSignal gsep = grid::tensor(factors);
  CheckRecord sep;
  sep.check = "frame_op_ratio_k2";
  sep.parameters = {{"d", 2}, {"P", spec.P}, {"r", spec.r}, {"window", "separable"}, {"factor", 4}};
  sep.value = frames::frame_operator_ratio_check(gsep, G, factors);
  sep.tolerance = ctx.tol("frame_op_ratio_k2", 1e-10);
  sep.pass = sep.value <= sep.tolerance;

  const double residual =
      frames::frame_operator_ratio_check(indicator_control_window(spec), G, {}, true);
  const double threshold = 1e-3;
  CheckRecord ctl;
  ctl.check = "frame_op_ratio_k2";
  ctl.parameters = {{"window", "nonseparable_control"},
                    {"control_residual", residual},
                    {"required_above", threshold}};
  ctl.value = std::max(0.0, threshold - residual);  // shortfall below the floor
  ctl.tolerance = 0.0;
  ctl.pass = ctl.value <= ctl.tolerance;
  return {sep, ctl};
}

CheckRecord wilson_onb_record(const std::string& name, const GridSpec& spec,
                              const SeparableGroup& G, const GridSignal& window,
                              double tol) {
  const GridSignal h = frames::canonical_tight(window, G);
  const SystemFamily GF = synth::gabor_family(h, G);
  const SystemFamily WF = synth::wilson_family(h, G);
  const auto tc = frames::verify_tight_via_autocorr(GF, static_cast<double>(G.order()), tol);
  const double gram_dev = gram_identity_dev(WF);
  CheckRecord rec;
  rec.check = name;
  rec.parameters = {{"d", spec.d},
                    {"P", spec.P},
                    {"r", spec.r},
                    {"k", G.k()},
                    {"tight_deviation", tc.max_deviation},
                    {"gram_deviation", gram_dev},
                    {"members", WF.size()},
                    {"dimension", spec.total()}};
  rec.value = std::max(tc.max_deviation, gram_dev);
  if (WF.size() != spec.total()) rec.value = 1e9;
  rec.tolerance = tol;
  rec.pass = rec.value <= rec.tolerance;
  return rec;
}

std::vector<CheckRecord> check_wilson_onb_k1(const CheckContext& ctx) {
  const auto seed = static_cast<std::uint64_t>(ctx.cfg.get_int("seed", 1));
  return {wilson_onb_record("wilson_onb_k1", d1_spec(), d1_group(),
                            grid::random_symmetric_window(d1_spec(), seed),
                            ctx.tol("wilson_onb_k1", 1e-9))};
}

std::vector<CheckRecord> check_wilson_onb_k2(const CheckContext& ctx) {
  // real-even windows have structural Zak zeros on the diagonal group in
  // d = 2; a random real-spectrum window satisfies the actual hypothesis
  const auto seed = static_cast<std::uint64_t>(ctx.cfg.get_int("seed", 2));
  return {wilson_onb_record("wilson_onb_k2", d2_spec(), d2_diag_group(),
                            grid::random_real_spectrum_window(d2_spec(), seed),
                            ctx.tol("wilson_onb_k2", 1e-9))};
}

std::vector<CheckRecord> check_duality_bounds(const CheckContext& ctx) {
  const GridSpec spec = d1_spec();
  const SeparableGroup G = d1_group();
  GridSignal g = frames::canonical_tight(grid::random_symmetric_window(spec, 1), G);
  const GridSignal noise = grid::random_symmetric_window(spec, 2);
  for (std::size_t i = 0; i < g.values.size(); ++i) g.values[i] += 0.35 * noise.values[i];
  g = normalized(g);

  const auto grep = frames::frame_bounds(synth::gabor_family(g, G));
  const auto wrep = frames::frame_bounds(synth::wilson_family(g, G));
  const double k2 = static_cast<double>(G.order());
  const double rel_lo = std::abs(wrep.riesz_lower - grep.lower / k2) / (grep.lower / k2);
  const double rel_hi = std::abs(wrep.riesz_upper - grep.upper / k2) / (grep.upper / k2);
  CheckRecord rec;
  rec.check = "duality_bounds";
  rec.parameters = {{"gabor_lower", grep.lower},
                    {"gabor_upper", grep.upper},
                    {"wilson_riesz_lower", wrep.riesz_lower},
                    {"wilson_riesz_upper", wrep.riesz_upper},
                    {"gabor_tight", grep.tight},
                    {"wilson_riesz_basis", wrep.riesz_basis}};
  rec.value = std::max(rel_lo, rel_hi);
  if (grep.tight || !wrep.riesz_basis) rec.value = 1e9;  // needs a non-tight frame
  rec.tolerance = ctx.tol("duality_bounds", 1e-8);
  rec.pass = rec.value <= rec.tolerance;
  return {rec};
}

std::vector<CheckRecord> check_autocorr_criterion(const CheckContext& ctx) {
  int mismatches = 0;
  std::size_t count = 0;
  for (const auto& nf : standard_families()) {
    const auto rep = frames::frame_bounds(nf.family);
    const auto tc = frames::verify_tight_via_autocorr(nf.family, rep.upper,
                                                      1e-9 * std::max(1.0, rep.upper));
    if (tc.pass != rep.tight) ++mismatches;
    ++count;
  }
  CheckRecord rec;
  rec.check = "autocorr_criterion";
  rec.parameters = {{"families", count}};
  rec.value = mismatches;
  rec.tolerance = 0.0;
  rec.pass = rec.value <= rec.tolerance;
  (void)ctx;
  return {rec};
}

std::vector<CheckRecord> check_weak_frame_identity(const CheckContext& ctx) {
  double worst = 0.0;
  std::size_t count = 0;
  for (const auto& nf : standard_families()) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const GridSignal f = random_complex_signal(nf.family.spec, 1000 + seed);
      worst = std::max(worst, frames::wf_identity_check(nf.family, f));
    }
    ++count;
  }
  CheckRecord rec;
  rec.check = "weak_frame_identity";
  rec.parameters = {{"families", count}, {"signals_per_family", 10}};
  rec.value = worst;
  rec.tolerance = ctx.tol("weak_frame_identity", 1e-10);
  rec.pass = rec.value <= rec.tolerance;
  return {rec};
}

std::vector<CheckRecord> check_example_windows(const CheckContext& ctx) {
  double worst = 0.0;
  nlohmann::ordered_json params;
  for (const std::string name : {"cos", "tent"}) {
    const auto w = contin::builtin_window(name);
    const auto pc = contin::partition_of_unity_check(w, 1.0, 10000);
    params[name] = {{"max_deviation", pc.max_deviation}, {"constant", pc.constant}};
    worst = std::max(worst, std::max(pc.max_deviation, std::abs(pc.constant - 1.0)));
  }
  CheckRecord rec;
  rec.check = "example_windows";
  rec.parameters = std::move(params);
  rec.value = worst;
  rec.tolerance = ctx.tol("example_windows", 1e-12);
  rec.pass = rec.value <= rec.tolerance;
  return {rec};
}

std::vector<CheckRecord> check_lattice_convention(const CheckContext& ctx) {
  double worst = 0.0;
  nlohmann::ordered_json params;
  for (const std::string name : {"cos", "tent"}) {
    const auto rep = contin::lattice_convention_report(contin::builtin_window(name));
    params[name] = {
        {"half_freq", {{"tight", rep.half_freq.tight},
                       {"bound", rep.half_freq.bound},
                       {"max_deviation", rep.half_freq.max_deviation}}},
        {"half_time", {{"tight", rep.half_time.tight},
                       {"bound", rep.half_time.bound},
                       {"max_deviation", rep.half_time.max_deviation}}},
        {"certified", rep.half_freq.tight ? "half_frequency_modulations"
                                          : (rep.half_time.tight ? "half_time_translations"
                                                                 : "neither")}};
    // the example windows certify the half-frequency lattice at bound 2
    worst = std::max(worst, rep.half_freq.max_deviation);
    worst = std::max(worst, std::abs(rep.half_freq.bound - 2.0));
    if (rep.half_time.tight) worst = std::max(worst, 1.0);
  }
  params["truncation"] = "exact finite time-side sums (tail 0)";
  CheckRecord rec;
  rec.check = "lattice_convention";
  rec.parameters = std::move(params);
  rec.value = worst;
  rec.tolerance = ctx.tol("lattice_convention", 1e-10);
  rec.pass = rec.value <= rec.tolerance;
  return {rec};
}

std::vector<CheckRecord> check_counterexample(const CheckContext& ctx) {
  const double tol = ctx.tol("counterexample_indicator", 1e-12);
  const auto rep = contin::counterexample_report(tol);
  CheckRecord rec;
  rec.check = "counterexample_indicator";
  rec.parameters = {{"points", rep.points},
                    {"wilson_value_dev", rep.wilson_value_dev},
                    {"gabor_t0_dev", rep.gabor_t0_dev},
                    {"gabor_other_dev", rep.gabor_other_dev}};
  rec.value = std::max({rep.wilson_value_dev, rep.gabor_t0_dev, rep.gabor_other_dev});
  rec.tolerance = tol;
  rec.pass = rec.value <= rec.tolerance;
  return {rec};
}

// brute-force duality/character suite over [-5,5]^d boxes
std::vector<CheckRecord> check_group_duality_suite(const CheckContext& ctx) {
  long long mismatches = 0;
  std::size_t groups_tested = 0;

  // canonical separable groups up to permutation: consecutive support blocks
  auto groups_for_dim = [](int d) {
    std::vector<std::vector<ivec>> shapes;  // list of block-size multisets
    if (d == 1) shapes = {{}, {{1}}};
    if (d == 2) shapes = {{}, {{1}}, {{2}}, {{1}, {1}}};
    if (d == 3)
      shapes = {{}, {{1}}, {{2}}, {{3}}, {{1}, {1}}, {{1}, {2}}, {{1}, {1}, {1}}};
    std::vector<SeparableGroup> out;
    for (const auto& shape : shapes) {
      std::vector<groups::ParityVector> gens;
      int pos = 0;
      for (const auto& block : shape) {
        groups::ParityVector g(d, 0);
        for (int i = 0; i < block[0]; ++i) g[pos + i] = 1;
        pos += block[0];
        gens.push_back(g);
      }
      out.push_back(groups::make_group(d, gens));
    }
    return out;
  };

  for (int d = 1; d <= 3; ++d) {
    for (const auto& G : groups_for_dim(d)) {
      ++groups_tested;
      const int box = 5;
      // duality: block-parity predicate == integral pairing with (1/2)Lambda
      ivec alpha(d, -box);
      while (true) {
        bool brute = true;
        for (const auto& sigma : G.elements) {
          ivec m(d, -box);
          while (true) {
            double dot = 0.0;
            for (int i = 0; i < d; ++i) dot += alpha[i] * (0.5 * sigma[i] + m[i]);
            if (std::abs(dot - std::round(dot)) > 1e-9) {
              brute = false;
              break;
            }
            int i = d - 1;
            for (; i >= 0; --i) {
              if (++m[i] <= box) break;
              m[i] = -box;
            }
            if (i < 0) break;
          }
          if (!brute) break;
        }
        if (brute != groups::in_dual_two_lambda(G, alpha)) ++mismatches;

        int i = d - 1;
        for (; i >= 0; --i) {
          if (++alpha[i] <= box) break;
          alpha[i] = -box;
        }
        if (i < 0) break;
      }

      // isomorphism I: pairing normalization, symmetry, injectivity
      for (int i = 0; i < G.k(); ++i)
        for (int j = 0; j < G.k(); ++j) {
          const int want = (i == j) ? -1 : 1;
          if (groups::pairing(groups::iso_I(G, G.generators[i]), G.generators[j]) != want)
            ++mismatches;
        }
      for (const auto& s : G.elements)
        for (const auto& h : G.elements) {
          if (groups::pairing(groups::iso_I(G, s), h) !=
              groups::pairing(s, groups::iso_I(G, h)))
            ++mismatches;
          if (s != h && groups::iso_I(G, s) == groups::iso_I(G, h)) ++mismatches;
        }

      // character sums: library value == explicit coset enumeration
      ivec gamma(d, -box);
      while (true) {
        const auto info = groups::orbit_and_stabilizer(G, gamma);
        if (static_cast<int>(info.orbit.size() * info.stabilizer.size()) != G.order())
          ++mismatches;
        for (const auto& h : G.elements) {
          const auto ih = groups::iso_I(G, h);
          ivec weight(d);
          for (int i = 0; i < d; ++i) weight[i] = ih[i] + gamma[i];
          for (const auto& sigma0 : G.elements) {
            int brute = 0;
            for (const auto& tau : info.stabilizer)
              brute += groups::pairing(weight, groups::parity_add(sigma0, tau));
            const int lib = groups::char_sum(G, h, gamma, sigma0);
            if (lib != brute) ++mismatches;
            const int sz = static_cast<int>(info.stabilizer.size());
            if (lib != 0 && lib != sz && lib != -sz) ++mismatches;
          }
        }
        int i = d - 1;
        for (; i >= 0; --i) {
          if (++gamma[i] <= box) break;
          gamma[i] = -box;
        }
        if (i < 0) break;
      }

      // fundamental domain partitions Z_r^d
      for (int r : {2, 4, 6}) {
        const auto reps = groups::fundamental_domain(G, r);
        std::size_t covered = 0;
        std::vector<bool> seen(static_cast<std::size_t>(ipow(r, d)), false);
        for (const auto& rep : reps)
          for (const auto& img : groups::orbit_and_stabilizer(G, rep, r).orbit) {
            const std::size_t f = flatten(img, r);
            if (seen[f]) ++mismatches;  // overlapping orbits
            seen[f] = true;
            ++covered;
          }
        if (covered != seen.size()) ++mismatches;
      }
    }
  }

  // the diagonal-group annihilator is the even-coordinate-sum sublattice
  {
    const auto G = groups::make_group(3, {{1, 1, 1}});
    ivec alpha(3, -5);
    while (true) {
      const bool even = (mod(alpha[0] + alpha[1] + alpha[2], 2) == 0);
      if (even != groups::in_dual_two_lambda(G, alpha)) ++mismatches;
      int i = 2;
      for (; i >= 0; --i) {
        if (++alpha[i] <= 5) break;
        alpha[i] = -5;
      }
      if (i < 0) break;
    }
  }

  CheckRecord rec;
  rec.check = "group_duality_suite";
  rec.parameters = {{"dims", "1..3"}, {"box", "[-5,5]^d"}, {"groups", groups_tested}};
  rec.value = static_cast<double>(mismatches);
  rec.tolerance = 0.0;
  rec.pass = mismatches == 0;
  (void)ctx;
  return {rec};
}

sympl::OperatorPlan random_plan(std::mt19937_64& rng, int d, int max_ops) {
  std::uniform_int_distribution<int> kind(0, 3), nops(1, max_ops);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  sympl::OperatorPlan plan;
  plan.d = d;
  const int n = nops(rng);
  for (int i = 0; i < n; ++i) {
    switch (kind(rng)) {
      case 0:
        plan.ops.push_back(sympl::PrimitiveOp::fourier());
        break;
      case 1:
        plan.ops.push_back(sympl::PrimitiveOp::inverse_fourier());
        break;
      case 2: {
        sympl::Mat C;
        double det = 0.0;
        do {
          C = sympl::Mat::NullaryExpr(d, d, [&]() { return u(rng); });
          det = C.determinant();
        } while (std::abs(det) < 0.2 || std::abs(det) > 5.0);
        plan.ops.push_back(sympl::PrimitiveOp::dilation(C));
        break;
      }
      default: {
        sympl::Mat M = sympl::Mat::NullaryExpr(d, d, [&]() { return u(rng); });
        M = ((M + M.transpose()) / 2).eval();
        plan.ops.push_back(sympl::PrimitiveOp::chirp(M));
        break;
      }
    }
  }
  return plan;
}

std::vector<CheckRecord> check_symplectic_roundtrip(const CheckContext& ctx) {
  std::mt19937_64 rng(97);
  double worst_member = 0.0, worst_round = 0.0;
  int produced = 0;
  int per_d[4] = {0, 67, 67, 66};
  for (int d = 1; d <= 3; ++d) {
    int done = 0;
    while (done < per_d[d]) {
      const auto plan = random_plan(rng, d, 4);
      const sympl::Mat A = sympl::recompose(plan);
      sympl::SymplecticResiduals res;
      if (!sympl::is_symplectic(A, 1e-10, &res)) continue;  // ill-conditioned draw
      sympl::OperatorPlan dec;
      try {
        dec = sympl::decompose(A);
      } catch (const Error&) {
        continue;
      }
      worst_member = std::max(
          {worst_member, res.defining, res.block_ktq, res.block_ltr, res.block_identity});
      const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
      worst_round =
          std::max(worst_round, (sympl::recompose(dec) - A).cwiseAbs().maxCoeff() / scale);
      ++done;
      ++produced;
    }
  }
  CheckRecord mem;
  mem.check = "symplectic_roundtrip";
  mem.claim_tag = "";
  mem.parameters = {{"matrices", produced}, {"part", "membership_and_block_criteria"}};
  mem.value = worst_member;
  mem.tolerance = ctx.tol("symplectic_membership", 1e-10);
  mem.pass = mem.value <= mem.tolerance;

  CheckRecord rt;
  rt.check = "symplectic_roundtrip";
  rt.parameters = {{"matrices", produced}, {"part", "decompose_recompose"}};
  rt.value = worst_round;
  rt.tolerance = ctx.tol("symplectic_roundtrip", 1e-9);
  rt.pass = rt.value <= rt.tolerance;
  return {mem, rt};
}

std::vector<CheckRecord> check_phase_reflection(const CheckContext& ctx) {
  std::mt19937_64 rng(131);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_int_distribution<int> dims(1, 3);
  double worst = 0.0;
  for (int p = 0; p < 100; ++p) {
    const int d = dims(rng);
    const auto plan = random_plan(rng, d, 4);
    for (int q = 0; q < 100; ++q) {
      sympl::Vec nu = sympl::Vec::NullaryExpr(2 * d, [&]() { return u(rng); });
      worst = std::max(worst,
                       std::abs(sympl::phase_factor(plan, nu) - sympl::phase_factor(plan, -nu)));
    }
  }
  CheckRecord rec;
  rec.check = "phase_reflection";
  rec.parameters = {{"pairs", 10000}};
  rec.value = worst;
  rec.tolerance = ctx.tol("phase_reflection", 1e-12);
  rec.pass = rec.value <= rec.tolerance;
  return {rec};
}

std::vector<CheckRecord> check_grid_intertwining(const CheckContext& ctx) {
  double worst = 0.0;
  std::size_t tested = 0;

  auto run_case = [&](const GridSpec& spec, const sympl::OperatorPlan& plan,
                      const GridSignal& f) {
    const sympl::Mat A = sympl::recompose(plan);
    const int d = spec.d;
    // candidate labels: half-integer positions, integer frequencies
    std::vector<double> lam_vals = {0.0, 0.5, 1.0, 1.5};
    std::vector<double> gam_vals = {0.0, 1.0, 2.0, 3.0};
    std::vector<sympl::Vec> nus;
    if (d == 1) {
      for (double l : lam_vals)
        for (double g : gam_vals) {
          sympl::Vec nu(2);
          nu << l, g;
          nus.push_back(nu);
        }
    } else {
      std::mt19937_64 rng(7);
      std::uniform_int_distribution<int> li(0, 3), gi(0, 3);
      for (int t = 0; t < 24; ++t) {
        sympl::Vec nu(2 * d);
        for (int i = 0; i < d; ++i) {
          nu(i) = lam_vals[li(rng)];
          nu(d + i) = gam_vals[gi(rng)];
        }
        nus.push_back(nu);
      }
    }
    const GridSignal pf = sympl::apply_plan(plan, f);
    for (const auto& nu : nus) {
      const sympl::Vec anu = A * nu;
      bool compatible = true;
      for (int i = 0; i < d; ++i) {
        const double lr = anu(i) * spec.r, gp = anu(d + i) * spec.P;
        if (std::abs(lr - std::round(lr)) > 1e-9 || std::abs(gp - std::round(gp)) > 1e-9)
          compatible = false;
      }
      if (!compatible) continue;
      std::vector<double> lam(d), gam(d), alam(d), agam(d);
      for (int i = 0; i < d; ++i) {
        lam[i] = nu(i);
        gam[i] = nu(d + i);
        alam[i] = anu(i);
        agam[i] = anu(d + i);
      }
      const GridSignal lhs = sympl::apply_plan(plan, grid::tf_shift(f, lam, gam));
      GridSignal rhs = grid::tf_shift(pf, alam, agam);
      rhs *= sympl::phase_factor(plan, nu);
      worst = std::max(worst, grid::max_dist(lhs, rhs));
      ++tested;
    }
  };

  {
    // square grid: every primitive is compatible, integer chirps included
    const GridSpec s = grid::make_grid(1, 4, 4);
    const GridSignal f = random_complex_signal(s, 5);
    sympl::Mat M1(1, 1), M2(1, 1), Mm2(1, 1), Cm1(1, 1);
    M1 << 1.0;
    M2 << 2.0;
    Mm2 << -2.0;
    Cm1 << -1.0;
    std::vector<sympl::OperatorPlan> plans = {
        {1, {sympl::PrimitiveOp::fourier()}},
        {1, {sympl::PrimitiveOp::inverse_fourier()}},
        {1, {sympl::PrimitiveOp::chirp(M1)}},
        {1, {sympl::PrimitiveOp::chirp(Mm2)}},
        {1, {sympl::PrimitiveOp::dilation(Cm1)}},
        {1, {sympl::PrimitiveOp::fourier(), sympl::PrimitiveOp::chirp(M1),
             sympl::PrimitiveOp::inverse_fourier()}},
        {1, {sympl::PrimitiveOp::chirp(M2), sympl::PrimitiveOp::fourier(),
             sympl::PrimitiveOp::chirp(Mm2)}},
        {1, {sympl::PrimitiveOp::dilation(Cm1), sympl::PrimitiveOp::fourier(),
             sympl::PrimitiveOp::chirp(M1)}},
    };
    for (const auto& p : plans) run_case(s, p, f);
  }
  {
    // rectangular grid: chirp/dilation chains stay exact; chirps need r | P M
    const GridSpec s = grid::make_grid(1, 4, 8);
    const GridSignal f = random_complex_signal(s, 6);
    sympl::Mat M2(1, 1), Mm2(1, 1), Cm1(1, 1);
    M2 << 2.0;
    Mm2 << -2.0;
    Cm1 << -1.0;
    std::vector<sympl::OperatorPlan> plans = {
        {1, {sympl::PrimitiveOp::chirp(M2)}},
        {1, {sympl::PrimitiveOp::dilation(Cm1)}},
        {1, {sympl::PrimitiveOp::chirp(Mm2), sympl::PrimitiveOp::dilation(Cm1),
             sympl::PrimitiveOp::chirp(M2)}},
    };
    for (const auto& p : plans) run_case(s, p, f);
  }
  {
    const GridSpec s = grid::make_grid(2, 2, 2);
    const GridSignal f = random_complex_signal(s, 7);
    sympl::Mat M = sympl::Mat::Zero(2, 2), Moff = sympl::Mat::Zero(2, 2);
    M << 1, 0, 0, -1;
    Moff << 0, 1, 1, 0;
    sympl::Mat shear(2, 2), swap(2, 2);
    shear << 1, 1, 0, 1;
    swap << 0, 1, 1, 0;
    std::vector<sympl::OperatorPlan> plans = {
        {2, {sympl::PrimitiveOp::fourier()}},
        {2, {sympl::PrimitiveOp::chirp(M)}},
        {2, {sympl::PrimitiveOp::chirp(Moff)}},
        {2, {sympl::PrimitiveOp::dilation(shear)}},
        {2, {sympl::PrimitiveOp::dilation(swap)}},
        {2, {sympl::PrimitiveOp::chirp(Moff), sympl::PrimitiveOp::fourier(),
             sympl::PrimitiveOp::dilation(shear)}},
    };
    for (const auto& p : plans) run_case(s, p, f);
  }

  CheckRecord rec;
  rec.check = "grid_intertwining";
  rec.parameters = {{"cases", tested}};
  rec.value = worst;
  rec.tolerance = ctx.tol("grid_intertwining", 1e-11);
  rec.pass = rec.value <= rec.tolerance;
  return {rec};
}

std::vector<CheckRecord> check_ks_wilson_onb(const CheckContext& ctx) {
  // the shear plan contains Fourier steps, so it runs on the square grid;
  // there every integer chirp parameter c is compatible
  const GridSpec spec = grid::make_grid(1, 4, 4);
  const SeparableGroup G = d1_group();
  const GridSignal h = frames::canonical_tight(grid::random_symmetric_window(spec, 3), G);
  double worst = 0.0;
  nlohmann::ordered_json params;
  for (double c : {0.0, 1.0, 2.0}) {
    const auto [A, plan] = sympl::ks_plan(0.5, c);
    const SystemFamily WS = sympl::symplectic_wilson_family(h, G, plan);
    const double dev = gram_identity_dev(WS);
    params["c=" + std::to_string(static_cast<int>(c))] = dev;
    worst = std::max(worst, dev);
  }
  CheckRecord rec;
  rec.check = "ks_wilson_onb";
  rec.parameters = std::move(params);
  rec.value = worst;
  rec.tolerance = ctx.tol("ks_wilson_onb", 1e-9);
  rec.pass = rec.value <= rec.tolerance;
  return {rec};
}

std::vector<CheckRecord> check_symplectic_wilson_transfer(const CheckContext& ctx) {
  const GridSpec spec = grid::make_grid(1, 4, 4);  // square (Fourier plan)
  const SeparableGroup G = d1_group();
  const GridSignal g = grid::random_symmetric_window(spec, 4);
  const SystemFamily W = synth::wilson_family(g, G);
  const cvec gw = frames::gram(W);

  // identity plan reproduces the Wilson family member by member
  sympl::OperatorPlan id;
  id.d = 1;
  const SystemFamily WI = sympl::symplectic_wilson_family(g, G, id);
  double id_dev = 0.0;
  for (std::size_t i = 0; i < W.size(); ++i)
    id_dev = std::max(id_dev, grid::max_dist(W.members[i], WI.members[i]));

  sympl::OperatorPlan fp;
  fp.d = 1;
  fp.ops = {sympl::PrimitiveOp::fourier()};
  const SystemFamily WS = sympl::symplectic_wilson_family(g, G, fp);
  const cvec gs = frames::gram(WS);
  double gram_dev = 0.0;
  for (std::size_t i = 0; i < gw.size(); ++i)
    gram_dev = std::max(gram_dev, std::abs(gw[i] - gs[i]));

  // phase-omission variant: phases along {0} x N are constant per gamma here,
  // so both variants must produce the same family
  const SystemFamily WS0 = sympl::symplectic_wilson_family(g, G, fp, false);
  const cvec gs0 = frames::gram(WS0);
  double variant_dev = 0.0;
  for (std::size_t i = 0; i < gs.size(); ++i)
    variant_dev = std::max(variant_dev, std::abs(gs0[i] - gs[i]));

  CheckRecord rec;
  rec.check = "symplectic_wilson_transfer";
  rec.parameters = {{"identity_plan_member_dev", id_dev},
                    {"fourier_plan_gram_dev", gram_dev},
                    {"phase_omission_gram_dev", variant_dev}};
  rec.value = std::max({id_dev, gram_dev});
  rec.tolerance = ctx.tol("symplectic_wilson_transfer", 1e-10);
  rec.pass = rec.value <= rec.tolerance;
  return {rec};
}

std::vector<CheckRecord> check_tensor_equivalence(const CheckContext& ctx) {
  const GridSpec spec = d2_spec();
  const GridSignal g = separable_symmetric_window(spec, 21);
  const SystemFamily T = synth::canonical_order(synth::tensor_wilson_family(g));
  const SystemFamily W = synth::canonical_order(synth::wilson_family(g, d2_full_group()));
  CheckRecord rec;
  rec.check = "tensor_equivalence";
  rec.tolerance = ctx.tol("tensor_equivalence", 1e-12);
  if (T.size() != W.size() || T.labels != W.labels) {
    rec.parameters = {{"error", "label sets differ"},
                      {"tensor_members", T.size()},
                      {"wilson_members", W.size()}};
    rec.value = 1e9;
    rec.pass = false;
    return {rec};
  }
  const cvec gt = frames::gram(T);
  const cvec gw = frames::gram(W);
  double dev = 0.0;
  for (std::size_t i = 0; i < gt.size(); ++i) dev = std::max(dev, std::abs(gt[i] - gw[i]));
  rec.parameters = {{"members", T.size()}};
  rec.value = dev;
  rec.pass = rec.value <= rec.tolerance;
  return {rec};
}

std::vector<CheckRecord> check_orthogonal_modulates(const CheckContext& ctx) {
  const GridSpec spec = d1_spec();
  const SeparableGroup G = d1_group();
  const GridSignal h = frames::canonical_tight(grid::random_symmetric_window(spec, 1), G);
  const SystemFamily F = synth::gabor_family(h, G);
  CheckRecord rec;
  rec.check = "orthogonal_modulates";
  rec.value = frames::orthogonal_modulates_check(h, F);
  rec.tolerance = ctx.tol("orthogonal_modulates", 1e-10);
  rec.pass = rec.value <= rec.tolerance;
  return {rec};
}

std::vector<CheckDef> build_registry() {
  std::vector<CheckDef> defs = {
      {"frame_op_ratio_k1", "gabor_wilson_frame_op_k1",
       "redundancy-2 Gabor and Wilson frame operators agree up to the factor 2 "
       "for windows with a real transform",
       check_frame_op_ratio_k1},
      {"frame_op_ratio_k2", "gabor_wilson_frame_op_k2",
       "redundancy-4 frame-operator identity with factor 4 for separable "
       "symmetric windows, with a non-separable control violating it",
       check_frame_op_ratio_k2},
      {"wilson_onb_k1", "wilson_onb_from_tight_gabor_k1",
       "the canonical tight window of a redundancy-2 Gabor system generates an "
       "orthonormal Wilson basis",
       check_wilson_onb_k1},
      {"wilson_onb_k2", "wilson_onb_from_tight_gabor_k2",
       "the bimodular Wilson construction on the diagonal subgroup yields an "
       "orthonormal basis in two dimensions",
       check_wilson_onb_k2},
      {"duality_bounds", "gabor_wilson_duality",
       "Gabor frame bounds (a, b) transfer to Wilson Riesz bounds (a/2^k, b/2^k)",
       check_duality_bounds},
      {"autocorr_criterion", "tight_si_autocorr",
       "the autocorrelation tightness criterion agrees with the eigenvalue "
       "verdict on every standard family",
       check_autocorr_criterion},
      {"weak_frame_identity", "weak_frame_identity",
       "analysis energy equals the autocorrelation quadratic form on random "
       "signals",
       check_weak_frame_identity},
      {"example_windows", "unit_partition_examples",
       "the cosine and tent windows partition unit-cell power with constant 1",
       check_example_windows},
      {"lattice_convention", "example_lattice_convention",
       "which modulation/translation lattice the example windows certify as "
       "tight (exact time-side test)",
       check_lattice_convention},
      {"counterexample_indicator", "nonseparable_counterexample",
       "the staircase indicator window generates a tight redundancy-4 Gabor "
       "frame whose tensor Wilson system is not orthonormal",
       check_counterexample},
      {"group_duality_suite", "separable_group_duality",
       "brute-force verification of the annihilator, the self-duality "
       "isomorphism and stabilizer character sums",
       check_group_duality_suite},
      {"symplectic_roundtrip", "symplectic_block_decomposition",
       "constructed symplectic matrices satisfy the block criteria and "
       "round-trip through the primitive decomposition",
       check_symplectic_roundtrip},
      {"phase_reflection", "phase_reflection_invariance",
       "the intertwining phase factor is invariant under reflection of the "
       "time-frequency label",
       check_phase_reflection},
      {"grid_intertwining", "grid_intertwining",
       "primitive chains intertwine grid time-frequency shifts with the "
       "symplectic action exactly",
       check_grid_intertwining},
      {"ks_wilson_onb", "shear_lattice_wilson_onb",
       "the symplectic Wilson system of the shear lattice built from a "
       "canonical tight window is orthonormal",
       check_ks_wilson_onb},
      {"symplectic_wilson_transfer", "symplectic_wilson_transfer",
       "symplectic transport preserves the Wilson Gram matrix; the identity "
       "plan reproduces the family",
       check_symplectic_wilson_transfer},
      {"tensor_equivalence", "tensor_wilson_equivalence",
       "the explicit tensor Wilson family matches the subgroup construction "
       "for the full two-dimensional group",
       check_tensor_equivalence},
      {"orthogonal_modulates", "tight_gabor_orthogonal_modulates",
       "dual-lattice modulates of a tight Gabor window form an orthogonal set",
       check_orthogonal_modulates},
  };
  for (auto& d : defs)
    if (d.claim_tag.empty()) d.claim_tag = d.name;
  return defs;
}

}  // namespace

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = build_registry();
  return defs;
}

const CheckDef* find_check(const std::string& name) {
  for (const auto& d : registry())
    if (d.name == name) return &d;
  return nullptr;
}

namespace {

nlohmann::ordered_json value_to_json(const config::Value& v) {
  switch (v.kind) {
    case config::Value::Kind::Number:
      return v.number;
    case config::Value::Kind::String:
      return v.text;
    case config::Value::Kind::Array: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& item : v.items) arr.push_back(value_to_json(item));
      return arr;
    }
  }
  return nullptr;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

}  // namespace

CampaignResult run_campaign(const config::Config& cfg) {
  const std::vector<std::string> names = cfg.get_string_list("checks");
  if (names.empty()) throw ConfigError("config must list at least one check");
  for (const auto& n : names)
    if (!find_check(n)) throw ConfigError("unknown check '" + n + "'");

  CheckContext ctx{cfg};
  auto records = nlohmann::ordered_json::array();
  int failed = 0, total = 0;
  for (const auto& n : names) {
    const CheckDef* def = find_check(n);
    for (CheckRecord& rec : def->fn(ctx)) {
      rec.claim_tag = def->claim_tag;
      records.push_back({{"check", rec.check},
                         {"claim_tag", rec.claim_tag},
                         {"parameters", rec.parameters},
                         {"value", rec.value},
                         {"tolerance", rec.tolerance},
                         {"pass", rec.pass}});
      ++total;
      if (!rec.pass) ++failed;
    }
  }

  nlohmann::ordered_json config_echo = nlohmann::ordered_json::object();
  for (const auto& key : cfg.keys()) config_echo[key] = value_to_json(cfg.at(key));

  CampaignResult result;
  result.report = {{"schema", 1},
                   {"tool", "wilsonlab"},
                   {"version", "1.0.0"},
                   {"timestamp", iso_timestamp()},
                   {"config", config_echo},
                   {"records", records},
                   {"summary",
                    {{"total", total}, {"passed", total - failed}, {"failed", failed}}}};
  result.exit_code = failed == 0 ? 0 : 1;

  const std::string out_dir = cfg.get_string("output", ".");
  std::filesystem::create_directories(out_dir);
  std::ofstream os(out_dir + "/report.json");
  os << result.report.dump(2) << '\n';
  return result;
}

}  // namespace wg::checks
