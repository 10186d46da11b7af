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

#include "wg/frames.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "wg/errors.hpp"
#include "wg/kernels.hpp"

namespace wg::frames {

namespace {

constexpr std::size_t kDenseDimCap = 4096;
constexpr std::size_t kMemberCap = 1 << 16;

std::vector<const cd*> member_ptrs(const SystemFamily& F) {
  std::vector<const cd*> p;
  p.reserve(F.size());
  for (const auto& m : F.members) p.push_back(m.values.data());
  return p;
}

double frobenius(const cvec& m) {
  double acc = 0.0;
  for (const cd& v : m) acc += std::norm(v);
  return std::sqrt(acc);
}

/// Residues alpha in [0,r)^d with <alpha, t> = 0 mod r for all offsets t.
std::vector<ivec> dual_residues(const GridSpec& spec, const std::vector<ivec>& translations) {
  std::vector<ivec> duals;
  ivec alpha(spec.d, 0);
  do {
    bool ok = true;
    for (const ivec& t : translations) {
      long long s = 0;
      for (int i = 0; i < spec.d; ++i) s += static_cast<long long>(alpha[i]) * t[i];
      if (s % spec.r != 0) {
        ok = false;
        break;
      }
    }
    if (ok) duals.push_back(alpha);
  } while (next_index(alpha, spec.r));
  return duals;
}

bool is_dual(const GridSpec& spec, const std::vector<ivec>& translations, const ivec& alpha) {
  for (const ivec& t : translations) {
    long long s = 0;
    for (int i = 0; i < spec.d; ++i) s += static_cast<long long>(mod(alpha[i], spec.r)) * t[i];
    if (s % spec.r != 0) return false;
  }
  return true;
}

cvec autocorr_value(const GridSpec& spec, const std::vector<cvec>& gen_hats,
                    double density, const ivec& alpha) {
  const std::size_t n = spec.total();
  cvec t(n, cd(0.0));
  ivec kappa(spec.d, 0), shifted(spec.d);
  std::size_t idx = 0;
  do {
    for (int i = 0; i < spec.d; ++i) shifted[i] = mod(kappa[i] - alpha[i] * spec.P, spec.L);
    const std::size_t sidx = flatten(shifted, spec.L);
    cd acc = 0.0;
    for (const cvec& gh : gen_hats) acc += gh[idx] * std::conj(gh[sidx]);
    t[idx] = density * acc;
    ++idx;
  } while (next_index(kappa, spec.L));
  return t;
}

}  // namespace

cvec gram(const SystemFamily& F) {
  const std::size_t n = F.spec.total();
  if (n > kDenseDimCap || F.size() > kMemberCap)
    throw TooLarge("dense Gram beyond the desk-scale cap");
  cvec out;
  kern::gram(member_ptrs(F), n, F.spec.weight(), out);
  return out;
}

cvec frame_operator(const SystemFamily& F) {
  const std::size_t n = F.spec.total();
  if (n > kDenseDimCap || F.size() > kMemberCap)
    throw TooLarge("dense frame operator beyond the desk-scale cap");
  cvec out;
  kern::frame_operator(member_ptrs(F), n, F.spec.weight(), out);
  return out;
}

std::vector<double> hermitian_eigenvalues(const cvec& matrix) {
  const std::size_t n = static_cast<std::size_t>(std::llround(std::sqrt(double(matrix.size()))));
  Eigen::MatrixXcd M(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) M(i, j) = matrix[i * n + j];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(M, Eigen::EigenvaluesOnly);
  std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  return ev;
}

FrameReport frame_bounds(const SystemFamily& F, double tolerance) {
  FrameReport rep;
  rep.tolerance = tolerance;
  rep.members = F.size();
  rep.dimension = F.spec.total();

  const std::vector<double> s_ev = hermitian_eigenvalues(frame_operator(F));
  const std::vector<double> g_ev = hermitian_eigenvalues(gram(F));
  const double top = std::max(g_ev.empty() ? 0.0 : g_ev.back(), 0.0);
  const double cut = top * 1e-10;
  rep.rank = 0;
  rep.riesz_lower = top;
  for (double ev : g_ev)
    if (ev > cut) {
      ++rep.rank;
      rep.riesz_lower = std::min(rep.riesz_lower, ev);
    }
  rep.riesz_upper = top;
  rep.upper = s_ev.back();
  rep.lower = s_ev.front();

  rep.bessel = true;
  rep.frame = rep.rank == rep.dimension && rep.lower > tolerance * rep.upper;
  rep.tight = rep.frame && (rep.upper - rep.lower) <= tolerance * rep.upper;
  rep.parseval = rep.tight && std::abs(rep.upper - 1.0) <= tolerance;
  rep.riesz_basis = rep.rank == rep.members && rep.members == rep.dimension;
  rep.onb = rep.parseval && rep.members == rep.dimension;
  return rep;
}

const cvec& AutocorrTable::at(const ivec& alpha) const {
  ivec red(alpha.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) red[i] = mod(alpha[i], spec.r);
  for (std::size_t a = 0; a < alphas.size(); ++a)
    if (alphas[a] == red) return values[a];
  throw AlphaNotInDual("alpha is not in the table");
}

AutocorrTable autocorr_table(const SystemFamily& F) {
  if (!F.si_form) throw NotShiftInvariant("family carries no shift-invariant form");
  const auto& si = *F.si_form;
  AutocorrTable table;
  table.spec = F.spec;
  table.density = si.density;
  table.alphas = dual_residues(F.spec, si.translations);
  std::vector<cvec> gen_hats;
  gen_hats.reserve(si.generators.size());
  for (const auto& g : si.generators) gen_hats.push_back(grid::dft(g).values);
  table.values.resize(table.alphas.size());
  const std::int64_t na = static_cast<std::int64_t>(table.alphas.size());
  const bool par = kern::active_backend() == kern::Backend::OpenMP;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (std::int64_t a = 0; a < na; ++a)
    table.values[a] = autocorr_value(F.spec, gen_hats, si.density, table.alphas[a]);
  return table;
}

cvec autocorrelation(const SystemFamily& F, const ivec& alpha) {
  if (!F.si_form) throw NotShiftInvariant("family carries no shift-invariant form");
  const auto& si = *F.si_form;
  if (static_cast<int>(alpha.size()) != F.spec.d) throw DimensionMismatch("alpha");
  if (!is_dual(F.spec, si.translations, alpha))
    throw AlphaNotInDual("alpha does not annihilate the translation lattice");
  std::vector<cvec> gen_hats;
  for (const auto& g : si.generators) gen_hats.push_back(grid::dft(g).values);
  return autocorr_value(F.spec, gen_hats, si.density, alpha);
}

TightnessCheck verify_tight_via_autocorr(const SystemFamily& F, double a, double tol) {
  const AutocorrTable table = autocorr_table(F);
  const ivec zero(F.spec.d, 0);
  TightnessCheck check;
  for (std::size_t i = 0; i < table.alphas.size(); ++i) {
    const cd target = (table.alphas[i] == zero) ? cd(a) : cd(0.0);
    for (const cd& v : table.values[i])
      check.max_deviation = std::max(check.max_deviation, std::abs(v - target));
  }
  check.pass = check.max_deviation <= tol;
  return check;
}

double wf_identity_check(const SystemFamily& F, const GridSignal& f) {
  if (!F.si_form) throw NotShiftInvariant("family carries no shift-invariant form");
  double lhs = 0.0;
  for (const auto& m : F.members) lhs += std::norm(GridSignal::dot(f, m));

  const AutocorrTable table = autocorr_table(F);
  const GridSignal fhat = grid::dft(f);
  const GridSpec& spec = F.spec;
  const double fw = 1.0 / static_cast<double>(spec.cells());  // frequency-side weight
  cd rhs = 0.0;
  for (std::size_t a = 0; a < table.alphas.size(); ++a) {
    const ivec& alpha = table.alphas[a];
    cd acc = 0.0;
    ivec kappa(spec.d, 0);
    std::size_t idx = 0;
    do {
      ivec shifted(spec.d);
      for (int i = 0; i < spec.d; ++i) shifted[i] = mod(kappa[i] - alpha[i] * spec.P, spec.L);
      acc += table.values[a][idx] * fhat.values[flatten(shifted, spec.L)] *
             std::conj(fhat.values[idx]);
      ++idx;
    } while (next_index(kappa, spec.L));
    rhs += fw * acc;
  }
  return std::abs(lhs - rhs);
}

double frame_operator_ratio_check(const GridSignal& g_in, const groups::SeparableGroup& G,
                                  const std::optional<std::vector<GridSignal>>& factors,
                                  bool allow_nonseparable) {
  GridSignal g = g_in;
  if (G.k() >= 2 && !factors && !allow_nonseparable)
    throw SeparabilityRequired(
        "k >= 2 needs an explicit separable factorization of the window");
  if (factors) {
    // assemble g from the per-block factors (full per-axis split expected)
    g = grid::tensor(*factors);
    if (!(g.spec == g_in.spec)) throw IncompatibleGrid("factor grid mismatch");
  }
  const GridSignal ghat = grid::dft(g);
  double max_im = 0.0;
  for (const cd& v : ghat.values) max_im = std::max(max_im, std::abs(v.imag()));
  if (max_im > 1e-10)
    throw SymmetryViolated("max |Im ghat| = " + std::to_string(max_im));

  const cvec sg = frame_operator(synth::gabor_family(g, G));
  const cvec sw = frame_operator(synth::wilson_family(g, G));
  const double factor = static_cast<double>(G.order());
  cvec diff(sg.size());
  for (std::size_t i = 0; i < sg.size(); ++i) diff[i] = sg[i] - factor * sw[i];
  return frobenius(diff) / frobenius(sg);
}

GridSignal canonical_tight(const GridSignal& g, const groups::SeparableGroup& G,
                           double eps) {
  const GridSpec& spec = g.spec;
  if (G.d != spec.d) throw IncompatibleGrid("group dimension does not match grid");
  const grid::ZakArray zg = grid::zak(g);
  const std::size_t nj = spec.residues(), nk = spec.cells();

  // fiber weight sum_sigma |Zg(j - sigma r/2, k)|^2; the half-cell shifts act
  // mod r on the j index and leave moduli unchanged
  std::vector<double> w(nj * nk, 0.0);
  ivec j(spec.d, 0);
  std::size_t jf = 0;
  do {
    for (const auto& sigma : G.elements) {
      ivec js(spec.d);
      for (int i = 0; i < spec.d; ++i) js[i] = mod(j[i] - sigma[i] * spec.r / 2, spec.r);
      const std::size_t sf = flatten(js, spec.r);
      for (std::size_t kf = 0; kf < nk; ++kf)
        w[jf * nk + kf] += std::norm(zg.values[sf * nk + kf]);
    }
    ++jf;
  } while (next_index(j, spec.r));

  std::ostringstream bad;
  int bad_count = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] < eps) {
      if (bad_count < 8) bad << (bad_count ? ", " : "") << "(j=" << i / nk << ",k=" << i % nk << ")";
      ++bad_count;
    }
  if (bad_count > 0)
    throw DegenerateFibers("fiber weight below eps at " + std::to_string(bad_count) +
                           " points: " + bad.str());

  grid::ZakArray zh = zg;
  const double bound = static_cast<double>(G.order());
  for (std::size_t i = 0; i < w.size(); ++i) zh.values[i] *= std::sqrt(bound / w[i]);
  return grid::inverse_zak(zh);
}

double orthogonal_modulates_check(const GridSignal& g, const SystemFamily& F) {
  if (!F.si_form) throw NotShiftInvariant("family carries no shift-invariant form");
  const FrameReport rep = frame_bounds(F);
  if (!rep.tight) throw NotTight("orthogonality of modulates needs a tight family");
  const GridSpec& spec = F.spec;
  double worst = 0.0;
  const ivec zero(spec.d, 0);
  for (const ivec& beta : dual_residues(spec, F.si_form->translations)) {
    if (beta == zero) continue;
    worst = std::max(worst, std::abs(GridSignal::dot(grid::modulate(g, beta), g)));
  }
  return worst;
}

}  // namespace wg::frames
