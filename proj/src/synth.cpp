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

#include "wg/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "wg/errors.hpp"

namespace wg::synth {

namespace {

std::string vec_str(const ivec& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string wilson_label(const ivec& gamma, const groups::ParityVector& h) {
  return "g" + vec_str(gamma) + "h" + vec_str(h);
}

/// All index offsets of the lattice (1/2)Lambda mod P, sorted lex.
std::vector<ivec> half_lambda_offsets(const GridSpec& spec,
                                      const groups::SeparableGroup& G) {
  std::vector<ivec> offs;
  for (const auto& sigma : G.elements) {
    ivec n(spec.d, 0);
    do {
      ivec t(spec.d);
      for (int i = 0; i < spec.d; ++i) t[i] = sigma[i] * spec.r / 2 + n[i] * spec.r;
      offs.push_back(t);
    } while (next_index(n, spec.P));
  }
  std::sort(offs.begin(), offs.end());
  return offs;
}

std::vector<ivec> integer_offsets(const GridSpec& spec) {
  std::vector<ivec> offs;
  ivec n(spec.d, 0);
  do {
    ivec t(spec.d);
    for (int i = 0; i < spec.d; ++i) t[i] = n[i] * spec.r;
    offs.push_back(t);
  } while (next_index(n, spec.P));
  return offs;
}

}  // namespace

SystemFamily expand(const GridSpec& spec, std::vector<GridSignal> generators,
                    std::vector<std::string> generator_labels,
                    std::vector<ivec> translations) {
  SystemFamily fam;
  fam.spec = spec;
  const std::size_t ng = generators.size(), nt = translations.size();
  fam.members.resize(ng * nt);
  fam.labels.reserve(ng * nt);
  for (std::size_t gi = 0; gi < ng; ++gi)
    for (std::size_t ti = 0; ti < nt; ++ti)
      fam.labels.push_back(generator_labels[gi] + "|t" + vec_str(translations[ti]));
  const std::int64_t total = static_cast<std::int64_t>(ng * nt);
  const bool par = kern::active_backend() == kern::Backend::OpenMP;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (std::int64_t m = 0; m < total; ++m) {
    const std::size_t gi = static_cast<std::size_t>(m) / nt;
    const std::size_t ti = static_cast<std::size_t>(m) % nt;
    fam.members[m] = grid::translate_idx(generators[gi], translations[ti]);
  }
  SiForm si;
  si.generators = std::move(generators);
  si.translations = std::move(translations);
  si.density = static_cast<double>(nt) / static_cast<double>(spec.cells());
  fam.si_form = std::move(si);
  return fam;
}

SystemFamily gabor_family(const GridSignal& g, const groups::SeparableGroup& G) {
  const GridSpec& spec = g.spec;
  if (G.d != spec.d) throw IncompatibleGrid("group dimension does not match grid");
  std::vector<GridSignal> gens;
  std::vector<std::string> labels;
  ivec gamma(spec.d, 0);
  do {
    gens.push_back(grid::modulate(g, gamma));
    labels.push_back("g" + vec_str(gamma));
  } while (next_index(gamma, spec.r));
  return expand(spec, std::move(gens), std::move(labels), half_lambda_offsets(spec, G));
}

GridSignal wilson_generator(const GridSignal& g, const groups::SeparableGroup& G,
                            const groups::ParityVector& h, const ivec& gamma) {
  const GridSpec& spec = g.spec;
  if (G.d != spec.d) throw IncompatibleGrid("group dimension does not match grid");
  if (!G.contains(h)) throw NotAGroupElement("h is not in the group");
  if (static_cast<int>(gamma.size()) != spec.d) throw DimensionMismatch("gamma");

  const auto info = groups::orbit_and_stabilizer(G, gamma, spec.r);
  const double c = std::sqrt(static_cast<double>(info.orbit.size())) / G.order();

  GridSignal acc = grid::zeros(spec);
  bool all_zero = true;
  for (const auto& rep : info.coset_reps) {
    // integer character sum over the coset; 0 or +-|G_gamma|
    const int coeff = groups::char_sum(G, h, gamma, rep, spec.r);
    if (coeff == 0) continue;
    all_zero = false;
    GridSignal term = grid::modulate(g, groups::reflect(rep, gamma));
    term *= cd(static_cast<double>(coeff));
    acc += term;
  }
  if (all_zero) return acc;  // vacuous (h, gamma)
  acc *= cd(c);
  ivec half(spec.d);
  for (int i = 0; i < spec.d; ++i) half[i] = h[i] * spec.r / 2;
  return grid::translate_idx(acc, half);
}

SystemFamily wilson_family(const GridSignal& g, const groups::SeparableGroup& G) {
  const GridSpec& spec = g.spec;
  if (G.d != spec.d) throw IncompatibleGrid("group dimension does not match grid");
  std::vector<GridSignal> gens;
  std::vector<std::string> labels;
  std::vector<groups::ParityVector> hs = G.elements;
  std::sort(hs.begin(), hs.end());
  for (const ivec& gamma : groups::fundamental_domain(G, spec.r)) {
    for (const auto& h : hs) {
      if (groups::is_vacuous(G, h, gamma, spec.r)) continue;
      gens.push_back(wilson_generator(g, G, h, gamma));
      labels.push_back(wilson_label(gamma, h));
    }
  }
  return expand(spec, std::move(gens), std::move(labels), integer_offsets(spec));
}

SystemFamily tensor_wilson_family(const GridSignal& g) {
  const GridSpec& spec = g.spec;
  if (spec.d != 2) throw WrongDimension("tensor Wilson family needs d = 2");
  const int r = spec.r;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // univariate branch list: (modes, half-cell offset in grid steps, h bit)
  struct Branch {
    std::vector<std::pair<int, double>> modes;  // (signed frequency, coefficient)
    int h = 0;                                  // offset = h * r/2 grid steps
  };
  std::vector<std::pair<int, Branch>> axis;  // keyed by the orbit label m
  axis.push_back({0, Branch{{{0, 1.0}}, 0}});
  for (int m = 1; m < r / 2; ++m) {
    const double s = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^m
    axis.push_back({m, Branch{{{m, inv_sqrt2}, {-m, s * inv_sqrt2}}, 0}});
    axis.push_back({m, Branch{{{m, inv_sqrt2}, {-m, -s * inv_sqrt2}}, 1}});
  }
  // half-Nyquist line: a single pure modulation survives, shifted by half a
  // cell when r/2 is odd
  axis.push_back({r / 2, Branch{{{r / 2, 1.0}}, (r / 2) % 2}});

  std::vector<GridSignal> gens;
  std::vector<std::string> labels;
  for (const auto& [m1, b1] : axis) {
    for (const auto& [m2, b2] : axis) {
      GridSignal acc = grid::zeros(spec);
      for (const auto& [f1, c1] : b1.modes)
        for (const auto& [f2, c2] : b2.modes) {
          GridSignal term = grid::modulate(g, {f1, f2});
          term *= cd(c1 * c2);
          acc += term;
        }
      acc = grid::translate_idx(acc, {b1.h * r / 2, b2.h * r / 2});
      gens.push_back(std::move(acc));
      labels.push_back(wilson_label({m1, m2}, {b1.h, b2.h}));
    }
  }
  return expand(spec, std::move(gens), std::move(labels), integer_offsets(spec));
}

SystemFamily canonical_order(const SystemFamily& fam) {
  SystemFamily out;
  out.spec = fam.spec;
  std::vector<std::size_t> order(fam.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return fam.labels[a] < fam.labels[b];
  });
  for (std::size_t i : order) {
    GridSignal f = fam.members[i];
    const double top = f.max_abs();
    for (const cd& v : f.values) {
      if (std::abs(v) > 1e-12 * top) {
        f *= std::conj(v) / std::abs(v);
        break;
      }
    }
    out.members.push_back(std::move(f));
    out.labels.push_back(fam.labels[i]);
  }
  return out;  // expanded form only; the si factorization is not reordered
}

}  // namespace wg::synth
