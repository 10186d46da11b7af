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

#include "wg/groups.hpp"

#include <algorithm>

#include "wg/errors.hpp"

namespace wg::groups {

ParityVector parity_add(const ParityVector& a, const ParityVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("parity_add");
  ParityVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = (a[i] + b[i]) & 1;
  return c;
}

std::vector<int> SeparableGroup::remainder() const {
  std::vector<bool> used(d, false);
  for (const auto& s : blocks)
    for (int i : s) used[i] = true;
  std::vector<int> rem;
  for (int i = 0; i < d; ++i)
    if (!used[i]) rem.push_back(i);
  return rem;
}

int SeparableGroup::element_index(const ParityVector& sigma) const {
  if (static_cast<int>(sigma.size()) != d) throw DimensionMismatch("element_index");
  for (int m = 0; m < order(); ++m)
    if (elements[m] == sigma) return m;
  throw NotAGroupElement("vector is not an element of the group");
}

bool SeparableGroup::contains(const ParityVector& sigma) const {
  if (static_cast<int>(sigma.size()) != d) return false;
  for (int m = 0; m < order(); ++m)
    if (elements[m] == sigma) return true;
  return false;
}

SeparableGroup make_group(int d, const std::vector<ParityVector>& generators) {
  if (d < 1) throw BadParameters("dimension must be >= 1");
  if (static_cast<int>(generators.size()) > d)
    throw OverlappingSupports("more generators than coordinates");
  SeparableGroup G;
  G.d = d;
  std::vector<bool> used(d, false);
  for (const auto& gen : generators) {
    if (static_cast<int>(gen.size()) != d) throw DimensionMismatch("generator dimension");
    std::vector<int> supp;
    for (int i = 0; i < d; ++i) {
      if (gen[i] != 0 && gen[i] != 1) throw BadParameters("generator entries must be 0/1");
      if (gen[i]) {
        if (used[i])
          throw OverlappingSupports("generators share support index " + std::to_string(i));
        used[i] = true;
        supp.push_back(i);
      }
    }
    if (supp.empty()) throw ZeroGenerator("zero generator");
    G.generators.push_back(gen);
    G.blocks.push_back(supp);
    G.anchors.push_back(supp.front());
  }
  const int k = G.k();
  G.elements.resize(1 << k, ParityVector(d, 0));
  for (int m = 0; m < (1 << k); ++m)
    for (int i = 0; i < k; ++i)
      if (m & (1 << i)) G.elements[m] = parity_add(G.elements[m], G.generators[i]);
  return G;
}

ivec reflect(const ParityVector& sigma, const ivec& x, std::optional<int> modulus) {
  if (sigma.size() != x.size()) throw DimensionMismatch("reflect");
  ivec y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = (sigma[i] & 1) ? -x[i] : x[i];
    if (modulus) y[i] = mod(y[i], *modulus);
  }
  return y;
}

std::vector<double> reflect_real(const ParityVector& sigma, const std::vector<double>& x) {
  if (sigma.size() != x.size()) throw DimensionMismatch("reflect_real");
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = (sigma[i] & 1) ? -x[i] : x[i];
  return y;
}

OrbitInfo orbit_and_stabilizer(const SeparableGroup& G, const ivec& gamma,
                               std::optional<int> modulus) {
  if (static_cast<int>(gamma.size()) != G.d) throw DimensionMismatch("orbit gamma");
  if (modulus && (*modulus < 2 || *modulus % 2 != 0))
    throw BadModulus("modulus must be even and >= 2");
  OrbitInfo info;
  const ivec base = modulus ? reflect(ParityVector(G.d, 0), gamma, modulus) : gamma;
  for (int m = 0; m < G.order(); ++m) {
    ivec img = reflect(G.elements[m], gamma, modulus);
    if (img == base) info.stabilizer.push_back(G.elements[m]);
    // orbits hold at most 2^k points, a linear scan beats set machinery
    bool fresh = true;
    for (const ivec& o : info.orbit)
      if (o == img) {
        fresh = false;
        break;
      }
    if (fresh) {
      info.orbit.push_back(std::move(img));
      info.coset_reps.push_back(G.elements[m]);
    }
  }
  return info;
}

bool in_dual_two_lambda(const SeparableGroup& G, const ivec& alpha) {
  if (static_cast<int>(alpha.size()) != G.d) throw DimensionMismatch("in_dual_two_lambda");
  for (const auto& block : G.blocks) {
    int s = 0;
    for (int i : block) s += alpha[i];
    if (mod(s, 2) != 0) return false;
  }
  return true;
}

bool in_lambda(const SeparableGroup& G, const ivec& alpha) {
  if (static_cast<int>(alpha.size()) != G.d) throw DimensionMismatch("in_lambda");
  ParityVector p(G.d);
  for (int i = 0; i < G.d; ++i) p[i] = mod(alpha[i], 2);
  return G.contains(p);
}

ParityVector iso_I(const SeparableGroup& G, const ParityVector& sigma) {
  const int m = G.element_index(sigma);
  ParityVector out(G.d, 0);
  for (int i = 0; i < G.k(); ++i)
    if (m & (1 << i)) out[G.anchors[i]] ^= 1;
  return out;
}

ParityVector tilde_of(const SeparableGroup& G, const ivec& alpha) {
  if (static_cast<int>(alpha.size()) != G.d) throw DimensionMismatch("tilde_of");
  // block parity of alpha picks the generator multiplicities
  ParityVector t(G.d, 0);
  for (int i = 0; i < G.k(); ++i) {
    int s = 0;
    for (int idx : G.blocks[i]) s += alpha[idx];
    if (mod(s, 2)) t = parity_add(t, G.generators[i]);
  }
  return t;
}

int pairing(const ivec& alpha, const ivec& sigma) {
  if (alpha.size() != sigma.size()) throw DimensionMismatch("pairing");
  long long s = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    s += static_cast<long long>(alpha[i]) * sigma[i];
  return (s % 2 == 0) ? 1 : -1;
}

std::vector<ivec> fundamental_domain(const SeparableGroup& G, int r) {
  if (r < 2 || r % 2 != 0) throw BadModulus("modulus must be even and >= 2");
  std::vector<ivec> reps;
  std::vector<bool> visited(static_cast<std::size_t>(ipow(r, G.d)), false);
  ivec gamma(G.d, 0);
  std::size_t idx = 0;
  do {
    if (!visited[idx]) {
      reps.push_back(gamma);  // row-major scan makes this the lex-smallest member
      for (int m = 0; m < G.order(); ++m) {
        ivec img = reflect(G.elements[m], gamma, r);
        visited[flatten(img, r)] = true;
      }
    }
    ++idx;
  } while (next_index(gamma, r));
  return reps;
}

int char_sum(const SeparableGroup& G, const ParityVector& h, const ivec& gamma,
             const ParityVector& sigma0, std::optional<int> modulus) {
  if (!G.contains(h)) throw NotAGroupElement("h is not in the group");
  if (!G.contains(sigma0)) throw NotAGroupElement("sigma0 is not in the group");
  const ParityVector ih = iso_I(G, h);
  ivec weight(G.d);
  for (int i = 0; i < G.d; ++i) weight[i] = ih[i] + gamma[i];
  const OrbitInfo info = orbit_and_stabilizer(G, gamma, modulus);
  int acc = 0;
  for (const auto& tau : info.stabilizer)
    acc += pairing(weight, parity_add(sigma0, tau));
  return acc;
}

bool is_vacuous(const SeparableGroup& G, const ParityVector& h, const ivec& gamma,
                std::optional<int> modulus) {
  return char_sum(G, h, gamma, ParityVector(G.d, 0), modulus) == 0;
}

}  // namespace wg::groups
