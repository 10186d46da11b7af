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

#include "wg/sympl.hpp"


#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "wg/errors.hpp"

namespace wg::sympl {

namespace {

constexpr double kTau = 6.283185307179586476925286766559;
constexpr double kCondCap = 1e8;

Mat J_matrix(int d) {
  Mat J = Mat::Zero(2 * d, 2 * d);
  J.topRightCorner(d, d) = Mat::Identity(d, d);
  J.bottomLeftCorner(d, d) = -Mat::Identity(d, d);
  return J;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

double cond_number(const Mat& m) {
  Eigen::JacobiSVD<Mat> svd(m);
  const double smin = svd.singularValues().minCoeff();
  const double smax = svd.singularValues().maxCoeff();
  if (smin <= 0.0) return std::numeric_limits<double>::infinity();
  return smax / smin;
}

bool near_identity(const Mat& m) {
  return max_abs(m - Mat::Identity(m.rows(), m.cols())) <= 1e-12;
}

bool near_zero(const Mat& m) { return max_abs(m) <= 1e-12; }

}  // namespace

Mat associated_matrix(const PrimitiveOp& op, int d) {
  Mat A = Mat::Zero(2 * d, 2 * d);
  switch (op.kind) {
    case PrimitiveOp::Kind::Fourier:
      return J_matrix(d);
    case PrimitiveOp::Kind::InverseFourier:
      return -J_matrix(d);
    case PrimitiveOp::Kind::Dilation:
      A.topLeftCorner(d, d) = op.param.inverse();
      A.bottomRightCorner(d, d) = op.param.transpose();
      return A;
    case PrimitiveOp::Kind::Chirp:
      A.topLeftCorner(d, d) = Mat::Identity(d, d);
      A.bottomRightCorner(d, d) = Mat::Identity(d, d);
      A.bottomLeftCorner(d, d) = op.param;
      return A;
  }
  throw Error("unreachable");
}

bool is_symplectic(const Mat& A, double tol, SymplecticResiduals* residuals) {
  if (A.rows() != A.cols() || A.rows() % 2 != 0 || A.rows() == 0)
    throw OddDimension("matrix must be square of even dimension");
  const int d = static_cast<int>(A.rows()) / 2;
  const Mat J = J_matrix(d);
  const Mat K = A.topLeftCorner(d, d), L = A.topRightCorner(d, d);
  const Mat Q = A.bottomLeftCorner(d, d), R = A.bottomRightCorner(d, d);
  SymplecticResiduals res;
  res.defining = max_abs(A.transpose() * J * A - J);
  const Mat ktq = K.transpose() * Q, ltr = L.transpose() * R;
  res.block_ktq = max_abs(ktq - ktq.transpose());
  res.block_ltr = max_abs(ltr - ltr.transpose());
  res.block_identity = max_abs(K.transpose() * R - Q.transpose() * L - Mat::Identity(d, d));
  if (residuals) *residuals = res;
  return res.defining <= tol;
}

OperatorPlan decompose(const Mat& A) {
  if (!is_symplectic(A))
    throw BadParameters("decompose needs a symplectic matrix");
  const int d = static_cast<int>(A.rows()) / 2;
  const Mat K = A.topLeftCorner(d, d), L = A.topRightCorner(d, d);
  const Mat Q = A.bottomLeftCorner(d, d), R = A.bottomRightCorner(d, d);
  OperatorPlan plan;
  plan.d = d;
  using Op = PrimitiveOp;
  // block preference L, K, R, Q: the L case has the shortest chain
  if (cond_number(L) <= kCondCap) {
    const Mat Li = L.inverse();
    plan.ops = {Op::chirp(R * Li), Op::dilation(Li), Op::fourier(), Op::chirp(Li * K)};
  } else if (cond_number(K) <= kCondCap) {
    const Mat Ki = K.inverse();
    plan.ops = {Op::chirp(Q * Ki), Op::dilation(Ki), Op::fourier(), Op::chirp(-Ki * L),
                Op::inverse_fourier()};
  } else if (cond_number(R) <= kCondCap) {
    const Mat Ri = R.inverse();
    plan.ops = {Op::inverse_fourier(), Op::chirp(-L * Ri), Op::dilation(Ri), Op::fourier(),
                Op::chirp(Ri * Q)};
  } else if (cond_number(Q) <= kCondCap) {
    const Mat Qi = Q.inverse();
    plan.ops = {Op::inverse_fourier(), Op::chirp(-K * Qi), Op::dilation(Qi), Op::fourier(),
                Op::chirp(-Qi * R), Op::inverse_fourier()};
  } else {
    throw AllBlocksSingular("every block of the symplectic matrix is singular");
  }
  return simplify(plan);
}

Mat recompose(const OperatorPlan& plan) {
  Mat A = Mat::Identity(2 * plan.d, 2 * plan.d);
  for (const auto& op : plan.ops) A = A * associated_matrix(op, plan.d);
  return A;
}

OperatorPlan simplify(const OperatorPlan& plan) {
  OperatorPlan out = plan;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<PrimitiveOp> kept;
    for (const auto& op : out.ops) {
      if (op.kind == PrimitiveOp::Kind::Dilation && near_identity(op.param)) {
        changed = true;
        continue;
      }
      if (op.kind == PrimitiveOp::Kind::Chirp && near_zero(op.param)) {
        changed = true;
        continue;
      }
      if (!kept.empty()) {
        const auto a = kept.back().kind, b = op.kind;
        if ((a == PrimitiveOp::Kind::Fourier && b == PrimitiveOp::Kind::InverseFourier) ||
            (a == PrimitiveOp::Kind::InverseFourier && b == PrimitiveOp::Kind::Fourier)) {
          kept.pop_back();
          changed = true;
          continue;
        }
      }
      kept.push_back(op);
    }
    out.ops = std::move(kept);
  }
  return out;
}

cd phase_factor(const OperatorPlan& plan, const Vec& nu) {
  if (nu.size() != 2 * plan.d) throw DimensionMismatch("phase_factor nu");
  Vec cur = nu;
  cd phi = 1.0;
  for (int i = static_cast<int>(plan.ops.size()) - 1; i >= 0; --i) {
    const auto& op = plan.ops[i];
    const Vec lambda = cur.head(plan.d), gamma = cur.tail(plan.d);
    switch (op.kind) {
      case PrimitiveOp::Kind::Fourier:
      case PrimitiveOp::Kind::InverseFourier:
        phi *= std::polar(1.0, kTau * lambda.dot(gamma));
        break;
      case PrimitiveOp::Kind::Dilation:
        break;
      case PrimitiveOp::Kind::Chirp:
        phi *= std::polar(1.0, -0.5 * kTau * lambda.dot(op.param * lambda));
        break;
    }
    cur = associated_matrix(op, plan.d) * cur;
  }
  return phi;
}

namespace {

grid::GridSignal apply_dilation(const Mat& C, const grid::GridSignal& f) {
  const auto& spec = f.spec;
  const int d = spec.d;
  Eigen::MatrixXi Ci(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double v = C(i, j);
      if (std::abs(v - std::round(v)) > 1e-9)
        throw IncompatibleDilation("dilation matrix is not integral on the grid");
      Ci(i, j) = static_cast<int>(std::round(v));
    }
  grid::GridSignal out = grid::zeros(spec);
  std::vector<bool> hit(spec.total(), false);
  ivec j(d, 0);
  std::size_t idx = 0;
  do {
    ivec cj(d);
    for (int i = 0; i < d; ++i) {
      long long acc = 0;
      for (int l = 0; l < d; ++l) acc += static_cast<long long>(Ci(i, l)) * j[l];
      cj[i] = mod(static_cast<int>(acc % spec.L), spec.L);
    }
    const std::size_t src = flatten(cj, spec.L);
    hit[src] = true;
    // the index permutation is measure preserving, so no Jacobian factor
    out.values[idx] = f.values[src];
    ++idx;
  } while (next_index(j, spec.L));
  for (bool h : hit)
    if (!h)
      throw IncompatibleDilation("dilation matrix is not invertible mod L = " +
                                 std::to_string(spec.L));
  return out;
}

grid::GridSignal apply_chirp(const Mat& M, const grid::GridSignal& f) {
  const auto& spec = f.spec;
  const int d = spec.d;
  if (max_abs(Mat(M - M.transpose())) > 1e-12)
    throw IncompatibleChirp("chirp matrix must be symmetric");
  const double rr = static_cast<double>(spec.r) * spec.r;
  auto theta = [&](const ivec& j) {
    double acc = 0.0;
    for (int i = 0; i < d; ++i)
      for (int l = 0; l < d; ++l) acc += M(i, l) * j[i] * j[l];
    return 0.5 * kTau * acc / rr;  // pi <j/r, M j/r>
  };
  // L-periodicity: the increment theta(j + L e_i) - theta(j) is affine in j,
  // so probing j = 0 and j = e_l suffices
  for (int i = 0; i < d; ++i) {
    for (int probe = -1; probe < d; ++probe) {
      ivec j(d, 0);
      if (probe >= 0) j[probe] = 1;
      ivec js = j;
      js[i] += spec.L;
      const double delta = (theta(js) - theta(j)) / kTau;
      if (std::abs(delta - std::round(delta)) > 1e-9)
        throw IncompatibleChirp("chirp phase is not periodic on the grid (axis " +
                                std::to_string(i) + ")");
    }
  }
  grid::GridSignal out = f;
  ivec j(d, 0);
  std::size_t idx = 0;
  do {
    out.values[idx] *= std::polar(1.0, theta(j));
    ++idx;
  } while (next_index(j, spec.L));
  return out;
}

}  // namespace

grid::GridSignal apply_plan(const OperatorPlan& plan, const grid::GridSignal& f) {
  if (plan.d != f.spec.d) throw IncompatiblePlan("plan dimension does not match grid");
  // the transform maps position sampling (r per unit) to frequency sampling
  // (P per unit); the two agree, and labels transport exactly, only on
  // square grids
  for (const auto& op : plan.ops)
    if ((op.kind == PrimitiveOp::Kind::Fourier ||
         op.kind == PrimitiveOp::Kind::InverseFourier) &&
        f.spec.P != f.spec.r)
      throw IncompatiblePlan("Fourier primitives need a square grid (P == r), got P = " +
                             std::to_string(f.spec.P) + ", r = " + std::to_string(f.spec.r));
  grid::GridSignal cur = f;
  for (int i = static_cast<int>(plan.ops.size()) - 1; i >= 0; --i) {
    const auto& op = plan.ops[i];
    switch (op.kind) {
      case PrimitiveOp::Kind::Fourier:
        cur = grid::dft(cur, false);
        break;
      case PrimitiveOp::Kind::InverseFourier:
        cur = grid::dft(cur, true);
        break;
      case PrimitiveOp::Kind::Dilation:
        cur = apply_dilation(op.param, cur);
        break;
      case PrimitiveOp::Kind::Chirp:
        cur = apply_chirp(op.param, cur);
        break;
    }
  }
  return cur;
}

std::pair<Mat, OperatorPlan> ks_plan(double a, double c) {
  if (!(a > 0.0) || c < 0.0) throw BadParameters("ks_plan needs a > 0 and c >= 0");
  Mat A(2, 2);
  A << 2 * a, c, 0, 1 / (2 * a);
  Mat d1(1, 1), m1(1, 1);
  d1 << 1.0 / (2 * a);
  m1 << -c / (2 * a);
  OperatorPlan plan;
  plan.d = 1;
  plan.ops = {PrimitiveOp::dilation(d1), PrimitiveOp::fourier(), PrimitiveOp::chirp(m1),
              PrimitiveOp::inverse_fourier()};
  return {A, simplify(plan)};
}

synth::SystemFamily symplectic_wilson_family(const grid::GridSignal& g,
                                             const groups::SeparableGroup& G,
                                             const OperatorPlan& plan,
                                             bool include_phase) {
  const auto& spec = g.spec;
  if (G.d != spec.d) throw IncompatibleGrid("group dimension does not match grid");
  if (plan.d != spec.d) throw IncompatiblePlan("plan dimension does not match grid");
  const Mat A = recompose(plan);
  if (!is_symplectic(A)) throw IncompatiblePlan("plan matrix is not symplectic");

  const grid::GridSignal mug = apply_plan(plan, g);

  auto pi_of = [&](const Vec& nu, const grid::GridSignal& f) {
    std::vector<double> lambda(spec.d), gamma(spec.d);
    for (int i = 0; i < spec.d; ++i) {
      lambda[i] = nu(i);
      gamma[i] = nu(spec.d + i);
    }
    return grid::tf_shift(f, lambda, gamma);
  };

  std::vector<groups::ParityVector> hs = G.elements;
  std::sort(hs.begin(), hs.end());

  synth::SystemFamily fam;
  fam.spec = spec;
  for (const ivec& gamma : groups::fundamental_domain(G, spec.r)) {
    for (const auto& h : hs) {
      if (groups::is_vacuous(G, h, gamma, spec.r)) continue;
      const auto info = groups::orbit_and_stabilizer(G, gamma, spec.r);
      const double c = std::sqrt(static_cast<double>(info.orbit.size())) / G.order();
      const groups::ParityVector ih = groups::iso_I(G, h);
      ivec weight(spec.d);
      for (int i = 0; i < spec.d; ++i) weight[i] = ih[i] + gamma[i];

      grid::GridSignal xi = grid::zeros(spec);
      for (const auto& sigma : G.elements) {
        const ivec rg = groups::reflect(sigma, gamma);
        Vec nu = Vec::Zero(2 * spec.d);
        for (int i = 0; i < spec.d; ++i) nu(spec.d + i) = rg[i];
        cd coeff = static_cast<double>(groups::pairing(weight, sigma));
        if (include_phase) coeff *= phase_factor(plan, nu);
        grid::GridSignal term = pi_of(A * nu, mug);
        term *= coeff;
        xi += term;
      }
      xi *= cd(c);
      Vec star = Vec::Zero(2 * spec.d);
      for (int i = 0; i < spec.d; ++i) star(i) = 0.5 * h[i];
      xi = pi_of(A * star, xi);

      std::ostringstream glab;
      glab << "g[";
      for (int i = 0; i < spec.d; ++i) glab << (i ? "," : "") << gamma[i];
      glab << "]h[";
      for (int i = 0; i < spec.d; ++i) glab << (i ? "," : "") << h[i];
      glab << ']';

      ivec n(spec.d, 0);
      do {
        Vec lam = Vec::Zero(2 * spec.d);
        for (int i = 0; i < spec.d; ++i) lam(i) = n[i];
        fam.members.push_back(pi_of(A * lam, xi));
        std::ostringstream lab;
        lab << glab.str() << "|t[";
        for (int i = 0; i < spec.d; ++i) lab << (i ? "," : "") << n[i] * spec.r;
        lab << ']';
        fam.labels.push_back(lab.str());
      } while (next_index(n, spec.P));
    }
  }
  return fam;
}

}  // namespace wg::sympl
