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

#include "wg/kernels.hpp"

#include <cmath>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wg::kern {

namespace {

Backend g_backend = Backend::OpenMP;
int g_thread_cap = 0;  // 0 = library default

constexpr double kTau = 6.283185307179586476925286766559;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

/// e^{-2pi i jk/n} table for j = 0..n-1 (forward sign).
cvec twiddle_table(int n, bool inverse) {
  cvec w(static_cast<std::size_t>(n));
  const double s = inverse ? 1.0 : -1.0;
  for (int j = 0; j < n; ++j) w[j] = std::polar(1.0, s * kTau * j / n);
  return w;
}

void dft_naive_fiber(cd* x, int n, const cvec& w, cd* scratch) {
  for (int k = 0; k < n; ++k) {
    cd acc = 0.0;
    std::int64_t jk = 0;
    for (int j = 0; j < n; ++j) {
      acc += x[j] * w[static_cast<std::size_t>(jk)];
      jk += k;
      if (jk >= n) jk -= n;  // jk = j*k mod n without overflow
    }
    scratch[k] = acc;
  }
  for (int k = 0; k < n; ++k) x[k] = scratch[k];
}

/// Iterative radix-2 Cooley-Tukey, in place, unnormalized.
void fft_pow2_fiber(cd* x, int n, const cvec& w) {
  // bit reversal
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(x[i], x[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const int step = n / len;
    for (int i = 0; i < n; i += len) {
      int tw = 0;
      for (int k = 0; k < len / 2; ++k) {
        const cd u = x[i + k];
        const cd v = x[i + k + len / 2] * w[tw];
        x[i + k] = u + v;
        x[i + k + len / 2] = u - v;
        tw += step;
      }
    }
  }
}

struct AxisGeom {
  std::size_t n;       // transform length
  std::size_t stride;  // distance between consecutive elements along axis
  std::size_t fibers;  // number of 1-D transforms
};

AxisGeom axis_geometry(const std::vector<int>& dims, int axis) {
  AxisGeom g{};
  g.n = static_cast<std::size_t>(dims[axis]);
  g.stride = 1;
  for (std::size_t i = axis + 1; i < dims.size(); ++i)
    g.stride *= static_cast<std::size_t>(dims[i]);
  std::size_t total = 1;
  for (int d : dims) total *= static_cast<std::size_t>(d);
  g.fibers = total / g.n;
  return g;
}

/// Start offset of fiber f for the given geometry.
std::size_t fiber_base(const AxisGeom& g, std::size_t f) {
  const std::size_t inner = g.stride;          // fibers that differ in fast index
  const std::size_t lo = f % inner;            // position within the inner block
  const std::size_t hi = f / inner;            // outer block index
  return hi * g.n * inner + lo;
}

template <bool Par>
void axis_dft_impl(cvec& a, const std::vector<int>& dims, int axis,
                   bool inverse) {
  const AxisGeom g = axis_geometry(dims, axis);
  const int n = static_cast<int>(g.n);
  if (n == 1) return;
  const cvec w = twiddle_table(n, inverse);
  const bool pow2 = is_pow2(n);
  const std::int64_t fibers = static_cast<std::int64_t>(g.fibers);

#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Par && fibers > 1)
#endif
  for (std::int64_t f = 0; f < fibers; ++f) {
    cvec buf(g.n), scratch(pow2 ? 0 : g.n);
    const std::size_t base = fiber_base(g, static_cast<std::size_t>(f));
    cd* p = a.data() + base;
    if (g.stride == 1) {
      if (pow2)
        fft_pow2_fiber(p, n, w);
      else
        dft_naive_fiber(p, n, w, scratch.data());
    } else {
      for (int j = 0; j < n; ++j) buf[j] = p[j * g.stride];
      if (pow2)
        fft_pow2_fiber(buf.data(), n, w);
      else
        dft_naive_fiber(buf.data(), n, w, scratch.data());
      for (int j = 0; j < n; ++j) p[j * g.stride] = buf[j];
    }
  }
}

template <bool Par>
void frame_operator_impl(const std::vector<const cd*>& members, std::size_t n,
                         double weight, cvec& out) {
  out.assign(n * n, cd(0.0));
  const std::int64_t rows = static_cast<std::int64_t>(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Par && rows > 1)
#endif
  for (std::int64_t i = 0; i < rows; ++i) {
    cd* row = out.data() + static_cast<std::size_t>(i) * n;
    for (const cd* f : members) {
      const cd fi = f[i];
      if (fi == cd(0.0)) continue;
      for (std::size_t j = 0; j < n; ++j) row[j] += fi * std::conj(f[j]);
    }
    for (std::size_t j = 0; j < n; ++j) row[j] *= weight;
  }
}

template <bool Par>
void gram_impl(const std::vector<const cd*>& members, std::size_t n,
               double weight, cvec& out) {
  const std::size_t m = members.size();
  out.assign(m * m, cd(0.0));
  const std::int64_t rows = static_cast<std::int64_t>(m);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (Par && rows > 1)
#endif
  for (std::int64_t a = 0; a < rows; ++a) {
    const cd* fa = members[static_cast<std::size_t>(a)];
    cd* row = out.data() + static_cast<std::size_t>(a) * m;
    for (std::size_t b = 0; b < m; ++b) {
      const cd* fb = members[b];
      cd acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) acc += fb[i] * std::conj(fa[i]);
      row[b] = weight * acc;
    }
  }
}

}  // namespace

Backend active_backend() { return g_backend; }
void set_backend(Backend b) { g_backend = b; }

int thread_count() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
  if (g_thread_cap > 0 && g_thread_cap < n) n = g_thread_cap;
  return n;
#else
  return 1;
#endif
}

void set_thread_cap(int n) {
  if (n < 1) return;
  g_thread_cap = n;
#ifdef _OPENMP
  omp_set_num_threads(n);
#endif
}

namespace serial {
void axis_dft(cvec& a, const std::vector<int>& dims, int axis, bool inverse) {
  axis_dft_impl<false>(a, dims, axis, inverse);
}
void frame_operator(const std::vector<const cd*>& members, std::size_t n,
                    double weight, cvec& out) {
  frame_operator_impl<false>(members, n, weight, out);
}
void gram(const std::vector<const cd*>& members, std::size_t n, double weight,
          cvec& out) {
  gram_impl<false>(members, n, weight, out);
}
}  // namespace serial

namespace par {
void axis_dft(cvec& a, const std::vector<int>& dims, int axis, bool inverse) {
  axis_dft_impl<true>(a, dims, axis, inverse);
}
void frame_operator(const std::vector<const cd*>& members, std::size_t n,
                    double weight, cvec& out) {
  frame_operator_impl<true>(members, n, weight, out);
}
void gram(const std::vector<const cd*>& members, std::size_t n, double weight,
          cvec& out) {
  gram_impl<true>(members, n, weight, out);
}
}  // namespace par

void axis_dft(cvec& a, const std::vector<int>& dims, int axis, bool inverse) {
  if (g_backend == Backend::Serial)
    serial::axis_dft(a, dims, axis, inverse);
  else
    par::axis_dft(a, dims, axis, inverse);
}
void frame_operator(const std::vector<const cd*>& members, std::size_t n,
                    double weight, cvec& out) {
  if (g_backend == Backend::Serial)
    serial::frame_operator(members, n, weight, out);
  else
    par::frame_operator(members, n, weight, out);
}
void gram(const std::vector<const cd*>& members, std::size_t n, double weight,
          cvec& out) {
  if (g_backend == Backend::Serial)
    serial::gram(members, n, weight, out);
  else
    par::gram(members, n, weight, out);
}

}  // namespace wg::kern
