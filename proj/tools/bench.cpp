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

// Compares the serial reference kernels against the OpenMP ones and reports
// per-kernel timings plus the max deviation between backends.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>

#include "wg/frames.hpp"
#include "wg/grid.hpp"
#include "wg/kernels.hpp"
#include "wg/synth.hpp"

namespace {

using namespace wg;

double time_ms(const std::function<void()>& fn, int reps) {
  fn();  // warm up
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

cvec random_cvec(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  cvec v(n);
  for (cd& x : v) x = cd(dist(rng), dist(rng));
  return v;
}

double max_diff(const cvec& a, const cvec& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

void row(const char* name, double serial_ms, double omp_ms, double dev) {
  std::printf("%-26s %10.3f ms %10.3f ms %8.2fx   max|diff| %.3e\n", name, serial_ms,
              omp_ms, serial_ms / omp_ms, dev);
}

}  // namespace

int main() {
  if (const char* env = std::getenv("WILSON_THREADS"))
    kern::set_thread_cap(std::atoi(env));
  std::printf("kernel benchmark, %d thread(s)\n", kern::thread_count());
  std::printf("%-26s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

  {  // batched pow2 DFT: 256 fibers per axis of a 256 x 256 array
    const std::vector<int> dims = {256, 256};
    cvec a = random_cvec(256 * 256, 1), b = a;
    const double ts = time_ms(
        [&] {
          kern::serial::axis_dft(a, dims, 0, false);
          kern::serial::axis_dft(a, dims, 1, false);
        },
        10);
    const double tp = time_ms(
        [&] {
          kern::par::axis_dft(b, dims, 0, false);
          kern::par::axis_dft(b, dims, 1, false);
        },
        10);
    row("dft pow2 256x256", ts, tp, max_diff(a, b));
  }
  {  // 2-D DFT, 192 x 192 (mixed radix path)
    const std::vector<int> dims = {192, 192};
    cvec a = random_cvec(192 * 192, 2), b = a;
    const double ts = time_ms(
        [&] {
          kern::serial::axis_dft(a, dims, 0, false);
          kern::serial::axis_dft(a, dims, 1, false);
        },
        3);
    const double tp = time_ms(
        [&] {
          kern::par::axis_dft(b, dims, 0, false);
          kern::par::axis_dft(b, dims, 1, false);
        },
        3);
    row("dft naive 192x192", ts, tp, max_diff(a, b));
  }
  {  // frame operator, 512 members of dimension 512
    const std::size_t n = 512, m = 512;
    std::vector<cvec> sig;
    std::vector<const cd*> ptr;
    for (std::size_t i = 0; i < m; ++i) sig.push_back(random_cvec(n, 10 + i));
    for (const auto& s : sig) ptr.push_back(s.data());
    cvec s1, s2;
    const double ts = time_ms([&] { kern::serial::frame_operator(ptr, n, 1.0, s1); }, 3);
    const double tp = time_ms([&] { kern::par::frame_operator(ptr, n, 1.0, s2); }, 3);
    row("frame_operator 512x512", ts, tp, max_diff(s1, s2));
  }
  {  // Gram, 384 members of dimension 1024
    const std::size_t n = 1024, m = 384;
    std::vector<cvec> sig;
    std::vector<const cd*> ptr;
    for (std::size_t i = 0; i < m; ++i) sig.push_back(random_cvec(n, 100 + i));
    for (const auto& s : sig) ptr.push_back(s.data());
    cvec g1, g2;
    const double ts = time_ms([&] { kern::serial::gram(ptr, n, 1.0, g1); }, 3);
    const double tp = time_ms([&] { kern::par::gram(ptr, n, 1.0, g2); }, 3);
    row("gram 384 members", ts, tp, max_diff(g1, g2));
  }
  {  // end-to-end: Wilson synthesis + autocorrelation table
    const auto spec = grid::make_grid(1, 16, 64);
    const auto G = groups::make_group(1, {{1}});
    const auto g = grid::random_symmetric_window(spec, 3);
    cvec t1, t2;
    const double ts = time_ms(
        [&] {
          kern::set_backend(kern::Backend::Serial);
          const auto fam = synth::wilson_family(g, G);
          t1 = frames::autocorr_table(fam).values[0];
        },
        2);
    const double tp = time_ms(
        [&] {
          kern::set_backend(kern::Backend::OpenMP);
          const auto fam = synth::wilson_family(g, G);
          t2 = frames::autocorr_table(fam).values[0];
        },
        2);
    kern::set_backend(kern::Backend::OpenMP);
    row("wilson+autocorr L=1024", ts, tp, max_diff(t1, t2));
  }
  return 0;
}
