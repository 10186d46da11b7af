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

#include <complex>
#include <cstddef>
#include <vector>

// Data-parallel inner loops of the library.  Every kernel exists in a serial
// reference form (wg::kern::serial) and an OpenMP form (wg::kern::par); the
// dispatch layer picks the active backend.  Parallelism is always across
// independent output elements, so results are bit-identical for any thread
// count.

namespace wg {

using cd = std::complex<double>;
using cvec = std::vector<cd>;

namespace kern {

enum class Backend { Serial, OpenMP };

Backend active_backend();
void set_backend(Backend b);

/// Number of OpenMP threads the par backend will use (1 without OpenMP).
int thread_count();

/// Caps OpenMP parallelism; values < 1 are ignored.
void set_thread_cap(int n);

namespace serial {

/// Unnormalized DFT of length n along one axis of a row-major array with
/// extents `dims`.  inverse=false: X[k] = sum_j x[j] e^{-2pi i jk/n}.
void axis_dft(cvec& a, const std::vector<int>& dims, int axis, bool inverse);

/// S[i*n+j] = weight * sum_m f_m(i) conj(f_m(j)), n = signal length.
void frame_operator(const std::vector<const cd*>& members, std::size_t n,
                    double weight, cvec& out);

/// G[a*m+b] = weight * sum_i f_b(i) conj(f_a(i))  (the <f_b, f_a> matrix).
void gram(const std::vector<const cd*>& members, std::size_t n, double weight,
          cvec& out);

}  // namespace serial

namespace par {

void axis_dft(cvec& a, const std::vector<int>& dims, int axis, bool inverse);
void frame_operator(const std::vector<const cd*>& members, std::size_t n,
                    double weight, cvec& out);
void gram(const std::vector<const cd*>& members, std::size_t n, double weight,
          cvec& out);

}  // namespace par

// Dispatch through the active backend.
void axis_dft(cvec& a, const std::vector<int>& dims, int axis, bool inverse);
void frame_operator(const std::vector<const cd*>& members, std::size_t n,
                    double weight, cvec& out);
void gram(const std::vector<const cd*>& members, std::size_t n, double weight,
          cvec& out);

}  // namespace kern
}  // namespace wg
