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

#include <cstdint>
#include <vector>

namespace wg {

using ivec = std::vector<int>;

/// Row-major flattening of a d-dimensional index over a cube of side n.
inline std::size_t flatten(const ivec& idx, int n) {
  std::size_t f = 0;
  for (int c : idx) f = f * static_cast<std::size_t>(n) + static_cast<std::size_t>(c);
  return f;
}

inline ivec unflatten(std::size_t f, int n, int d) {
  ivec idx(d);
  for (int i = d - 1; i >= 0; --i) {
    idx[i] = static_cast<int>(f % static_cast<std::size_t>(n));
    f /= static_cast<std::size_t>(n);
  }
  return idx;
}

/// Advances idx through [0,n)^d in row-major order; false when exhausted.
inline bool next_index(ivec& idx, int n) {
  for (int i = static_cast<int>(idx.size()) - 1; i >= 0; --i) {
    if (++idx[i] < n) return true;
    idx[i] = 0;
  }
  return false;
}

inline int mod(int a, int n) {
  int m = a % n;
  return m < 0 ? m + n : m;
}

inline std::int64_t ipow(int base, int exp) {
  std::int64_t p = 1;
  for (int i = 0; i < exp; ++i) p *= base;
  return p;
}

}  // namespace wg
