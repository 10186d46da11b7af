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

#include <string>
#include <vector>

#include "wg/grid.hpp"

namespace wg::io {

/// CSV rows "index,re,im" (flat row-major index).
void write_signal_csv(const grid::GridSignal& f, const std::string& path);

/// Binary little-endian: uint32 d, P, r then L^d (re, im) doubles.
void write_signal_bin(const grid::GridSignal& f, const std::string& path);
grid::GridSignal read_signal_bin(const std::string& path);

/// Dense real matrix as comma-separated rows.
void write_matrix_csv(const std::vector<std::vector<double>>& m, const std::string& path);
std::vector<std::vector<double>> read_matrix_csv(const std::string& path);

}  // namespace wg::io

#include "wg/synth.hpp"

namespace wg::io {

/// Family = <base>.manifest.json (label -> member index) plus <base>.sig
/// holding the packed signal block.
void write_family(const synth::SystemFamily& fam, const std::string& base);
synth::SystemFamily read_family(const std::string& base);

/// Complex matrix rows "i,j,re,im".
void write_complex_matrix_csv(const cvec& m, std::size_t n, const std::string& path);

}  // namespace wg::io
