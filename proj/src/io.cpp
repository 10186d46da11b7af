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

#include "wg/io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "wg/errors.hpp"

namespace wg::io {

namespace {

void put_u32(std::ofstream& os, std::uint32_t v) {
  unsigned char b[4];
  for (int i = 0; i < 4; ++i) b[i] = static_cast<unsigned char>((v >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::ifstream& is) {
  unsigned char b[4];
  is.read(reinterpret_cast<char*>(b), 4);
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(b[i]) << (8 * i);
  return v;
}

void put_f64(std::ofstream& os, double x) {
  std::uint64_t u;
  std::memcpy(&u, &x, 8);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>((u >> (8 * i)) & 0xff);
  os.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::ifstream& is) {
  unsigned char b[8];
  is.read(reinterpret_cast<char*>(b), 8);
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  double x;
  std::memcpy(&x, &u, 8);
  return x;
}

}  // namespace

void write_signal_csv(const grid::GridSignal& f, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path);
  os.precision(17);
  os << "index,re,im\n";
  for (std::size_t i = 0; i < f.values.size(); ++i)
    os << i << ',' << f.values[i].real() << ',' << f.values[i].imag() << '\n';
}

void write_signal_bin(const grid::GridSignal& f, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open " + path);
  put_u32(os, static_cast<std::uint32_t>(f.spec.d));
  put_u32(os, static_cast<std::uint32_t>(f.spec.P));
  put_u32(os, static_cast<std::uint32_t>(f.spec.r));
  for (const cd& v : f.values) {
    put_f64(os, v.real());
    put_f64(os, v.imag());
  }
}

grid::GridSignal read_signal_bin(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot open " + path);
  const int d = static_cast<int>(get_u32(is));
  const int P = static_cast<int>(get_u32(is));
  const int r = static_cast<int>(get_u32(is));
  grid::GridSpec spec = grid::make_grid(d, P, r);
  grid::GridSignal f = grid::zeros(spec);
  for (cd& v : f.values) {
    const double re = get_f64(is);
    const double im = get_f64(is);
    v = cd(re, im);
  }
  if (!is) throw Error("truncated signal file " + path);
  return f;
}

void write_matrix_csv(const std::vector<std::vector<double>>& m, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path);
  os.precision(17);
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << row[j];
    os << '\n';
  }
}

std::vector<std::vector<double>> read_matrix_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open " + path);
  std::vector<std::vector<double>> m;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    m.push_back(std::move(row));
  }
  return m;
}

void write_family(const synth::SystemFamily& fam, const std::string& base) {
  {
    nlohmann::ordered_json manifest;
    manifest["d"] = fam.spec.d;
    manifest["P"] = fam.spec.P;
    manifest["r"] = fam.spec.r;
    manifest["count"] = fam.size();
    auto labels = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < fam.size(); ++i) labels[fam.labels[i]] = i;
    manifest["labels"] = labels;
    std::ofstream os(base + ".manifest.json");
    if (!os) throw Error("cannot open " + base + ".manifest.json");
    os << manifest.dump(2) << '\n';
  }
  std::ofstream os(base + ".sig", std::ios::binary);
  if (!os) throw Error("cannot open " + base + ".sig");
  put_u32(os, static_cast<std::uint32_t>(fam.spec.d));
  put_u32(os, static_cast<std::uint32_t>(fam.spec.P));
  put_u32(os, static_cast<std::uint32_t>(fam.spec.r));
  put_u32(os, static_cast<std::uint32_t>(fam.size()));
  for (const auto& m : fam.members)
    for (const cd& v : m.values) {
      put_f64(os, v.real());
      put_f64(os, v.imag());
    }
}

synth::SystemFamily read_family(const std::string& base) {
  nlohmann::json manifest;
  {
    std::ifstream is(base + ".manifest.json");
    if (!is) throw Error("cannot open " + base + ".manifest.json");
    is >> manifest;
  }
  std::ifstream is(base + ".sig", std::ios::binary);
  if (!is) throw Error("cannot open " + base + ".sig");
  const int d = static_cast<int>(get_u32(is));
  const int P = static_cast<int>(get_u32(is));
  const int r = static_cast<int>(get_u32(is));
  const std::size_t count = get_u32(is);
  synth::SystemFamily fam;
  fam.spec = grid::make_grid(d, P, r);
  fam.labels.resize(count);
  for (const auto& [label, idx] : manifest.at("labels").items())
    fam.labels.at(idx.get<std::size_t>()) = label;
  for (std::size_t m = 0; m < count; ++m) {
    grid::GridSignal f = grid::zeros(fam.spec);
    for (cd& v : f.values) {
      const double re = get_f64(is);
      const double im = get_f64(is);
      v = cd(re, im);
    }
    fam.members.push_back(std::move(f));
  }
  if (!is) throw Error("truncated family file " + base + ".sig");
  return fam;
}

void write_complex_matrix_csv(const cvec& m, std::size_t n, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open " + path);
  os.precision(17);
  os << "i,j,re,im\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m.size() / n; ++j) {
      const cd v = m[i * (m.size() / n) + j];
      os << i << ',' << j << ',' << v.real() << ',' << v.imag() << '\n';
    }
}

}  // namespace wg::io
