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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wg/multiindex.hpp"

// Flat human-readable key-value campaign configs:
//   key = value
// with '#' comments; values are numbers, bare strings, or (nested) arrays
// like [[1,1],[0,1]].

namespace wg::config {

struct Value {
  enum class Kind { Number, String, Array };
  Kind kind = Kind::String;
  double number = 0.0;
  std::string text;
  std::vector<Value> items;
};

class Config {
 public:
  static Config parse_file(const std::string& path);
  static Config parse_string(const std::string& text);

  bool has(const std::string& key) const;
  int get_int(const std::string& key, int fallback) const;
  double get_double(const std::string& key, double fallback) const;
  std::string get_string(const std::string& key, const std::string& fallback) const;
  std::vector<std::string> get_string_list(const std::string& key) const;
  std::vector<ivec> get_int_matrix(const std::string& key) const;

  /// Keys in declaration order.
  const std::vector<std::string>& keys() const { return order_; }
  const Value& at(const std::string& key) const;

 private:
  std::map<std::string, Value> values_;
  std::vector<std::string> order_;
};

}  // namespace wg::config
