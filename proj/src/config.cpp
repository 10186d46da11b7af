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

#include "wg/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "wg/errors.hpp"

namespace wg::config {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

Value parse_value(const std::string& raw);

std::vector<std::string> split_top_level(const std::string& body) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : body) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty() || !parts.empty()) parts.push_back(cur);
  return parts;
}

Value parse_value(const std::string& raw) {
  const std::string s = trim(raw);
  Value v;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ConfigError("unterminated array: " + s);
    v.kind = Value::Kind::Array;
    const std::string body = s.substr(1, s.size() - 2);
    if (!trim(body).empty())
      for (const auto& part : split_top_level(body)) v.items.push_back(parse_value(part));
    return v;
  }
  char* end = nullptr;
  const double num = std::strtod(s.c_str(), &end);
  if (end && *end == '\0' && !s.empty()) {
    v.kind = Value::Kind::Number;
    v.number = num;
    return v;
  }
  v.kind = Value::Kind::String;
  v.text = s;
  if (v.text.size() >= 2 && v.text.front() == '"' && v.text.back() == '"')
    v.text = v.text.substr(1, v.text.size() - 2);
  return v;
}

}  // namespace

Config Config::parse_string(const std::string& text) {
  Config cfg;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");
    if (!cfg.values_.count(key)) cfg.order_.push_back(key);
    cfg.values_[key] = parse_value(line.substr(eq + 1));
  }
  return cfg;
}

Config Config::parse_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open config file " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  return parse_string(ss.str());
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

const Value& Config::at(const std::string& key) const {
  auto it = values_.find(key);
  if (it == values_.end()) throw ConfigError("missing config key " + key);
  return it->second;
}

int Config::get_int(const std::string& key, int fallback) const {
  if (!has(key)) return fallback;
  const Value& v = at(key);
  if (v.kind != Value::Kind::Number || std::abs(v.number - std::llround(v.number)) > 1e-9)
    throw ConfigError("key " + key + " must be an integer");
  return static_cast<int>(std::llround(v.number));
}

double Config::get_double(const std::string& key, double fallback) const {
  if (!has(key)) return fallback;
  const Value& v = at(key);
  if (v.kind != Value::Kind::Number) throw ConfigError("key " + key + " must be a number");
  return v.number;
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
  if (!has(key)) return fallback;
  const Value& v = at(key);
  if (v.kind == Value::Kind::Number) {
    std::ostringstream os;
    os << v.number;
    return os.str();
  }
  if (v.kind != Value::Kind::String) throw ConfigError("key " + key + " must be a string");
  return v.text;
}

std::vector<std::string> Config::get_string_list(const std::string& key) const {
  std::vector<std::string> out;
  if (!has(key)) return out;
  const Value& v = at(key);
  if (v.kind != Value::Kind::Array) throw ConfigError("key " + key + " must be an array");
  for (const Value& item : v.items) {
    if (item.kind == Value::Kind::String)
      out.push_back(item.text);
    else if (item.kind == Value::Kind::Number) {
      std::ostringstream os;
      os << item.number;
      out.push_back(os.str());
    } else {
      throw ConfigError("key " + key + " must be a flat array");
    }
  }
  return out;
}

std::vector<ivec> Config::get_int_matrix(const std::string& key) const {
  std::vector<ivec> out;
  if (!has(key)) return out;
  const Value& v = at(key);
  if (v.kind != Value::Kind::Array) throw ConfigError("key " + key + " must be an array");
  for (const Value& row : v.items) {
    if (row.kind != Value::Kind::Array)
      throw ConfigError("key " + key + " must be an array of arrays");
    ivec r;
    for (const Value& cell : row.items) {
      if (cell.kind != Value::Kind::Number)
        throw ConfigError("key " + key + " must hold integers");
      r.push_back(static_cast<int>(std::llround(cell.number)));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace wg::config
