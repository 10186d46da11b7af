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

#include <cstdio>
#include <filesystem>

#include "doctest.h"
#include "wg/checks.hpp"
#include "wg/errors.hpp"
#include "wg/io.hpp"
#include "wg/synth.hpp"

using namespace wg;

TEST_CASE("config parser") {
  const auto cfg = config::Config::parse_string(R"(
# campaign
d = 1
P = 4
r = 8
tol.x = 1e-10
generators = [[1,1],[0,0]]
checks = [a, b, c]
window = random
)");
  CHECK(cfg.get_int("d", 0) == 1);
  CHECK(cfg.get_double("tol.x", 0) == doctest::Approx(1e-10));
  CHECK(cfg.get_string("window", "") == "random");
  CHECK(cfg.get_string_list("checks") == std::vector<std::string>{"a", "b", "c"});
  const auto m = cfg.get_int_matrix("generators");
  REQUIRE(m.size() == 2);
  CHECK(m[0] == ivec{1, 1});
  CHECK(m[1] == ivec{0, 0});
  CHECK(cfg.get_int("missing", 7) == 7);
  CHECK(cfg.keys().front() == "d");

  CHECK_THROWS_AS(config::Config::parse_string("novalue"), ConfigError);
  CHECK_THROWS_AS(config::Config::parse_string("x = [1,2"), ConfigError);
}

TEST_CASE("check registry") {
  CHECK(checks::registry().size() >= 12);
  for (const auto& def : checks::registry()) {
    CHECK_FALSE(def.name.empty());
    CHECK_FALSE(def.claim_tag.empty());
    CHECK_FALSE(def.citation.empty());
    CHECK(static_cast<bool>(def.fn));
  }
  CHECK(checks::find_check("example_windows") != nullptr);
  CHECK(checks::find_check("no_such_check") == nullptr);
}

TEST_CASE("campaign runner") {
  SUBCASE("empty or unknown checks are config errors") {
    CHECK_THROWS_AS(checks::run_campaign(config::Config::parse_string("output = tmp")),
                    ConfigError);
    CHECK_THROWS_WITH_AS(
        checks::run_campaign(config::Config::parse_string("checks = [made_up_check]")),
        doctest::Contains("made_up_check"), ConfigError);
  }
  SUBCASE("a small campaign runs, passes and echoes its config") {
    const auto dir = std::filesystem::temp_directory_path() / "wg_campaign";
    const auto cfg = config::Config::parse_string(
        "checks = [example_windows]\noutput = " + dir.string());
    const auto res = checks::run_campaign(cfg);
    CHECK(res.exit_code == 0);
    CHECK(res.report.at("schema") == 1);
    CHECK(res.report.at("summary").at("failed") == 0);
    CHECK(res.report.at("config").at("checks")[0] == "example_windows");
    CHECK(std::filesystem::exists(dir / "report.json"));

    // determinism apart from the timestamp
    auto again = checks::run_campaign(cfg);
    auto a = res.report, b = again.report;
    a.erase("timestamp");
    b.erase("timestamp");
    CHECK(a.dump() == b.dump());
  }
}

TEST_CASE("serialization round trips") {
  const auto spec = grid::make_grid(1, 2, 4);
  const auto g = grid::random_symmetric_window(spec, 5);
  const auto dir = std::filesystem::temp_directory_path() / "wg_io";
  std::filesystem::create_directories(dir);

  SUBCASE("binary signals") {
    const std::string path = (dir / "sig.bin").string();
    io::write_signal_bin(g, path);
    const auto back = io::read_signal_bin(path);
    CHECK(back.spec == g.spec);
    CHECK(grid::max_dist(back, g) == 0.0);
  }
  SUBCASE("csv signals") {
    const std::string path = (dir / "sig.csv").string();
    io::write_signal_csv(g, path);
    CHECK(std::filesystem::file_size(path) > 0);
  }
  SUBCASE("families") {
    const auto G = groups::make_group(1, {{1}});
    const auto fam = synth::wilson_family(g, G);
    const std::string base = (dir / "fam").string();
    io::write_family(fam, base);
    const auto back = io::read_family(base);
    REQUIRE(back.size() == fam.size());
    CHECK(back.labels == fam.labels);
    double dev = 0.0;
    for (std::size_t i = 0; i < fam.size(); ++i)
      dev = std::max(dev, grid::max_dist(back.members[i], fam.members[i]));
    CHECK(dev == 0.0);
  }
  SUBCASE("real matrices") {
    const std::string path = (dir / "mat.csv").string();
    io::write_matrix_csv({{1.0, 2.5}, {-3.0, 4.0}}, path);
    const auto m = io::read_matrix_csv(path);
    REQUIRE(m.size() == 2);
    CHECK(m[1][0] == doctest::Approx(-3.0));
  }
}
