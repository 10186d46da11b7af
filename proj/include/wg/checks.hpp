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

#include <functional>
#include <string>
#include <vector>

#include "wg/config.hpp"

#include "json.hpp"

// Verification campaigns: every registered check runs one claim-level
// pipeline and emits machine-readable records {check, claim_tag, parameters,
// value, tolerance, pass}.  Residual-style records pass iff value <= tolerance.

namespace wg::checks {

struct CheckRecord {
  std::string check;
  std::string claim_tag;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  double value = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct CheckContext {
  config::Config cfg;

  double tol(const std::string& check, double fallback) const {
    return cfg.get_double("tol." + check, fallback);
  }
};

struct CheckDef {
  std::string name;
  std::string claim_tag;
  std::string citation;  // one-line statement of the verified claim
  std::function<std::vector<CheckRecord>(const CheckContext&)> fn;
};

const std::vector<CheckDef>& registry();
const CheckDef* find_check(const std::string& name);

struct CampaignResult {
  nlohmann::ordered_json report;
  int exit_code = 0;  // 0 pass, 1 check failure, 2 invalid input
};

/// Runs the configured checks in declaration order and assembles the report
/// (schema = 1); writes report.json under the configured output directory.
CampaignResult run_campaign(const config::Config& cfg);

}  // namespace wg::checks
