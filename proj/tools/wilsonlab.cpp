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

#include <cstdlib>
#include <sstream>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wg/checks.hpp"
#include "wg/contin.hpp"
#include "wg/errors.hpp"
#include "wg/frames.hpp"
#include "wg/io.hpp"
#include "wg/sympl.hpp"

namespace {

using namespace wg;

grid::GridSignal window_from(const config::Config& cfg, const grid::GridSpec& spec) {
  const std::string w = cfg.get_string("window", "random");
  if (w == "random")
    return grid::random_symmetric_window(spec,
                                         static_cast<std::uint64_t>(cfg.get_int("seed", 1)));
  if (w == "cos" || w == "tent") {
    if (spec.d != 1) throw ConfigError("builtin window " + w + " needs d = 1");
    const auto aw = contin::builtin_window(w);
    return grid::periodize_sample(
        [&](const std::vector<double>& x) { return aw.time_eval(x[0]); }, aw.support, spec);
  }
  if (w.rfind("file:", 0) == 0) return io::read_signal_bin(w.substr(5));
  throw ConfigError("window must be random, cos, tent or file:<path>");
}

int cmd_run(const std::string& path) {
  const auto cfg = config::Config::parse_file(path);
  const auto result = checks::run_campaign(cfg);
  for (const auto& rec : result.report.at("records"))
    std::cout << (rec.at("pass").get<bool>() ? "PASS " : "FAIL ")
              << rec.at("check").get<std::string>() << "  value=" << rec.at("value")
              << " tol=" << rec.at("tolerance") << '\n';
  const auto& s = result.report.at("summary");
  std::cout << s.at("passed") << "/" << s.at("total") << " records passed; report at "
            << cfg.get_string("output", ".") << "/report.json\n";
  return result.exit_code;
}

int cmd_list_checks() {
  for (const auto& def : checks::registry())
    std::cout << def.name << "\n    tag: " << def.claim_tag << "\n    claim: " << def.citation
              << "\n";
  std::cout << checks::registry().size() << " checks registered\n";
  return 0;
}

int cmd_gram(const std::string& base) {
  const auto fam = io::read_family(base);
  const cvec g = frames::gram(fam);
  const std::string out = base + ".gram.csv";
  io::write_complex_matrix_csv(g, fam.size(), out);
  std::cout << "wrote " << out << " (" << fam.size() << "x" << fam.size() << ")\n";
  return 0;
}

/// Continuous-model grids: t_alpha rows (omega..., re, im, error_bound).
int cmd_autocorr_continuous(const config::Config& cfg) {
  const auto w = contin::builtin_window(cfg.get_string("cwindow", "cos"));
  const double mod_step = cfg.get_double("mod_step", 1.0);
  const double density = cfg.get_double("density", 2.0);
  const double radius = cfg.get_double("radius", 40.0);
  std::vector<std::vector<double>> omegas;
  if (w.dim == 1) {
    const double lo = cfg.get_double("omega_start", 0.0);
    const double hi = cfg.get_double("omega_stop", 4.0);
    const int n = cfg.get_int("omega_count", 64);
    for (int i = 0; i < n; ++i) omegas.push_back({lo + (hi - lo) * i / n});
  } else {
    omegas = contin::omega_interior_grid();
  }
  const std::string out_dir = cfg.get_string("output", ".");
  std::filesystem::create_directories(out_dir);
  for (const auto& alpha_val : cfg.get_string_list("alphas")) {
    std::vector<double> alpha(w.dim, 0.0);
    std::stringstream ss(alpha_val);
    std::string cell;
    for (int i = 0; i < w.dim && std::getline(ss, cell, ':'); ++i)
      alpha[i] = std::stod(cell);
    const auto vals = contin::autocorr_continuous(w, mod_step, density, alpha, omegas, radius);
    std::string label;
    for (double a : alpha) label += (label.empty() ? "" : "_") + std::to_string(a);
    std::ofstream os(out_dir + "/t_alpha_" + label + ".csv");
    os.precision(17);
    for (int i = 0; i < w.dim; ++i) os << "omega" << i << ',';
    os << "re,im,error_bound\n";
    for (std::size_t i = 0; i < omegas.size(); ++i) {
      for (double o : omegas[i]) os << o << ',';
      os << vals.values[i].real() << ',' << vals.values[i].imag() << ','
         << vals.tail_bound << '\n';
    }
  }
  std::cout << "wrote continuous autocorrelation grids to " << out_dir << '\n';
  return 0;
}

int cmd_autocorr(const std::string& path) {
  const auto cfg = config::Config::parse_file(path);
  if (cfg.get_string("model", "finite") == "continuous") return cmd_autocorr_continuous(cfg);
  const int dim = cfg.has("dimension") ? cfg.get_int("dimension", 1) : cfg.get_int("d", 1);
  const auto spec = grid::make_grid(dim, cfg.get_int("P", 4), cfg.get_int("r", 8));
  std::vector<groups::ParityVector> gens = cfg.get_int_matrix("generators");
  if (!cfg.has("generators")) gens.assign(1, groups::ParityVector(spec.d, 1));
  const auto G = groups::make_group(spec.d, gens);
  const auto g = window_from(cfg, spec);
  const std::string system = cfg.get_string("system", "gabor");
  synth::SystemFamily fam;
  if (system == "gabor")
    fam = synth::gabor_family(g, G);
  else if (system == "wilson")
    fam = synth::wilson_family(g, G);
  else
    throw ConfigError("system must be gabor or wilson");

  if (cfg.has("family_out")) io::write_family(fam, cfg.get_string("family_out", ""));

  const std::string out_dir = cfg.get_string("output", ".");
  std::filesystem::create_directories(out_dir);
  const auto table = frames::autocorr_table(fam);
  for (std::size_t a = 0; a < table.alphas.size(); ++a) {
    std::string label;
    for (int c : table.alphas[a]) label += (label.empty() ? "" : "_") + std::to_string(c);
    std::ofstream os(out_dir + "/t_alpha_" + label + ".csv");
    os.precision(17);
    os << "kappa,re,im\n";
    for (std::size_t i = 0; i < table.values[a].size(); ++i)
      os << i << ',' << table.values[a][i].real() << ',' << table.values[a][i].imag() << '\n';
  }
  std::cout << "wrote " << table.alphas.size() << " autocorrelation grids to " << out_dir
            << " (density " << table.density << ")\n";
  return 0;
}

nlohmann::ordered_json plan_to_json(const sympl::OperatorPlan& plan) {
  nlohmann::ordered_json ops = nlohmann::ordered_json::array();
  for (const auto& op : plan.ops) {
    nlohmann::ordered_json item;
    switch (op.kind) {
      case sympl::PrimitiveOp::Kind::Fourier:
        item["kind"] = "fourier";
        break;
      case sympl::PrimitiveOp::Kind::InverseFourier:
        item["kind"] = "inverse_fourier";
        break;
      case sympl::PrimitiveOp::Kind::Dilation:
        item["kind"] = "dilation";
        break;
      case sympl::PrimitiveOp::Kind::Chirp:
        item["kind"] = "chirp";
        break;
    }
    if (op.param.size() > 0) {
      auto rows = nlohmann::ordered_json::array();
      for (int i = 0; i < op.param.rows(); ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 0; j < op.param.cols(); ++j) row.push_back(op.param(i, j));
        rows.push_back(row);
      }
      item["matrix"] = rows;
    }
    ops.push_back(item);
  }
  return {{"d", plan.d}, {"ops", ops}};
}

int cmd_decompose(const std::string& path) {
  const auto rows = io::read_matrix_csv(path);
  const std::size_t n = rows.size();
  for (const auto& row : rows)
    if (row.size() != n) throw BadParameters("matrix file is not square");
  sympl::Mat A(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A(i, j) = rows[i][j];
  sympl::SymplecticResiduals res;
  const bool ok = sympl::is_symplectic(A, 1e-10, &res);
  std::cout << "symplectic: " << (ok ? "yes" : "no") << "  defining=" << res.defining
            << " block_ktq=" << res.block_ktq << " block_ltr=" << res.block_ltr
            << " block_identity=" << res.block_identity << '\n';
  if (!ok) return 2;
  const auto plan = sympl::decompose(A);
  const double round = (sympl::recompose(plan) - A).cwiseAbs().maxCoeff();
  std::cout << plan_to_json(plan).dump(2) << '\n';
  std::cout << "recompose max residual: " << round << '\n';
  return round <= 1e-9 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("WILSON_THREADS"))
    wg::kern::set_thread_cap(std::atoi(env));

  CLI::App app{"finite-model verification laboratory for Gabor and Wilson systems"};
  app.require_subcommand(1);

  std::string run_cfg, gram_base, ac_cfg, dec_path;
  auto* run = app.add_subcommand("run", "run a verification campaign from a config file");
  run->add_option("config", run_cfg, "campaign config")->required();
  auto* list = app.add_subcommand("list-checks", "list registered checks and claim tags");
  auto* gramc = app.add_subcommand("gram", "Gram matrix of a serialized family");
  gramc->add_option("family", gram_base, "family base path (without extension)")->required();
  auto* ac = app.add_subcommand("autocorr", "autocorrelation grids of a configured family");
  ac->add_option("config", ac_cfg, "autocorr config")->required();
  auto* dec = app.add_subcommand("decompose", "decompose a symplectic matrix from CSV");
  dec->add_option("matrix", dec_path, "2d x 2d matrix CSV")->required();

  try {
    app.parse(argc, argv);
    if (*run) return cmd_run(run_cfg);
    if (*list) return cmd_list_checks();
    if (*gramc) return cmd_gram(gram_base);
    if (*ac) return cmd_autocorr(ac_cfg);
    if (*dec) return cmd_decompose(dec_path);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  } catch (const wg::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const wg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
