// Copyright 2026 The edrsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "edrsim/io.hpp"

namespace {

using namespace edrsim;

// Exit codes: 0 success, 1 validation error, 2 I/O error, 3 numerical failure.
constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;
constexpr int kExitNumerical = 3;

StateSpec parse_state_option(const std::string& family,
                             const std::map<std::string, double>& params) {
  const auto get = [&](const std::string& key, double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
  };
  if (family == "coherent") {
    return {StateFamily::Coherent, get("mean_x", 0.0), get("mean_p", 0.0)};
  }
  if (family == "squeezed_pure") {
    return {StateFamily::SqueezedPure, get("r", 0.334), 0.0};
  }
  if (family == "squeezed_db") {
    return {StateFamily::SqueezedDb, get("sqz_db", -2.9), get("antisqz_db", 3.9)};
  }
  if (family == "thermal") {
    return {StateFamily::Thermal, get("r", 0.334), 0.0};
  }
  throw ValidationError("unknown state family '" + family +
                        "' (expected coherent, squeezed_pure, squeezed_db or "
                        "thermal)");
}

std::map<std::string, double> parse_params(
    const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("--param expects key=value, got '" + item + "'");
    }
    try {
      out[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ValidationError("--param: cannot parse value in '" + item + "'");
    }
  }
  return out;
}

void print_report(const EdrReport& r) {
  const auto verdict = [](bool violated) {
    return violated ? "violated" : "valid";
  };
  std::printf("t               = %s\n", format_real(r.t).c_str());
  std::printf("epsilon         = %.6f\n", r.epsilon);
  std::printf("eta             = %.6f\n", r.eta);
  std::printf("sigma_a         = %.6f\n", r.sigma_a);
  std::printf("sigma_b         = %.6f\n", r.sigma_b);
  std::printf("c_ab            = %.6f\n", r.c_ab);
  std::printf("lhs_heisenberg  = %.6f  (%s)\n", r.lhs_heisenberg,
              verdict(r.heisenberg_violated));
  std::printf("lhs_ozawa       = %.6f  (%s)\n", r.lhs_ozawa,
              verdict(r.ozawa_violated));
  std::printf("lhs_branciard   = %.6f  (%s)%s\n", r.lhs_branciard,
              verdict(r.branciard_violated),
              r.branciard_clamped ? "  [discriminant clamped]" : "");
}

int run(int argc, char** argv) {
  CLI::App app{
      "Gaussian-state error-disturbance uncertainty relation simulator"};
  app.require_subcommand(1);

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Run a transmission sweep and write sweep.csv / report.json / "
               "bounds.csv");
  std::string config_path;
  std::string out_dir = ".";
  sweep_cmd->add_option("--config", config_path,
                        "key=value config file (defaults used when omitted)");
  sweep_cmd->add_option("--out", out_dir, "output directory");

  // shared state options for report / minimize / gen
  struct StateOpts {
    std::string family = "coherent";
    std::vector<std::string> params;
  };
  const auto add_state_opts = [](CLI::App* cmd, StateOpts& opts) {
    cmd->add_option("--state", opts.family,
                    "coherent | squeezed_pure | squeezed_db | thermal");
    cmd->add_option("--param", opts.params,
                    "state parameter as key=value (repeatable); keys: mean_x, "
                    "mean_p, r, sqz_db, antisqz_db");
  };

  auto* report_cmd =
      app.add_subcommand("report", "Print the analytic EDR report at one t");
  StateOpts report_state;
  double report_t = 0.5;
  add_state_opts(report_cmd, report_state);
  report_cmd->add_option("--t", report_t, "beam-splitter transmission");

  auto* minimize_cmd = app.add_subcommand(
      "minimize", "Minimize the Branciard LHS over transmission");
  StateOpts minimize_state;
  add_state_opts(minimize_cmd, minimize_state);

  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Estimate the EDR quantities from recorded quadrature data");
  std::string x_file, p_file;
  double analyze_t = 0.5;
  analyze_cmd->add_option("--x", x_file, "x-basis record")->required();
  analyze_cmd->add_option("--p", p_file, "p-basis record")->required();
  analyze_cmd->add_option("--t", analyze_t, "beam-splitter transmission")
      ->required();

  auto* gen_cmd = app.add_subcommand(
      "gen", "Write synthetic recorded-data files (x.csv, p.csv)");
  StateOpts gen_state;
  double gen_t = 0.5;
  std::size_t gen_n = 500000;
  std::uint64_t gen_seed = 0;
  std::string gen_out = ".";
  add_state_opts(gen_cmd, gen_state);
  gen_cmd->add_option("--t", gen_t, "beam-splitter transmission");
  gen_cmd->add_option("--n", gen_n, "samples per record");
  gen_cmd->add_option("--seed", gen_seed, "master seed");
  gen_cmd->add_option("--out", gen_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  if (sweep_cmd->parsed()) {
    const SweepConfig config = config_path.empty()
                                   ? SweepConfig::defaults()
                                   : parse_config_file(config_path);
    const SweepResult result = run_sweep(config);
    write_results(result, out_dir);
    std::printf("wrote %zu rows to %s/{sweep.csv,report.json,bounds.csv}\n",
                result.rows.size(), out_dir.c_str());
    return 0;
  }

  if (report_cmd->parsed()) {
    const GaussianState signal = make_state(
        parse_state_option(report_state.family, parse_params(report_state.params)));
    print_report(build_report(signal, make_vacuum(), Transmission(report_t)));
    return 0;
  }

  if (minimize_cmd->parsed()) {
    const GaussianState signal = make_state(parse_state_option(
        minimize_state.family, parse_params(minimize_state.params)));
    const MinimizeResult min = minimize_branciard(signal, make_vacuum());
    std::printf("t_star   = %.6f\n", min.t_star);
    std::printf("lhs_star = %.6f\n", min.lhs_star);
    return 0;
  }

  if (analyze_cmd->parsed()) {
    print_report(analyze_recorded(x_file, p_file, Transmission(analyze_t)));
    return 0;
  }

  if (gen_cmd->parsed()) {
    const GaussianState signal = make_state(
        parse_state_option(gen_state.family, parse_params(gen_state.params)));
    const Transmission t(gen_t);
    const TwoModeState joint = beam_split(signal, make_vacuum(), t);
    // Same subseed scheme as run_trials trial 0, so `analyze` on these files
    // reproduces the simulated estimators for the same seed.
    const SampleBatch xb = draw_pairs(
        joint, Basis::X, gen_n, derive_seed(gen_seed, 0, 0, 0, kStreamBasisX), t);
    const SampleBatch pb = draw_pairs(
        joint, Basis::P, gen_n, derive_seed(gen_seed, 0, 0, 0, kStreamBasisP), t);
    std::filesystem::create_directories(gen_out);
    write_recorded(xb, std::filesystem::path(gen_out) / "x.csv");
    write_recorded(pb, std::filesystem::path(gen_out) / "p.csv");
    std::printf("wrote %zu sample pairs each to %s/x.csv and %s/p.csv\n", gen_n,
                gen_out.c_str(), gen_out.c_str());
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const edrsim::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const edrsim::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const edrsim::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}
