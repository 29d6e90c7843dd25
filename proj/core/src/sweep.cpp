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

#include "edrsim/sweep.hpp"

#include <cmath>
#include <sstream>

namespace edrsim {

std::string StateSpec::label() const {
  std::ostringstream out;
  switch (family) {
    case StateFamily::Coherent:
      out << "coherent(" << param1 << "," << param2 << ")";
      break;
    case StateFamily::SqueezedPure:
      out << "squeezed_pure(r=" << param1 << ")";
      break;
    case StateFamily::SqueezedDb:
      out << "squeezed_db(" << param1 << "," << param2 << ")";
      break;
    case StateFamily::Thermal:
      out << "thermal(r=" << param1 << ")";
      break;
  }
  return out.str();
}

GaussianState make_state(const StateSpec& spec) {
  switch (spec.family) {
    case StateFamily::Coherent:
      return make_coherent(spec.param1, spec.param2);
    case StateFamily::SqueezedPure:
      return make_squeezed_pure(spec.param1);
    case StateFamily::SqueezedDb:
      return make_squeezed_db(spec.param1, spec.param2);
    case StateFamily::Thermal:
      return make_thermal(spec.param1);
  }
  throw ValidationError("make_state: unknown state family");
}

SweepConfig SweepConfig::defaults() {
  SweepConfig c;
  c.states = {
      {StateFamily::Coherent, 0.0, 0.0},
      {StateFamily::SqueezedDb, -2.9, 3.9},
      {StateFamily::Thermal, 0.334, 0.0},
  };
  return c;
}

void SweepConfig::validate() const {
  if (states.empty()) throw ValidationError("states: at least one required");
  if (!(t_start <= t_stop))
    throw ValidationError("t_start: must be <= t_stop");
  if (!(t_step > 0.0)) throw ValidationError("t_step: must be > 0");
  if (!(t_start >= 0.0 && t_stop <= 1.0))
    throw ValidationError("t_start/t_stop: grid must lie in [0, 1]");
  if (n < 1) throw ValidationError("n: must be >= 1");
  if (trials < 1) throw ValidationError("trials: must be >= 1");
  if (loss_eff && !(*loss_eff >= 0.0 && *loss_eff <= 1.0))
    throw ValidationError("loss_eff: must be in [0, 1]");
  for (const StateSpec& spec : states) make_state(spec);  // parameter checks
}

std::vector<double> SweepConfig::t_grid() const {
  std::vector<double> grid;
  // Index-based stepping avoids accumulation drift across the grid.
  const auto count =
      static_cast<std::size_t>(std::floor((t_stop - t_start) / t_step + 1e-9));
  for (std::size_t i = 0; i <= count; ++i) {
    grid.push_back(t_start + static_cast<double>(i) * t_step);
  }
  return grid;
}

SweepResult run_sweep(const SweepConfig& config) {
  config.validate();
  const std::vector<double> grid = config.t_grid();
  const GaussianState meter = make_vacuum();

  SweepResult result;
  result.config = config;
  result.rows.reserve(config.states.size() * grid.size());
  for (std::size_t si = 0; si < config.states.size(); ++si) {
    GaussianState signal = make_state(config.states[si]);
    if (config.loss_eff) signal = apply_loss(signal, *config.loss_eff);
    for (std::size_t ti = 0; ti < grid.size(); ++ti) {
      const Transmission t(grid[ti]);
      SweepRow row;
      row.state = config.states[si].label();
      row.t = t.t;
      row.analytic = build_report(signal, meter, t);
      if (config.include_empirical) {
        row.empirical = run_trials(signal, meter, t, config.n, config.trials,
                                   config.master_seed, si, ti);
      }
      result.rows.push_back(std::move(row));
    }
  }
  return result;
}

DeviationSummary compare_analytic_empirical(const SweepResult& result) {
  struct Probe {
    const char* name;
    double (*analytic)(const EdrReport&);
    const TrialSummary& (*summary)(const TrialSet&);
  };
  static const Probe probes[] = {
      {"epsilon", [](const EdrReport& r) { return r.epsilon; },
       [](const TrialSet& s) -> const TrialSummary& { return s.epsilon; }},
      {"eta", [](const EdrReport& r) { return r.eta; },
       [](const TrialSet& s) -> const TrialSummary& { return s.eta; }},
      {"sigma_a", [](const EdrReport& r) { return r.sigma_a; },
       [](const TrialSet& s) -> const TrialSummary& { return s.sigma_a; }},
      {"sigma_b", [](const EdrReport& r) { return r.sigma_b; },
       [](const TrialSet& s) -> const TrialSummary& { return s.sigma_b; }},
      {"lhs_heisenberg",
       [](const EdrReport& r) { return r.lhs_heisenberg; },
       [](const TrialSet& s) -> const TrialSummary& {
         return s.lhs_heisenberg;
       }},
      {"lhs_ozawa", [](const EdrReport& r) { return r.lhs_ozawa; },
       [](const TrialSet& s) -> const TrialSummary& { return s.lhs_ozawa; }},
      {"lhs_branciard",
       [](const EdrReport& r) { return r.lhs_branciard; },
       [](const TrialSet& s) -> const TrialSummary& {
         return s.lhs_branciard;
       }},
  };

  DeviationSummary summary;
  for (const Probe& probe : probes) {
    QuantityDeviation dev;
    dev.name = probe.name;
    int points = 0;
    for (const SweepRow& row : result.rows) {
      if (!row.empirical) continue;
      ++points;
      const double analytic = probe.analytic(row.analytic);
      const TrialSummary& ts = probe.summary(*row.empirical);
      const double abs_dev = std::abs(ts.mean - analytic);
      dev.max_abs = std::max(dev.max_abs, abs_dev);
      dev.mean_abs += abs_dev;
      if (ts.rms_error_bar > 0.0 && abs_dev > 3.0 * ts.rms_error_bar) {
        ++dev.outside_3_error_bars;
      }
    }
    if (points == 0) {
      throw ValidationError("compare_analytic_empirical: no empirical data");
    }
    dev.mean_abs /= points;
    summary.points = points;
    summary.quantities.push_back(std::move(dev));
  }
  return summary;
}

}  // namespace edrsim
