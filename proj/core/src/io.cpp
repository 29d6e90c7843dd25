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

#include "edrsim/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace edrsim {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& value, int line, const std::string& key) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != value.size() || value.empty()) {
    throw ValidationError("line " + std::to_string(line) + ": key '" + key +
                          "': cannot parse '" + value + "' as a real number");
  }
  return v;
}

std::uint64_t parse_uint(const std::string& value, int line,
                         const std::string& key) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(value, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != value.size() || value.empty()) {
    throw ValidationError("line " + std::to_string(line) + ": key '" + key +
                          "': cannot parse '" + value +
                          "' as a non-negative integer");
  }
  return v;
}

std::vector<double> parse_real_list(const std::string& value, int line,
                                    const std::string& key,
                                    std::size_t expected) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(parse_double(trim(item), line, key));
  }
  if (out.size() != expected) {
    throw ValidationError("line " + std::to_string(line) + ": key '" + key +
                          "' expects " + std::to_string(expected) +
                          " comma-separated value(s)");
  }
  return out;
}

const char* family_name(StateFamily family) {
  switch (family) {
    case StateFamily::Coherent: return "coherent";
    case StateFamily::SqueezedPure: return "squeezed_pure";
    case StateFamily::SqueezedDb: return "squeezed_db";
    case StateFamily::Thermal: return "thermal";
  }
  return "?";
}

StateFamily family_from_name(const std::string& name) {
  if (name == "coherent") return StateFamily::Coherent;
  if (name == "squeezed_pure") return StateFamily::SqueezedPure;
  if (name == "squeezed_db") return StateFamily::SqueezedDb;
  if (name == "thermal") return StateFamily::Thermal;
  throw ValidationError("unknown state family '" + name + "'");
}

}  // namespace

SweepConfig parse_config(const std::string& text) {
  SweepConfig config = SweepConfig::defaults();
  bool states_overridden = false;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": expected key=value, got '" + line + "'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    const auto add_state = [&](StateFamily family, double p1, double p2) {
      if (!states_overridden) {
        config.states.clear();
        states_overridden = true;
      }
      config.states.push_back({family, p1, p2});
    };

    if (key == "t_start") {
      config.t_start = parse_double(value, line_no, key);
    } else if (key == "t_stop") {
      config.t_stop = parse_double(value, line_no, key);
    } else if (key == "t_step") {
      config.t_step = parse_double(value, line_no, key);
    } else if (key == "n") {
      config.n = parse_uint(value, line_no, key);
    } else if (key == "trials") {
      config.trials = static_cast<int>(parse_uint(value, line_no, key));
    } else if (key == "seed") {
      config.master_seed = parse_uint(value, line_no, key);
    } else if (key == "empirical") {
      if (value == "1" || value == "true") {
        config.include_empirical = true;
      } else if (value == "0" || value == "false") {
        config.include_empirical = false;
      } else {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": key 'empirical' expects true/false/1/0");
      }
    } else if (key == "loss_eff") {
      config.loss_eff = parse_double(value, line_no, key);
    } else if (key == "coherent") {
      if (value.empty()) {
        add_state(StateFamily::Coherent, 0.0, 0.0);
      } else {
        const auto v = parse_real_list(value, line_no, key, 2);
        add_state(StateFamily::Coherent, v[0], v[1]);
      }
    } else if (key == "squeezed_pure") {
      add_state(StateFamily::SqueezedPure,
                parse_double(value, line_no, key), 0.0);
    } else if (key == "squeezed_db") {
      const auto v = parse_real_list(value, line_no, key, 2);
      add_state(StateFamily::SqueezedDb, v[0], v[1]);
    } else if (key == "thermal") {
      add_state(StateFamily::Thermal, parse_double(value, line_no, key), 0.0);
    } else {
      throw ValidationError("line " + std::to_string(line_no) +
                            ": unknown key '" + key + "'");
    }
  }

  config.validate();
  return config;
}

SweepConfig parse_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open config file: " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

json config_to_json(const SweepConfig& c) {
  json states = json::array();
  for (const StateSpec& s : c.states) {
    states.push_back({{"family", family_name(s.family)},
                      {"param1", s.param1},
                      {"param2", s.param2}});
  }
  json j = {{"states", states},
            {"t_start", c.t_start},
            {"t_stop", c.t_stop},
            {"t_step", c.t_step},
            {"n", c.n},
            {"trials", c.trials},
            {"master_seed", c.master_seed},
            {"include_empirical", c.include_empirical}};
  j["loss_eff"] = c.loss_eff ? json(*c.loss_eff) : json(nullptr);
  return j;
}

SweepConfig config_from_json(const json& j) {
  SweepConfig c;
  c.states.clear();
  for (const json& s : j.at("states")) {
    c.states.push_back({family_from_name(s.at("family").get<std::string>()),
                        s.at("param1").get<double>(),
                        s.at("param2").get<double>()});
  }
  c.t_start = j.at("t_start").get<double>();
  c.t_stop = j.at("t_stop").get<double>();
  c.t_step = j.at("t_step").get<double>();
  c.n = j.at("n").get<std::size_t>();
  c.trials = j.at("trials").get<int>();
  c.master_seed = j.at("master_seed").get<std::uint64_t>();
  c.include_empirical = j.at("include_empirical").get<bool>();
  if (!j.at("loss_eff").is_null()) c.loss_eff = j.at("loss_eff").get<double>();
  return c;
}

json report_to_json(const EdrReport& r) {
  return {{"t", r.t},
          {"epsilon", r.epsilon},
          {"eta", r.eta},
          {"sigma_a", r.sigma_a},
          {"sigma_b", r.sigma_b},
          {"c_ab", r.c_ab},
          {"lhs_heisenberg", r.lhs_heisenberg},
          {"lhs_ozawa", r.lhs_ozawa},
          {"lhs_branciard", r.lhs_branciard},
          {"heisenberg_violated", r.heisenberg_violated},
          {"ozawa_violated", r.ozawa_violated},
          {"branciard_violated", r.branciard_violated},
          {"branciard_clamped", r.branciard_clamped}};
}

EdrReport report_from_json(const json& j) {
  EdrReport r;
  r.t = j.at("t").get<double>();
  r.epsilon = j.at("epsilon").get<double>();
  r.eta = j.at("eta").get<double>();
  r.sigma_a = j.at("sigma_a").get<double>();
  r.sigma_b = j.at("sigma_b").get<double>();
  r.c_ab = j.at("c_ab").get<double>();
  r.lhs_heisenberg = j.at("lhs_heisenberg").get<double>();
  r.lhs_ozawa = j.at("lhs_ozawa").get<double>();
  r.lhs_branciard = j.at("lhs_branciard").get<double>();
  r.heisenberg_violated = j.at("heisenberg_violated").get<bool>();
  r.ozawa_violated = j.at("ozawa_violated").get<bool>();
  r.branciard_violated = j.at("branciard_violated").get<bool>();
  r.branciard_clamped = j.at("branciard_clamped").get<bool>();
  return r;
}

json summary_to_json(const TrialSummary& s) {
  return {{"mean", s.mean},
          {"rms_error_bar", s.rms_error_bar},
          {"per_trial", s.per_trial}};
}

TrialSummary summary_from_json(const json& j) {
  TrialSummary s;
  s.mean = j.at("mean").get<double>();
  s.rms_error_bar = j.at("rms_error_bar").get<double>();
  s.per_trial = j.at("per_trial").get<std::vector<double>>();
  return s;
}

json trial_set_to_json(const TrialSet& s) {
  return {{"epsilon", summary_to_json(s.epsilon)},
          {"eta", summary_to_json(s.eta)},
          {"sigma_a", summary_to_json(s.sigma_a)},
          {"sigma_b", summary_to_json(s.sigma_b)},
          {"lhs_heisenberg", summary_to_json(s.lhs_heisenberg)},
          {"lhs_ozawa", summary_to_json(s.lhs_ozawa)},
          {"lhs_branciard", summary_to_json(s.lhs_branciard)},
          {"clamp_count", s.clamp_count}};
}

TrialSet trial_set_from_json(const json& j) {
  TrialSet s;
  s.epsilon = summary_from_json(j.at("epsilon"));
  s.eta = summary_from_json(j.at("eta"));
  s.sigma_a = summary_from_json(j.at("sigma_a"));
  s.sigma_b = summary_from_json(j.at("sigma_b"));
  s.lhs_heisenberg = summary_from_json(j.at("lhs_heisenberg"));
  s.lhs_ozawa = summary_from_json(j.at("lhs_ozawa"));
  s.lhs_branciard = summary_from_json(j.at("lhs_branciard"));
  s.clamp_count = j.at("clamp_count").get<int>();
  return s;
}

void write_sweep_csv(const SweepResult& result, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << "# format_version=" << kFormatVersion << "\n";
  out << "state,t,epsilon,eta,sigma_a,sigma_b,lhs_heisenberg,lhs_ozawa,"
         "lhs_branciard,c_ab";
  const bool empirical = result.config.include_empirical;
  if (empirical) {
    for (const char* q : {"epsilon", "eta", "sigma_a", "sigma_b",
                          "lhs_heisenberg", "lhs_ozawa", "lhs_branciard"}) {
      out << ",emp_" << q << ",emp_" << q << "_err";
    }
    out << ",clamp_count";
  }
  out << "\n";
  for (const SweepRow& row : result.rows) {
    const EdrReport& a = row.analytic;
    out << row.state << ',' << format_real(row.t) << ','
        << format_real(a.epsilon) << ',' << format_real(a.eta) << ','
        << format_real(a.sigma_a) << ',' << format_real(a.sigma_b) << ','
        << format_real(a.lhs_heisenberg) << ',' << format_real(a.lhs_ozawa)
        << ',' << format_real(a.lhs_branciard) << ',' << format_real(a.c_ab);
    if (empirical) {
      const TrialSet& e = *row.empirical;
      for (const TrialSummary* s :
           {&e.epsilon, &e.eta, &e.sigma_a, &e.sigma_b, &e.lhs_heisenberg,
            &e.lhs_ozawa, &e.lhs_branciard}) {
        out << ',' << format_real(s->mean) << ','
            << format_real(s->rms_error_bar);
      }
      out << ',' << e.clamp_count;
    }
    out << "\n";
  }
}

// Bound curves in the (epsilon, eta) plane for fixed sigma_a, sigma_b, c:
//   Heisenberg: eta = c / eps
//   Ozawa:      eta = (c - eps*sigma_b) / (eps + sigma_a), floored at 0
//   Branciard:  eta = (c*sqrt(sigma_a^2 - eps^2) - eps*g) / sigma_a^2
//               with g = sqrt(sigma_a^2 sigma_b^2 - c^2), floored at 0
double bound_eta_heisenberg(double eps, double c) { return c / eps; }

double bound_eta_ozawa(double eps, double sigma_a, double sigma_b, double c) {
  return std::max(0.0, (c - eps * sigma_b) / (eps + sigma_a));
}

double bound_eta_branciard(double eps, double sigma_a, double sigma_b,
                           double c) {
  const double g =
      std::sqrt(std::max(0.0, sigma_a * sigma_a * sigma_b * sigma_b - c * c));
  const double root =
      std::sqrt(std::max(0.0, sigma_a * sigma_a - eps * eps));
  return std::max(0.0, (c * root - eps * g) / (sigma_a * sigma_a));
}

void write_bounds_csv(const SweepResult& result,
                      const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << "# format_version=" << kFormatVersion << "\n";
  out << "state,kind,epsilon,eta,eta_heisenberg,eta_ozawa,eta_branciard\n";

  std::vector<std::string> seen;
  for (const SweepRow& row : result.rows) {
    if (std::find(seen.begin(), seen.end(), row.state) != seen.end()) continue;
    seen.push_back(row.state);

    double eps_max = 0.0;
    const EdrReport* first = nullptr;
    for (const SweepRow& r : result.rows) {
      if (r.state != row.state) continue;
      if (first == nullptr) first = &r.analytic;
      eps_max = std::max(eps_max, r.analytic.epsilon);
      out << r.state << ",trajectory," << format_real(r.analytic.epsilon)
          << ',' << format_real(r.analytic.eta) << ",,,\n";
    }
    const double sigma_a = first->sigma_a;
    const double sigma_b = first->sigma_b;
    const double c = first->c_ab;
    constexpr int kGridPoints = 100;
    for (int i = 1; i <= kGridPoints; ++i) {
      const double eps = eps_max * i / kGridPoints;
      out << row.state << ",bound," << format_real(eps) << ",,"
          << format_real(bound_eta_heisenberg(eps, c)) << ','
          << format_real(bound_eta_ozawa(eps, sigma_a, sigma_b, c)) << ','
          << format_real(bound_eta_branciard(eps, sigma_a, sigma_b, c))
          << "\n";
    }
  }
}

std::string iso_timestamp() {
  char buf[32];
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

void write_results(const SweepResult& result, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory: " + dir.string());

  write_sweep_csv(result, dir / "sweep.csv");
  write_bounds_csv(result, dir / "bounds.csv");

  json rows = json::array();
  for (const SweepRow& row : result.rows) {
    json jr = {{"state", row.state},
               {"t", row.t},
               {"analytic", report_to_json(row.analytic)}};
    jr["empirical"] =
        row.empirical ? trial_set_to_json(*row.empirical) : json(nullptr);
    rows.push_back(std::move(jr));
  }
  const json doc = {{"format_version", kFormatVersion},
                    {"version", result.version},
                    {"generated_at", iso_timestamp()},
                    {"config", config_to_json(result.config)},
                    {"rows", rows}};

  const std::filesystem::path path = dir / "report.json";
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << doc.dump(2) << "\n";
}

SweepResult read_report_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open report: " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw IoError("malformed report json " + path.string() + ": " + e.what());
  }
  SweepResult result;
  result.version = doc.at("version").get<std::string>();
  result.config = config_from_json(doc.at("config"));
  for (const json& jr : doc.at("rows")) {
    SweepRow row;
    row.state = jr.at("state").get<std::string>();
    row.t = jr.at("t").get<double>();
    row.analytic = report_from_json(jr.at("analytic"));
    if (!jr.at("empirical").is_null()) {
      row.empirical = trial_set_from_json(jr.at("empirical"));
    }
    result.rows.push_back(std::move(row));
  }
  return result;
}

void write_recorded(const SampleBatch& batch, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path.string());
  out << "# format_version=" << kFormatVersion << "\n";
  out << "# basis=" << basis_name(batch.basis) << "\n";
  out << "# t=" << format_real(batch.t.t) << "\n";
  out << "# n=" << batch.n() << "\n";
  out << "# seed=" << batch.seed << "\n";
  for (std::size_t i = 0; i < batch.n(); ++i) {
    out << format_real(batch.ch1[i]) << ',' << format_real(batch.ch2[i])
        << "\n";
  }
}

RecordedDataset read_recorded(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open recorded data file: " + path.string());

  RecordedDataset ds;
  ds.source = path.string();
  bool have_basis = false;
  bool have_t = false;
  bool have_n = false;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    if (stripped[0] == '#') {
      const std::string meta = trim(stripped.substr(1));
      const auto eq = meta.find('=');
      if (eq == std::string::npos) continue;  // free-form comment
      const std::string key = trim(meta.substr(0, eq));
      const std::string value = trim(meta.substr(eq + 1));
      if (key == "basis") {
        if (value == "x") {
          ds.basis = Basis::X;
        } else if (value == "p") {
          ds.basis = Basis::P;
        } else {
          throw IoError(path.string() + ":" + std::to_string(line_no) +
                        ": basis must be 'x' or 'p', got '" + value + "'");
        }
        have_basis = true;
      } else if (key == "t") {
        try {
          ds.t = Transmission(std::stod(value));
        } catch (const std::exception&) {
          throw IoError(path.string() + ":" + std::to_string(line_no) +
                        ": cannot parse t value '" + value + "'");
        }
        have_t = true;
      } else if (key == "n") {
        ds.declared_n = std::stoull(value);
        have_n = true;
      }
      // Unknown metadata keys (format_version, seed, ...) pass through.
      continue;
    }

    const auto comma = stripped.find(',');
    if (comma == std::string::npos) {
      throw IoError(path.string() + ":" + std::to_string(line_no) +
                    ": expected 'ch1,ch2', got '" + stripped + "'");
    }
    try {
      std::size_t p1 = 0, p2 = 0;
      const std::string s1 = trim(stripped.substr(0, comma));
      const std::string s2 = trim(stripped.substr(comma + 1));
      const double v1 = std::stod(s1, &p1);
      const double v2 = std::stod(s2, &p2);
      if (p1 != s1.size() || p2 != s2.size()) throw std::invalid_argument("");
      ds.ch1.push_back(v1);
      ds.ch2.push_back(v2);
    } catch (const std::exception&) {
      throw IoError(path.string() + ":" + std::to_string(line_no) +
                    ": malformed sample row '" + stripped + "'");
    }
  }

  if (!have_basis) {
    throw IoError(path.string() + ": missing '# basis=' metadata");
  }
  if (!have_t) {
    throw IoError(path.string() + ": missing '# t=' metadata");
  }
  if (ds.ch1.empty()) {
    throw IoError(path.string() + ": no samples");
  }
  if (have_n && ds.declared_n != ds.ch1.size()) {
    throw IoError(path.string() + ": declared n=" +
                  std::to_string(ds.declared_n) + " but parsed " +
                  std::to_string(ds.ch1.size()) + " rows");
  }
  if (!have_n) ds.declared_n = ds.ch1.size();
  return ds;
}

EdrReport analyze_batches(const SampleBatch& x_batch, const SampleBatch& p_batch,
                          Transmission t) {
  if (x_batch.basis != Basis::X || p_batch.basis != Basis::P) {
    throw ValidationError("analyze: basis mismatch (need one x and one p record)");
  }
  const double ct = std::sqrt(t.t);
  const double cr = std::sqrt(t.reflection());

  // Inverse beam-splitter reconstruction of the input-mode quadrature:
  // x_s = sqrt(T) x_c + sqrt(R) x_d, p_s = sqrt(T) p_c + sqrt(R) p_d.
  const auto reconstructed_m2 = [&](const SampleBatch& b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < b.n(); ++i) {
      const double v = ct * b.ch1[i] + cr * b.ch2[i];
      acc += v * v;
    }
    return acc / static_cast<double>(b.n());
  };

  EdrReport r;
  r.t = t.t;
  r.epsilon = empirical_error(x_batch, t);
  r.eta = empirical_disturbance(p_batch, t);
  r.sigma_a = std::sqrt(reconstructed_m2(x_batch));
  r.sigma_b = std::sqrt(reconstructed_m2(p_batch));
  r.c_ab = commutator_bound();
  r.lhs_heisenberg = r.epsilon * r.eta;
  r.lhs_ozawa = ozawa_lhs(r.epsilon, r.eta, r.sigma_a, r.sigma_b);
  r.lhs_branciard = branciard_lhs(r.epsilon, r.eta, r.sigma_a, r.sigma_b,
                                  r.c_ab, &r.branciard_clamped);
  const double bound = r.c_ab - 1e-9;
  r.heisenberg_violated = r.lhs_heisenberg < bound;
  r.ozawa_violated = r.lhs_ozawa < bound;
  r.branciard_violated = r.lhs_branciard < bound;
  return r;
}

EdrReport analyze_recorded(const std::filesystem::path& x_file,
                           const std::filesystem::path& p_file, Transmission t) {
  const RecordedDataset xd = read_recorded(x_file);
  const RecordedDataset pd = read_recorded(p_file);
  if (xd.basis != Basis::X) {
    throw ValidationError("basis mismatch: " + x_file.string() +
                          " is not an x-basis record");
  }
  if (pd.basis != Basis::P) {
    throw ValidationError("basis mismatch: " + p_file.string() +
                          " is not a p-basis record");
  }
  constexpr double kTTol = 1e-12;
  if (std::abs(xd.t.t - t.t) > kTTol || std::abs(pd.t.t - t.t) > kTTol) {
    throw ValidationError("t mismatch: records carry t=" +
                          format_real(xd.t.t) + " / " + format_real(pd.t.t) +
                          ", requested t=" + format_real(t.t));
  }

  SampleBatch xb{Basis::X, xd.ch1, xd.ch2, 0, xd.t};
  SampleBatch pb{Basis::P, pd.ch1, pd.ch2, 0, pd.t};
  return analyze_batches(xb, pb, t);
}

}  // namespace edrsim
