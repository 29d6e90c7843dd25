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

#include "edrsim/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace edrsim {

double commutator_bound() { return 1.0; }

double error_amplitude(const GaussianState& signal, const GaussianState& meter,
                       Transmission t) {
  const double a = std::sqrt(t.t) - 1.0;
  return std::sqrt(a * a * signal.second_moment_x() +
                   t.reflection() * meter.second_moment_x());
}

double disturbance_phase(const GaussianState& signal, const GaussianState& meter,
                         Transmission t) {
  const double a = std::sqrt(t.reflection()) - 1.0;
  return std::sqrt(a * a * signal.second_moment_p() +
                   t.t * meter.second_moment_p());
}

double ozawa_lhs(double eps, double eta, double sigma_a, double sigma_b) {
  return eps * eta + eps * sigma_b + sigma_a * eta;
}

double branciard_lhs(double eps, double eta, double sigma_a, double sigma_b,
                     double c_ab, bool* clamped) {
  const double discriminant =
      sigma_a * sigma_a * sigma_b * sigma_b - c_ab * c_ab;
  if (clamped != nullptr) *clamped = discriminant < 0.0;
  const double cross = std::sqrt(std::max(0.0, discriminant));
  return std::sqrt(eps * eps * sigma_b * sigma_b +
                   sigma_a * sigma_a * eta * eta + 2.0 * eps * eta * cross);
}

EdrReport build_report(const GaussianState& signal, const GaussianState& meter,
                       Transmission t) {
  EdrReport r;
  r.t = t.t;
  r.epsilon = error_amplitude(signal, meter, t);
  r.eta = disturbance_phase(signal, meter, t);
  r.sigma_a = std::sqrt(signal.var_x());
  r.sigma_b = std::sqrt(signal.var_p());
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

MinimizeResult minimize_branciard(const GaussianState& signal,
                                  const GaussianState& meter) {
  const auto objective = [&](double t) {
    return build_report(signal, meter, Transmission(t)).lhs_branciard;
  };

  // Coarse scan, ties toward smaller t.
  constexpr double kCoarseStep = 1e-3;
  const int steps = static_cast<int>(std::round(1.0 / kCoarseStep));
  double best_t = 0.0;
  double best_f = objective(0.0);
  for (int i = 1; i <= steps; ++i) {
    const double t = std::min(1.0, i * kCoarseStep);
    const double f = objective(t);
    if (f < best_f) {
      best_f = f;
      best_t = t;
    }
  }

  // Golden-section refinement of the bracketing coarse interval.
  double lo = std::max(0.0, best_t - kCoarseStep);
  double hi = std::min(1.0, best_t + kCoarseStep);
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = hi - kInvPhi * (hi - lo);
  double x2 = lo + kInvPhi * (hi - lo);
  double f1 = objective(x1);
  double f2 = objective(x2);
  while (hi - lo > 1e-6) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - kInvPhi * (hi - lo);
      f1 = objective(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + kInvPhi * (hi - lo);
      f2 = objective(x2);
    }
  }
  const double t_star = 0.5 * (lo + hi);
  return {t_star, objective(t_star)};
}

}  // namespace edrsim
