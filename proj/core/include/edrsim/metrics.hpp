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

#ifndef EDRSIM_METRICS_HPP
#define EDRSIM_METRICS_HPP

#include "edrsim/gaussian.hpp"

namespace edrsim {

// The three error-disturbance inequalities tested here, with A = x of the
// signal and B = p of the signal:
//   Heisenberg:  eps * eta                                >= C_AB
//   Ozawa:       eps*eta + eps*sigma_B + sigma_A*eta      >= C_AB
//   Branciard:   sqrt(eps^2 sigma_B^2 + sigma_A^2 eta^2
//                     + 2 eps eta sqrt(sigma_A^2 sigma_B^2 - C_AB^2)) >= C_AB

/// All EDR quantities evaluated at one beam-splitter transmission.
struct EdrReport {
  double t = 0.0;
  double epsilon = 0.0;   // RMS error on A = x
  double eta = 0.0;       // RMS disturbance of B = p
  double sigma_a = 0.0;   // pre-measurement std dev of x
  double sigma_b = 0.0;   // pre-measurement std dev of p
  double c_ab = 1.0;
  double lhs_heisenberg = 0.0;
  double lhs_ozawa = 0.0;
  double lhs_branciard = 0.0;
  bool heisenberg_violated = false;
  bool ozawa_violated = false;
  bool branciard_violated = false;
  bool branciard_clamped = false;
};

/// |<[x, p]>| / 2 = 1 in shot-noise units, for every Gaussian state.
double commutator_bound();

/// RMS error on the amplitude quadrature:
///   eps^2 = (sqrt(T) - 1)^2 <x_s^2> + R <x_m^2>
/// with second moments taken about zero.
double error_amplitude(const GaussianState& signal, const GaussianState& meter,
                       Transmission t);

/// RMS disturbance of the phase quadrature:
///   eta^2 = (sqrt(R) - 1)^2 <p_s^2> + T <p_m^2>
double disturbance_phase(const GaussianState& signal, const GaussianState& meter,
                         Transmission t);

double ozawa_lhs(double eps, double eta, double sigma_a, double sigma_b);

/// The Branciard left-hand side. The discriminant sigma_A^2 sigma_B^2 - c_ab^2
/// is clamped at zero; `clamped`, when non-null, reports whether the clamp
/// fired (it can with sampled variances, never with analytic physical states).
double branciard_lhs(double eps, double eta, double sigma_a, double sigma_b,
                     double c_ab, bool* clamped = nullptr);

/// Evaluate every EDR quantity for the given signal/meter pair at t.
EdrReport build_report(const GaussianState& signal, const GaussianState& meter,
                       Transmission t);

struct MinimizeResult {
  double t_star;
  double lhs_star;
};

/// Minimum of the Branciard LHS over t in [0, 1]: coarse scan at step 1e-3,
/// then golden-section refinement of the bracketing interval to |dt| < 1e-6.
/// Ties on the coarse grid break toward smaller t.
MinimizeResult minimize_branciard(const GaussianState& signal,
                                  const GaussianState& meter);

}  // namespace edrsim

#endif  // EDRSIM_METRICS_HPP
