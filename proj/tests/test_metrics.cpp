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

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "edrsim/metrics.hpp"
#include "test_support.hpp"

using namespace edrsim;

namespace {

const GaussianState kVacuum = make_vacuum();
const GaussianState kCoherent = make_coherent(0.0, 0.0);
const GaussianState kSqueezed = make_squeezed_db(-2.9, 3.9);
const GaussianState kThermal = make_thermal(0.334);

}  // namespace

TEST_CASE("commutator bound is the state-independent constant 1") {
  CHECK(commutator_bound() == 1.0);
}

TEST_CASE("error_amplitude closed form") {
  CHECK(error_amplitude(kCoherent, kVacuum, Transmission(1.0)) == 0.0);
  CHECK(error_amplitude(kCoherent, kVacuum, Transmission(0.5)) ==
        doctest::Approx(0.765367).epsilon(1e-5));
  CHECK(error_amplitude(kSqueezed, kVacuum, Transmission(0.5)) ==
        doctest::Approx(0.737561).epsilon(1e-5));
}

TEST_CASE("disturbance_phase closed form") {
  CHECK(disturbance_phase(kCoherent, kVacuum, Transmission(0.0)) == 0.0);
  CHECK(disturbance_phase(kCoherent, kVacuum, Transmission(0.5)) ==
        doctest::Approx(0.765367).epsilon(1e-5));
  CHECK(disturbance_phase(kSqueezed, kVacuum, Transmission(0.5)) ==
        doctest::Approx(0.842960).epsilon(1e-5));
}

TEST_CASE("displacement increases the error via the second moment") {
  const GaussianState displaced = make_coherent(2.0, 0.0);
  const double plain = error_amplitude(kCoherent, kVacuum, Transmission(0.5));
  const double shifted = error_amplitude(displaced, kVacuum, Transmission(0.5));
  CHECK(shifted > plain);
  // (sqrt(T)-1)^2 * (1 + mean_x^2) + R
  const double expected =
      std::sqrt(std::pow(std::sqrt(0.5) - 1.0, 2) * 5.0 + 0.5);
  CHECK(shifted == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("ozawa_lhs direct evaluations") {
  CHECK(ozawa_lhs(0.765367, 0.765367, 1.0, 1.0) ==
        doctest::Approx(2.116521).epsilon(1e-5));
  CHECK(ozawa_lhs(0.0, 0.4, 0.7, 1.3) == doctest::Approx(0.7 * 0.4));
  CHECK(ozawa_lhs(0.737561, 0.842960, 0.716143, 1.566751) ==
        doctest::Approx(2.380990).epsilon(1e-5));
}

TEST_CASE("branciard_lhs direct evaluations and clamp flag") {
  bool clamped = true;
  CHECK(branciard_lhs(0.765367, 0.765367, 1.0, 1.0, 1.0, &clamped) ==
        doctest::Approx(1.082392).epsilon(1e-5));
  CHECK_FALSE(clamped);

  CHECK(branciard_lhs(0.737561, 0.842960, 0.716143, 1.566751, 1.0) ==
        doctest::Approx(1.527258).epsilon(1e-5));

  const double sigma_th = std::sqrt(kThermal.var_x());
  const double eps = error_amplitude(kThermal, kVacuum, Transmission(0.5));
  const double eta = disturbance_phase(kThermal, kVacuum, Transmission(0.5));
  CHECK(branciard_lhs(eps, eta, sigma_th, sigma_th, 1.0) ==
        doctest::Approx(1.537021).epsilon(1e-5));

  // Sampled variances can dip below the commutator bound.
  branciard_lhs(0.7, 0.7, 0.99, 1.0, 1.0, &clamped);
  CHECK(clamped);
}

TEST_CASE("build_report at the golden point") {
  const EdrReport r = build_report(kCoherent, kVacuum, Transmission(0.5));
  CHECK(r.epsilon == doctest::Approx(0.765367).epsilon(1e-5));
  CHECK(r.eta == doctest::Approx(0.765367).epsilon(1e-5));
  CHECK(r.lhs_heisenberg == doctest::Approx(0.585786).epsilon(1e-5));
  CHECK(r.lhs_ozawa == doctest::Approx(2.116521).epsilon(1e-5));
  CHECK(r.lhs_branciard == doctest::Approx(1.082392).epsilon(1e-5));
  CHECK(r.heisenberg_violated);
  CHECK_FALSE(r.ozawa_violated);
  CHECK_FALSE(r.branciard_violated);
  CHECK(r.lhs_heisenberg == r.epsilon * r.eta);
}

TEST_CASE("build_report at the transparent boundary") {
  const EdrReport r = build_report(kCoherent, kVacuum, Transmission(1.0));
  CHECK(r.epsilon == 0.0);
  CHECK(r.eta == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.lhs_heisenberg == 0.0);
  CHECK(r.heisenberg_violated);
  CHECK(r.lhs_ozawa == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.lhs_branciard == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("build_report for the thermal state") {
  const EdrReport r = build_report(kThermal, kVacuum, Transmission(0.5));
  CHECK(r.epsilon == doctest::Approx(0.778234).epsilon(1e-5));
  CHECK(r.eta == doctest::Approx(0.778234).epsilon(1e-5));
  CHECK(r.heisenberg_violated);
  CHECK(r.lhs_ozawa == doctest::Approx(2.332932).epsilon(1e-5));
  CHECK(r.lhs_branciard == doctest::Approx(1.537021).epsilon(1e-5));
}

TEST_CASE("closed forms match the output-covariance expressions") {
  const std::vector<GaussianState> states = {kCoherent, kSqueezed, kThermal};
  for (const GaussianState& signal : states) {
    for (int i = 1; i <= 99; ++i) {
      const Transmission t(i * 0.01);
      const TwoModeState joint = beam_split(signal, kVacuum, t);
      CHECK(error_amplitude(signal, kVacuum, t) ==
            doctest::Approx(testing::error_from_output_covariance(joint, t))
                .epsilon(1e-12));
      CHECK(disturbance_phase(signal, kVacuum, t) ==
            doctest::Approx(
                testing::disturbance_from_output_covariance(joint, t))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("branciard is tighter than ozawa on random physical inputs") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const GaussianState signal = testing::random_physical_state(rng);
    const Transmission t(unit(rng));
    const EdrReport r = build_report(signal, kVacuum, t);
    CHECK(r.lhs_branciard <= r.lhs_ozawa + 1e-9);
    CHECK(r.lhs_ozawa >= 1.0 - 1e-9);
    CHECK(r.lhs_branciard >= 1.0 - 1e-9);
  }
}

TEST_CASE("coherent signal violates heisenberg across the open interval") {
  for (int i = 1; i < 1000; ++i) {
    const EdrReport r =
        build_report(kCoherent, kVacuum, Transmission(i * 1e-3));
    CHECK(r.lhs_heisenberg < 1.0);
  }
  // The maximum of eps*eta sits at t = 0.5.
  CHECK(build_report(kCoherent, kVacuum, Transmission(0.5)).lhs_heisenberg ==
        doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("symmetric states swap error and disturbance under t -> 1-t") {
  for (const GaussianState& signal : {kCoherent, kThermal}) {
    for (int i = 1; i < 100; ++i) {
      const double t = i * 0.01;
      const EdrReport a = build_report(signal, kVacuum, Transmission(t));
      const EdrReport b = build_report(signal, kVacuum, Transmission(1.0 - t));
      CHECK(a.epsilon == doctest::Approx(b.eta).epsilon(1e-12));
      CHECK(a.eta == doctest::Approx(b.epsilon).epsilon(1e-12));
    }
  }
}

TEST_CASE("minimize_branciard finds the symmetric minima at t = 0.5") {
  const MinimizeResult coh = minimize_branciard(kCoherent, kVacuum);
  CHECK(coh.t_star == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(coh.lhs_star == doctest::Approx(1.082392).epsilon(1e-5));

  const MinimizeResult th = minimize_branciard(kThermal, kVacuum);
  CHECK(th.t_star == doctest::Approx(0.5).epsilon(1e-3));
  CHECK(th.lhs_star == doctest::Approx(1.537021).epsilon(1e-5));
}

TEST_CASE("minimize_branciard matches a dense brute-force grid") {
  for (const GaussianState& signal : {kCoherent, kSqueezed, kThermal}) {
    double grid_t = 0.0;
    double grid_f = build_report(signal, kVacuum, Transmission(0.0)).lhs_branciard;
    for (int i = 1; i <= 10000; ++i) {
      const double t = i * 1e-4;
      const double f = build_report(signal, kVacuum, Transmission(t)).lhs_branciard;
      if (f < grid_f) {
        grid_f = f;
        grid_t = t;
      }
    }
    const MinimizeResult min = minimize_branciard(signal, kVacuum);
    CHECK(min.t_star == doctest::Approx(grid_t).epsilon(2e-4));
    CHECK(min.lhs_star <= grid_f + 1e-12);
  }
}

TEST_CASE("squeezed-state minimum sits in the high-transmission basin") {
  const MinimizeResult min = minimize_branciard(kSqueezed, kVacuum);
  CHECK(min.t_star > 0.93);
  CHECK(min.t_star < 0.99);
  CHECK(min.lhs_star == doctest::Approx(1.3114).epsilon(0.005 / 1.3114));
}
