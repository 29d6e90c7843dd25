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

#ifndef EDRSIM_SAMPLING_HPP
#define EDRSIM_SAMPLING_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "edrsim/gaussian.hpp"
#include "edrsim/metrics.hpp"
#include "edrsim/rng.hpp"

namespace edrsim {

/// Which commuting pair a record holds: X = (x_c, x_d), P = (p_c, p_d).
/// The two bases come from separate measurement runs; a joint record of all
/// four quadratures does not exist.
enum class Basis { X, P };

const char* basis_name(Basis basis);

/// A finite record of n simultaneous two-channel quadrature samples.
struct SampleBatch {
  Basis basis = Basis::X;
  std::vector<double> ch1;  // mode c
  std::vector<double> ch2;  // mode d
  std::uint64_t seed = 0;
  Transmission t{0.5};

  std::size_t n() const { return ch1.size(); }
};

/// Lower-triangular L with L L^T = cov. If the factorization fails, one
/// diagonal jitter of 1e-10 is applied and retried; a second failure throws
/// NumericalError.
Eigen::Matrix2d cholesky_factor(const Eigen::Matrix2d& cov);

/// Draw n iid samples of the selected commuting pair from the two-mode
/// output state (the other two quadratures are marginalized out). Means are
/// included. Deterministic in the seed.
SampleBatch draw_pairs(const TwoModeState& joint, Basis basis, std::size_t n,
                       std::uint64_t seed, Transmission t);

/// Mean of squares about zero. Throws ValidationError on empty input.
double empirical_second_moment(std::span<const double> samples);

/// sqrt(< [(1 - sqrt(T)) x_c - sqrt(R) x_d]^2 >) over the batch.
/// Requires basis X.
double empirical_error(const SampleBatch& batch, Transmission t);

/// sqrt(< [(1 - sqrt(R)) p_d - sqrt(T) p_c]^2 >) over the batch.
/// Requires basis P.
double empirical_disturbance(const SampleBatch& batch, Transmission t);

/// Per-quantity summary over repeated trials. The error bar is the RMS
/// deviation of the per-trial values about their mean (divisor = trials).
struct TrialSummary {
  double mean = 0.0;
  double rms_error_bar = 0.0;
  std::vector<double> per_trial;

  std::size_t trials() const { return per_trial.size(); }
};

TrialSummary summarize(std::vector<double> per_trial);

/// One summary per estimated quantity, plus how many trials tripped the
/// Branciard discriminant clamp.
struct TrialSet {
  TrialSummary epsilon;
  TrialSummary eta;
  TrialSummary sigma_a;
  TrialSummary sigma_b;
  TrialSummary lhs_heisenberg;
  TrialSummary lhs_ozawa;
  TrialSummary lhs_branciard;
  int clamp_count = 0;
};

// Stream tags used in derive_seed for the four draws inside one trial.
inline constexpr std::uint64_t kStreamBasisX = 0;
inline constexpr std::uint64_t kStreamBasisP = 1;
inline constexpr std::uint64_t kStreamSigmaA = 2;
inline constexpr std::uint64_t kStreamSigmaB = 3;

/// Simulate the full repeated measurement: each trial draws fresh X and P
/// output records of size n plus direct pre-measurement records of the
/// signal's x and p (for sigma_A, sigma_B), then evaluates all estimators.
/// Trial k, stream s uses derive_seed(seed, state_index, t_index, k, s).
TrialSet run_trials(const GaussianState& signal, const GaussianState& meter,
                    Transmission t, std::size_t n, int trials,
                    std::uint64_t seed, std::uint64_t state_index = 0,
                    std::uint64_t t_index = 0);

}  // namespace edrsim

#endif  // EDRSIM_SAMPLING_HPP
