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

#include "edrsim/sampling.hpp"

#include <cmath>

namespace edrsim {

const char* basis_name(Basis basis) { return basis == Basis::X ? "x" : "p"; }

Eigen::Matrix2d cholesky_factor(const Eigen::Matrix2d& cov) {
  Eigen::LLT<Eigen::Matrix2d> llt(cov);
  if (llt.info() == Eigen::Success) {
    return llt.matrixL();
  }
  // One diagonal jitter, then give up.
  const Eigen::Matrix2d jittered =
      cov + 1e-10 * Eigen::Matrix2d::Identity();
  llt.compute(jittered);
  if (llt.info() != Eigen::Success) {
    throw NumericalError(
        "cholesky_factor: covariance is not positive-definite");
  }
  return llt.matrixL();
}

SampleBatch draw_pairs(const TwoModeState& joint, Basis basis, std::size_t n,
                       std::uint64_t seed, Transmission t) {
  if (n < 1) {
    throw ValidationError("draw_pairs: n must be >= 1");
  }
  // X pair lives at components (0, 2), P pair at (1, 3).
  const int i0 = basis == Basis::X ? 0 : 1;
  const int i1 = basis == Basis::X ? 2 : 3;
  Eigen::Matrix2d cov;
  cov << joint.cov(i0, i0), joint.cov(i0, i1),
         joint.cov(i1, i0), joint.cov(i1, i1);
  const Eigen::Vector2d mean(joint.mean(i0), joint.mean(i1));
  const Eigen::Matrix2d chol = cholesky_factor(cov);

  SampleBatch batch;
  batch.basis = basis;
  batch.seed = seed;
  batch.t = t;
  batch.ch1.resize(n);
  batch.ch2.resize(n);
  NormalSampler rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    const double z0 = rng.normal();
    const double z1 = rng.normal();
    batch.ch1[i] = mean(0) + chol(0, 0) * z0;
    batch.ch2[i] = mean(1) + chol(1, 0) * z0 + chol(1, 1) * z1;
  }
  return batch;
}

double empirical_second_moment(std::span<const double> samples) {
  if (samples.empty()) {
    throw ValidationError("empirical_second_moment: empty sample array");
  }
  double acc = 0.0;
  for (double v : samples) acc += v * v;
  return acc / static_cast<double>(samples.size());
}

namespace {

double combined_rms(const SampleBatch& batch, double coeff1, double coeff2) {
  double acc = 0.0;
  for (std::size_t i = 0; i < batch.n(); ++i) {
    const double v = coeff1 * batch.ch1[i] + coeff2 * batch.ch2[i];
    acc += v * v;
  }
  return std::sqrt(acc / static_cast<double>(batch.n()));
}

}  // namespace

double empirical_error(const SampleBatch& batch, Transmission t) {
  if (batch.basis != Basis::X) {
    throw ValidationError("empirical_error: batch basis must be x");
  }
  return combined_rms(batch, 1.0 - std::sqrt(t.t), -std::sqrt(t.reflection()));
}

double empirical_disturbance(const SampleBatch& batch, Transmission t) {
  if (batch.basis != Basis::P) {
    throw ValidationError("empirical_disturbance: batch basis must be p");
  }
  // D - B = (1 - sqrt(R)) p_d - sqrt(T) p_c under the beam-splitter
  // convention c = sqrt(T) s - sqrt(R) m, d = sqrt(R) s + sqrt(T) m.
  return combined_rms(batch, -std::sqrt(t.t), 1.0 - std::sqrt(t.reflection()));
}

TrialSummary summarize(std::vector<double> per_trial) {
  TrialSummary s;
  s.per_trial = std::move(per_trial);
  const auto count = static_cast<double>(s.per_trial.size());
  for (double v : s.per_trial) s.mean += v;
  s.mean /= count;
  double acc = 0.0;
  for (double v : s.per_trial) acc += (v - s.mean) * (v - s.mean);
  s.rms_error_bar = std::sqrt(acc / count);
  return s;
}

namespace {

// Direct draw of a single signal quadrature (pre-measurement).
std::vector<double> draw_scalar(double mean, double var, std::size_t n,
                                std::uint64_t seed) {
  std::vector<double> out(n);
  const double sd = std::sqrt(var);
  NormalSampler rng(seed);
  for (std::size_t i = 0; i < n; ++i) out[i] = mean + sd * rng.normal();
  return out;
}

}  // namespace

TrialSet run_trials(const GaussianState& signal, const GaussianState& meter,
                    Transmission t, std::size_t n, int trials,
                    std::uint64_t seed, std::uint64_t state_index,
                    std::uint64_t t_index) {
  if (trials < 1) {
    throw ValidationError("run_trials: trials must be >= 1");
  }
  const TwoModeState joint = beam_split(signal, meter, t);
  const double c_ab = commutator_bound();

  std::vector<double> eps_v, eta_v, sa_v, sb_v, h_v, o_v, b_v;
  int clamp_count = 0;
  for (int k = 0; k < trials; ++k) {
    const auto sub = [&](std::uint64_t stream) {
      return derive_seed(seed, state_index, t_index,
                         static_cast<std::uint64_t>(k), stream);
    };
    const SampleBatch xb = draw_pairs(joint, Basis::X, n, sub(kStreamBasisX), t);
    const SampleBatch pb = draw_pairs(joint, Basis::P, n, sub(kStreamBasisP), t);
    const std::vector<double> xs =
        draw_scalar(signal.mean(0), signal.var_x(), n, sub(kStreamSigmaA));
    const std::vector<double> ps =
        draw_scalar(signal.mean(1), signal.var_p(), n, sub(kStreamSigmaB));

    const double eps = empirical_error(xb, t);
    const double eta = empirical_disturbance(pb, t);
    const double sigma_a = std::sqrt(empirical_second_moment(xs));
    const double sigma_b = std::sqrt(empirical_second_moment(ps));
    bool clamped = false;
    const double lhs_b =
        branciard_lhs(eps, eta, sigma_a, sigma_b, c_ab, &clamped);
    if (clamped) ++clamp_count;

    eps_v.push_back(eps);
    eta_v.push_back(eta);
    sa_v.push_back(sigma_a);
    sb_v.push_back(sigma_b);
    h_v.push_back(eps * eta);
    o_v.push_back(ozawa_lhs(eps, eta, sigma_a, sigma_b));
    b_v.push_back(lhs_b);
  }

  TrialSet set;
  set.epsilon = summarize(std::move(eps_v));
  set.eta = summarize(std::move(eta_v));
  set.sigma_a = summarize(std::move(sa_v));
  set.sigma_b = summarize(std::move(sb_v));
  set.lhs_heisenberg = summarize(std::move(h_v));
  set.lhs_ozawa = summarize(std::move(o_v));
  set.lhs_branciard = summarize(std::move(b_v));
  set.clamp_count = clamp_count;
  return set;
}

}  // namespace edrsim
