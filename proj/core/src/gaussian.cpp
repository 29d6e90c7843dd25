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

#include "edrsim/gaussian.hpp"

#include <cmath>

namespace edrsim {

bool is_physical(const GaussianState& state, double tol) {
  if (std::abs(state.cov(0, 1) - state.cov(1, 0)) > tol) return false;
  const Eigen::Vector2d eig =
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(state.cov).eigenvalues();
  if (eig(0) <= 0.0) return false;
  return state.cov.determinant() >= 1.0 - tol;
}

GaussianState make_vacuum() {
  GaussianState s;
  s.label = "vacuum";
  return s;
}

GaussianState make_coherent(double mean_x, double mean_p) {
  GaussianState s;
  s.mean << mean_x, mean_p;
  s.label = "coherent";
  return s;
}

GaussianState make_squeezed_pure(double r) {
  if (r < 0.0) {
    throw ValidationError(
        "squeezing parameter r must be >= 0 (x-squeezed convention), got " +
        std::to_string(r));
  }
  GaussianState s;
  s.cov = Eigen::Vector2d(std::exp(-2.0 * r), std::exp(2.0 * r)).asDiagonal();
  s.label = "squeezed_pure";
  return s;
}

GaussianState make_squeezed_db(double sqz_db, double antisqz_db) {
  const double var_x = std::pow(10.0, sqz_db / 10.0);
  const double var_p = std::pow(10.0, antisqz_db / 10.0);
  if (var_x * var_p < 1.0 - kPhysicalityTol) {
    throw ValidationError("unphysical covariance: det = " +
                          std::to_string(var_x * var_p) + " < 1 for dB pair (" +
                          std::to_string(sqz_db) + ", " +
                          std::to_string(antisqz_db) + ")");
  }
  GaussianState s;
  s.cov = Eigen::Vector2d(var_x, var_p).asDiagonal();
  s.label = "squeezed_db";
  return s;
}

GaussianState make_thermal(double r) {
  if (r < 0.0) {
    throw ValidationError("thermal parameter r must be >= 0, got " +
                          std::to_string(r));
  }
  const double v = std::cosh(2.0 * r);
  GaussianState s;
  s.cov = Eigen::Vector2d(v, v).asDiagonal();
  s.label = "thermal";
  return s;
}

Eigen::Matrix4d beam_splitter_matrix(Transmission t) {
  const double ct = std::sqrt(t.t);
  const double cr = std::sqrt(t.reflection());
  Eigen::Matrix4d s;
  // (x_c, p_c, x_d, p_d) from (x_s, p_s, x_m, p_m).
  s << ct, 0.0, -cr, 0.0,
       0.0, ct, 0.0, -cr,
       cr, 0.0, ct, 0.0,
       0.0, cr, 0.0, ct;
  return s;
}

TwoModeState beam_split(const GaussianState& signal, const GaussianState& meter,
                        Transmission t) {
  const Eigen::Matrix4d s = beam_splitter_matrix(t);
  Eigen::Matrix4d input_cov = Eigen::Matrix4d::Zero();
  input_cov.topLeftCorner<2, 2>() = signal.cov;
  input_cov.bottomRightCorner<2, 2>() = meter.cov;
  Eigen::Vector4d input_mean;
  input_mean << signal.mean, meter.mean;

  TwoModeState out;
  out.mean = s * input_mean;
  out.cov = s * input_cov * s.transpose();
  return out;
}

GaussianState marginal_mode(const TwoModeState& joint, int mode_index) {
  const int k = 2 * mode_index;
  GaussianState s;
  s.mean = joint.mean.segment<2>(k);
  s.cov = joint.cov.block<2, 2>(k, k);
  return s;
}

GaussianState apply_loss(const GaussianState& state, double eff) {
  if (!(eff >= 0.0 && eff <= 1.0)) {
    throw ValidationError("loss efficiency must be in [0, 1], got " +
                          std::to_string(eff));
  }
  GaussianState out = state;
  out.cov = eff * state.cov + (1.0 - eff) * Eigen::Matrix2d::Identity();
  out.mean = std::sqrt(eff) * state.mean;
  return out;
}

double purity(const GaussianState& state) {
  const Eigen::Vector2d eig =
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(state.cov).eigenvalues();
  if (eig(0) <= 0.0) {
    throw NumericalError("purity: covariance is not positive-definite");
  }
  return 1.0 / std::sqrt(state.cov.determinant());
}

}  // namespace edrsim
