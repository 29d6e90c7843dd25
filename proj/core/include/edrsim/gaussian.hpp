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

#ifndef EDRSIM_GAUSSIAN_HPP
#define EDRSIM_GAUSSIAN_HPP

#include <Eigen/Dense>
#include <string>

#include "edrsim/errors.hpp"

namespace edrsim {

// Quadrature convention: x = a + a^dag, p = (a - a^dag)/i, so the vacuum has
// unit variance in both quadratures (shot-noise units) and [x, p] = 2i.

/// Tolerance on the det(cov) >= 1 physicality bound; absorbs floating-point
/// noise accumulated by chained symplectic transforms.
inline constexpr double kPhysicalityTol = 1e-9;

/// Power transmission of the beam splitter, T in [0, 1]; R = 1 - T.
struct Transmission {
  double t;

  explicit Transmission(double t_in) : t(t_in) {
    if (!(t >= 0.0 && t <= 1.0)) {
      throw ValidationError("transmission t must be in [0, 1], got " +
                            std::to_string(t_in));
    }
  }

  double reflection() const { return 1.0 - t; }
};

/// One optical mode: mean quadrature vector (x, p) and a symmetric 2x2
/// covariance matrix, both in shot-noise units (vacuum covariance = I).
struct GaussianState {
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  Eigen::Matrix2d cov = Eigen::Matrix2d::Identity();
  std::string label;

  double var_x() const { return cov(0, 0); }
  double var_p() const { return cov(1, 1); }

  // Second moments about zero; for a displaced state these exceed the
  // variances and feed directly into the RMS error/disturbance.
  double second_moment_x() const { return cov(0, 0) + mean(0) * mean(0); }
  double second_moment_p() const { return cov(1, 1) + mean(1) * mean(1); }
};

/// Two modes (c, d) after the beam splitter. Component ordering is
/// (x_c, p_c, x_d, p_d) throughout.
struct TwoModeState {
  Eigen::Vector4d mean = Eigen::Vector4d::Zero();
  Eigen::Matrix4d cov = Eigen::Matrix4d::Identity();
};

/// Symmetric, positive-definite, det(cov) >= 1 - tol.
bool is_physical(const GaussianState& state, double tol = kPhysicalityTol);

GaussianState make_vacuum();
GaussianState make_coherent(double mean_x, double mean_p);

/// x-squeezed minimum-uncertainty state: cov = diag(e^{-2r}, e^{2r}), r >= 0.
GaussianState make_squeezed_pure(double r);

/// Squeezed state given directly by its measured variances in dB relative to
/// shot noise (negative dB = squeezing). Rejects pairs whose covariance
/// determinant falls below 1.
GaussianState make_squeezed_db(double sqz_db, double antisqz_db);

/// Thermal state with both variances equal to (e^{-2r} + e^{2r})/2, r >= 0.
/// This is the single-mode marginal of a two-mode squeezed state.
GaussianState make_thermal(double r);

/// The 4x4 symplectic matrix of the beam splitter acting on
/// (x_s, p_s, x_m, p_m) -> (x_c, p_c, x_d, p_d):
///   c = sqrt(T) * signal - sqrt(R) * meter
///   d = sqrt(R) * signal + sqrt(T) * meter
Eigen::Matrix4d beam_splitter_matrix(Transmission t);

/// Couple signal and meter on a beam splitter of transmission t. Acts on both
/// the means and the covariance (congruence by the symplectic matrix).
TwoModeState beam_split(const GaussianState& signal, const GaussianState& meter,
                        Transmission t);

/// Marginal single-mode state of a two-mode state; mode_index 0 = c, 1 = d.
GaussianState marginal_mode(const TwoModeState& joint, int mode_index);

/// Loss as vacuum admixture: cov -> eff*cov + (1-eff)*I, mean -> sqrt(eff)*mean.
GaussianState apply_loss(const GaussianState& state, double eff);

/// 1/sqrt(det cov); 1 for pure states. Throws NumericalError if cov is not
/// positive-definite.
double purity(const GaussianState& state);

}  // namespace edrsim

#endif  // EDRSIM_GAUSSIAN_HPP
