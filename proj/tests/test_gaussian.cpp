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

#include "edrsim/gaussian.hpp"
#include "test_support.hpp"

using namespace edrsim;

TEST_CASE("vacuum is the identity-covariance zero-mean state") {
  const GaussianState v = make_vacuum();
  CHECK(v.mean.isZero(0.0));
  CHECK(v.cov.isApprox(Eigen::Matrix2d::Identity(), 0.0));
  CHECK(v.cov.determinant() == doctest::Approx(1.0));
  CHECK(purity(v) == doctest::Approx(1.0));
}

TEST_CASE("coherent states have unit variances regardless of displacement") {
  const GaussianState c0 = make_coherent(0.0, 0.0);
  CHECK(c0.cov.isApprox(Eigen::Matrix2d::Identity(), 0.0));

  const GaussianState c = make_coherent(2.5, -1.0);
  CHECK(c.mean(0) == doctest::Approx(2.5));
  CHECK(c.mean(1) == doctest::Approx(-1.0));
  CHECK(c.cov.isApprox(Eigen::Matrix2d::Identity(), 0.0));
  CHECK(purity(c) == doctest::Approx(1.0));
}

TEST_CASE("squeezed_pure covariance is diag(e^-2r, e^2r)") {
  CHECK(make_squeezed_pure(0.0).cov.isApprox(Eigen::Matrix2d::Identity(), 0.0));

  const GaussianState s = make_squeezed_pure(0.334);
  CHECK(s.var_x() == doctest::Approx(0.51273302).epsilon(1e-7));
  CHECK(s.var_p() == doctest::Approx(1.95033275).epsilon(1e-7));

  for (double r : {0.1, 0.334, 0.8, 2.0}) {
    CHECK(make_squeezed_pure(r).cov.determinant() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }

  CHECK_THROWS_AS(make_squeezed_pure(-0.1), ValidationError);
}

TEST_CASE("squeezed_db converts dB variances and gates on physicality") {
  const GaussianState s = make_squeezed_db(-2.9, 3.9);
  CHECK(s.var_x() == doctest::Approx(0.512861).epsilon(1e-5));
  CHECK(s.var_p() == doctest::Approx(2.454709).epsilon(1e-5));

  CHECK(make_squeezed_db(0.0, 0.0).cov.isApprox(Eigen::Matrix2d::Identity(),
                                                1e-15));

  // det = 10^{-0.1} < 1
  CHECK_THROWS_WITH_AS(make_squeezed_db(-3.0, 2.0),
                       doctest::Contains("unphysical covariance"),
                       ValidationError);
}

TEST_CASE("thermal state variance is cosh(2r)") {
  CHECK(make_thermal(0.0).cov.isApprox(Eigen::Matrix2d::Identity(), 0.0));

  const GaussianState th = make_thermal(0.334);
  CHECK(th.var_x() == doctest::Approx(1.2315329).epsilon(1e-6));
  CHECK(th.var_p() == doctest::Approx(1.2315329).epsilon(1e-6));
  CHECK(purity(th) == doctest::Approx(0.8119962).epsilon(1e-6));

  CHECK_THROWS_AS(make_thermal(-1.0), ValidationError);
}

TEST_CASE("beam_split leaves identity covariance invariant") {
  for (double t : {0.0, 0.17, 0.5, 0.93, 1.0}) {
    const TwoModeState out =
        beam_split(make_coherent(0.0, 0.0), make_vacuum(), Transmission(t));
    CHECK(out.cov.isApprox(Eigen::Matrix4d::Identity(), 1e-14));
  }
}

TEST_CASE("beam_split boundary conventions") {
  const GaussianState signal = make_squeezed_db(-2.9, 3.9);
  GaussianState meter = make_thermal(0.2);
  meter.mean << 0.3, -0.7;

  SUBCASE("t = 1 is transparent") {
    const TwoModeState out = beam_split(signal, meter, Transmission(1.0));
    CHECK(marginal_mode(out, 0).cov.isApprox(signal.cov, 0.0));
    CHECK(marginal_mode(out, 0).mean.isApprox(signal.mean, 0.0));
    CHECK(marginal_mode(out, 1).cov.isApprox(meter.cov, 0.0));
    CHECK(marginal_mode(out, 1).mean.isApprox(meter.mean, 0.0));
  }

  SUBCASE("t = 0 swaps with a sign on mode c") {
    const TwoModeState out = beam_split(signal, meter, Transmission(0.0));
    CHECK(marginal_mode(out, 0).cov.isApprox(meter.cov, 1e-15));
    CHECK(marginal_mode(out, 0).mean.isApprox(-meter.mean, 1e-15));
    CHECK(marginal_mode(out, 1).cov.isApprox(signal.cov, 1e-15));
    CHECK(marginal_mode(out, 1).mean.isApprox(signal.mean, 1e-15));
  }
}

TEST_CASE("balanced beam_split correlates the outputs of a squeezed input") {
  // x variance 0.5 squeezed input: Var(x_c) = Var(x_d) = 0.75,
  // Cov(x_c, x_d) = sqrt(TR) (0.5 - 1) = -0.25.
  const GaussianState signal = make_squeezed_pure(0.5 * std::log(2.0));
  REQUIRE(signal.var_x() == doctest::Approx(0.5).epsilon(1e-14));

  const TwoModeState out = beam_split(signal, make_vacuum(), Transmission(0.5));
  CHECK(out.cov(0, 0) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(out.cov(2, 2) == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(out.cov(0, 2) == doctest::Approx(-0.25).epsilon(1e-12));
}

TEST_CASE("beam splitter matrix is symplectic across the whole t range") {
  Eigen::Matrix4d omega = Eigen::Matrix4d::Zero();
  omega(0, 1) = 1.0;
  omega(1, 0) = -1.0;
  omega(2, 3) = 1.0;
  omega(3, 2) = -1.0;

  for (int i = 0; i <= 1000; ++i) {
    const double t = i * 1e-3;
    const Eigen::Matrix4d s = beam_splitter_matrix(Transmission(t));
    CHECK((s * omega * s.transpose() - omega).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("beam_split preserves physicality of the marginals") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const GaussianState signal = testing::random_physical_state(rng);
    const GaussianState meter = testing::random_physical_state(rng);
    const double t = (i % 101) / 100.0;
    const TwoModeState out = beam_split(signal, meter, Transmission(t));
    for (int mode : {0, 1}) {
      CHECK(marginal_mode(out, mode).cov.determinant() >= 1.0 - 1e-9);
    }
  }
}

TEST_CASE("apply_loss fixed points and closed form") {
  const GaussianState s = make_squeezed_db(-2.9, 3.9);
  CHECK(apply_loss(s, 1.0).cov.isApprox(s.cov, 0.0));

  const GaussianState v = make_vacuum();
  CHECK(apply_loss(v, 0.37).cov.isApprox(v.cov, 1e-15));

  CHECK(apply_loss(s, 0.996).var_x() ==
        doctest::Approx(0.514810).epsilon(1e-6));

  CHECK_THROWS_AS(apply_loss(s, 1.5), ValidationError);
}

TEST_CASE("apply_loss pulls toward vacuum and composes multiplicatively") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    const GaussianState s = testing::random_physical_state(rng);
    const double a = (i % 10) / 10.0;
    const double b = (i % 7) / 7.0;

    const Eigen::Matrix2d before = s.cov - Eigen::Matrix2d::Identity();
    const Eigen::Matrix2d after =
        apply_loss(s, a).cov - Eigen::Matrix2d::Identity();
    CHECK((after.cwiseAbs().array() <= before.cwiseAbs().array() + 1e-15).all());

    const GaussianState twice = apply_loss(apply_loss(s, a), b);
    const GaussianState once = apply_loss(s, a * b);
    CHECK(twice.cov.isApprox(once.cov, 1e-12));
    CHECK(twice.mean.isApprox(once.mean, 1e-12));
  }
}

TEST_CASE("purity of known states") {
  CHECK(purity(make_vacuum()) == doctest::Approx(1.0));
  // det = 10^{0.1}
  CHECK(purity(make_squeezed_db(-2.9, 3.9)) ==
        doctest::Approx(0.891251).epsilon(1e-5));

  GaussianState bad;
  bad.cov << 1.0, 2.0, 2.0, 1.0;  // indefinite
  CHECK_THROWS_AS(purity(bad), NumericalError);
  CHECK_FALSE(is_physical(bad));
}

TEST_CASE("transmission range is validated") {
  CHECK_NOTHROW(Transmission(0.0));
  CHECK_NOTHROW(Transmission(1.0));
  CHECK_THROWS_AS(Transmission(-0.01), ValidationError);
  CHECK_THROWS_AS(Transmission(1.01), ValidationError);
}
