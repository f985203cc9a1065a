/* Copyright 2026 The is2d Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#include <random>

#include "doctest.h"
#include "is2d/sys_id.hpp"
#include "oracles.hpp"

using namespace is2d;

TEST_CASE("separable_model")
{
  const ArmaModel a1 = separable_model(0.05, 0.07);
  CHECK((a1.A - sysid_preset("A1").A).cwiseAbs().maxCoeff() < 1e-15);
  const ArmaModel z = separable_model(0.0, 0.0);
  CHECK(z.A(0, 0) == 1.0);
  CHECK(z.A.cwiseAbs().sum() == 1.0);
  const cplx e = std::polar(0.98, 2.1);
  const ArmaModel a3 = separable_model(e, e);
  CHECK((a3.A - sysid_preset("A3").A).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(a3.A(1, 1) - std::polar(0.9604, 4.2)) < 1e-12);
  CHECK_THROWS_AS(separable_model(1.2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(separable_model(0.0, 0.0, 0.0, cplx(0.0, 1.01)), std::invalid_argument);
}

TEST_CASE("A4 readings")
{
  const MatC sep = sysid_preset("A4", A4Reading::Separable).A;
  const MatC lit = sysid_preset("A4", A4Reading::Literal).A;
  CHECK(std::abs(sep(1, 1) - sep(0, 1) * sep(1, 0)) < 1e-4);
  CHECK(sep(0, 1) == lit(0, 1));
  CHECK(std::abs(lit(1, 1)) == doctest::Approx(1.0));
  CHECK_THROWS_AS(sysid_preset("A5"), std::invalid_argument);
}

TEST_CASE("arma_spectrum")
{
  const GridSpec g(30, 30, 1, 1);
  const MatC A = sysid_preset("A2").A;
  CHECK((arma_spectrum(ArmaModel{"x", A, A}, g).phi.array() - 1.0).abs().maxCoeff() < 1e-12);

  MatC one = MatC::Zero(2, 2);
  one(0, 0) = 1.0;
  const ArmaSpectrum ma = arma_spectrum(ArmaModel{"ma", one, sysid_numerator()}, g);
  CHECK((ma.phi - ma.P).cwiseAbs().maxCoeff() < 1e-14);

  // |b(1,1)|^2 / |a(1,1)|^2 at the origin of the grid
  const ArmaModel m = sysid_preset("A1");
  const ArmaSpectrum s = arma_spectrum(m, g);
  CHECK(s.phi(0, 0) == doctest::Approx(std::norm(m.B.sum()) / std::norm(m.A.sum())).epsilon(1e-12));

  // away from the origin: a(z) = sum a_{k1,k2} z1^{-k1} z2^{-k2}
  const int l1 = 4, l2 = 9;
  cplx a = 0.0, b = 0.0;
  for (int k1 = 0; k1 < 2; ++k1)
    for (int k2 = 0; k2 < 2; ++k2) {
      const cplx z = std::polar(1.0, -(k1 * g.theta1(l1) + k2 * g.theta2(l2)));
      a += m.A(k1, k2) * z;
      b += m.B(k1, k2) * z;
    }
  CHECK(s.phi(l2, l1) == doctest::Approx(std::norm(b) / std::norm(a)).epsilon(1e-12));

  // a(z) = 1 - z1^{-1} vanishes on theta1 = 0
  MatC zero = MatC::Zero(2, 2);
  zero(0, 0) = 1.0;
  zero(1, 0) = -1.0;
  try {
    arma_spectrum(ArmaModel{"z", zero, sysid_numerator()}, g);
    FAIL("expected a domain error");
  } catch (const std::domain_error& e) {
    CHECK(std::string(e.what()).find("(0,") != std::string::npos);
  }
}

TEST_CASE("relative_error")
{
  std::mt19937_64 rng(1);
  const MatR a = oracle::random_spectrum(rng, 8, 8), b = oracle::random_spectrum(rng, 8, 8);
  CHECK(relative_error(a, a) == 0.0);
  CHECK(relative_error(3.0 * a, 3.0 * b) == doctest::Approx(relative_error(a, b)));
  CHECK_THROWS_AS(relative_error(a, MatR::Ones(8, 7)), std::invalid_argument);
}

TEST_CASE("approx_experiment")
{
  const GridSpec g(30, 30, 1, 1);
  const ApproxResult r1 = approx_experiment(sysid_preset("A1"), 1, 30, 30, SysIdSolver::Newton);
  REQUIRE(r1.converged);
  const CoeffArray sigma = covariances_from_spectrum(r1.phi, g);
  const MatC m = oracle::fourier(r1.phi_hat, 1, 1);
  CHECK((m - sigma.values()).cwiseAbs().maxCoeff() <= 1e-3);
  CHECK(r1.relative_error == doctest::Approx(relative_error(r1.phi_hat, r1.phi)));

  const ApproxResult r2 = approx_experiment(sysid_preset("A2"), 1, 30, 30, SysIdSolver::Newton);
  REQUIRE(r2.converged);
  CHECK((oracle::fourier(r2.phi_hat, 1, 1) - covariances_from_spectrum(r2.phi, g).values()).cwiseAbs().maxCoeff() <= 1e-3);

  // pure AR truth: P is constant and the model classes coincide
  MatC flatB = MatC::Zero(2, 2);
  flatB(0, 0) = 1.0;
  const ApproxResult ar = approx_experiment(ArmaModel{"ar", sysid_preset("A1").A, flatB}, 1, 30, 30, SysIdSolver::Newton);
  REQUIRE(ar.converged);
  CHECK(ar.relative_error <= 0.01);
}
