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
#include "is2d/covariance.hpp"
#include "is2d/sys_id.hpp"
#include "oracles.hpp"

using namespace is2d;

TEST_CASE("estimate_covariances examples")
{
  const CoeffArray c = estimate_covariances(MatC::Ones(4, 4), 1, 1);
  CHECK(std::abs(c(1, 1) - 9.0 / 16.0) < 1e-15);

  MatC y(1, 1);
  y(0, 0) = cplx(1.5, -2.0);
  CHECK(std::abs(estimate_covariances(y, 0, 0)(0, 0) - std::norm(y(0, 0))) < 1e-15);

  std::mt19937_64 rng(4);
  const MatC r = oracle::random_coeffs(rng, 3, 2).topLeftCorner(6, 7);  // T2 = 6, T1 = 7
  CHECK((estimate_covariances(r, 2, 2).values() - oracle::covariance(r, 2, 2)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("covariance estimate is biased and exactly Hermitian")
{
  const int T1 = 9, T2 = 6;
  const CoeffArray c = estimate_covariances(MatC::Ones(T2, T1), 3, 2);
  for (int k1 = -3; k1 <= 3; ++k1)
    for (int k2 = -2; k2 <= 2; ++k2)
      CHECK(std::abs(c(k1, k2) - double((T1 - std::abs(k1)) * (T2 - std::abs(k2))) / (T1 * T2)) < 1e-14);

  std::mt19937_64 rng(8);
  const MatC y = oracle::random_coeffs(rng, 5, 5);
  const CoeffArray d = estimate_covariances(y, 3, 3);
  CHECK((d.values().reverse().conjugate() - d.values()).norm() == 0.0);
  CHECK(d.symmetry_correction() == 0.0);
  CHECK(d(0, 0).real() >= 0.0);
  CHECK(d(0, 0).imag() == 0.0);
}

TEST_CASE("estimate_covariances rejects short records")
{
  CHECK_THROWS_AS(estimate_covariances(MatC::Ones(3, 3), 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(estimate_covariances(MatC::Ones(3, 3), 1, 3), std::invalid_argument);
}

TEST_CASE("covariances_from_spectrum")
{
  const GridSpec g(30, 30, 1, 1);
  const CoeffArray w = covariances_from_spectrum(MatR::Ones(30, 30), g);
  CHECK(std::abs(w(0, 0) - 1.0) < 1e-14);
  CHECK(w.values().cwiseAbs().sum() - 1.0 < 1e-13);

  const MatC A = sysid_preset("A1").A;
  const ArmaSpectrum same = arma_spectrum(ArmaModel{"same", A, A}, g);
  const CoeffArray s = covariances_from_spectrum(same.phi, g);
  CHECK(std::abs(s(0, 0) - 1.0) < 1e-12);
  CHECK(s.values().cwiseAbs().sum() - 1.0 < 1e-11);

  const ArmaSpectrum a1 = arma_spectrum(sysid_preset("A1"), g);
  CHECK((covariances_from_spectrum(a1.phi, g).values() - oracle::fourier(a1.phi, 1, 1)).cwiseAbs().maxCoeff() < 1e-12);

  MatR bad = MatR::Ones(30, 30);
  bad(3, 4) = 0.0;
  CHECK_THROWS_AS(covariances_from_spectrum(bad, g), std::invalid_argument);
  CHECK_THROWS_AS(covariances_from_spectrum(MatR::Ones(29, 30), g), std::invalid_argument);
}
