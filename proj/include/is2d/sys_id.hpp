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

#pragma once

#include <optional>
#include <string>

#include "is2d/continuation.hpp"

namespace is2d {

// a(z) = sum a_{k1,k2} z1^{-k1} z2^{-k2} with a_{k1,k2} = A(k1, k2); b likewise.
struct ArmaModel {
  std::string label;
  MatC A;
  MatC B;
};

// (1 - alpha1/z1)(1 - alpha2/z2) and the analogous numerator; rejects
// moduli above one.
ArmaModel separable_model(cplx alpha1, cplx alpha2, cplx beta1 = 0.0, cplx beta2 = 0.0);

// How the corner entry of A4 is read: 0.9702 exp(4.2i), which keeps the
// matrix separable, or the literal 0.9702^(4.2i).
enum class A4Reading { Separable, Literal };

// Models A1..A4 with the shared numerator B.
ArmaModel sysid_preset(const std::string& name, A4Reading reading = A4Reading::Separable);
MatC sysid_numerator();

// |p(zeta_l)|^2 for a coefficient matrix laid out like ArmaModel::A.
MatR poly_power(const MatC& coeffs, int N1, int N2);

struct ArmaSpectrum {
  Spectrum phi;  // |b|^2 / |a|^2
  Spectrum P;    // |b|^2
};

ArmaSpectrum arma_spectrum(const ArmaModel& m, const GridSpec& g);

enum class SysIdSolver { Newton, Continuation };

struct ApproxResult {
  Spectrum phi;
  Spectrum phi_hat;
  double relative_error = 0.0;
  bool converged = false;
  HalfVector q;
  std::optional<SolveReport> newton;
  std::optional<ContinuationReport> continuation;
};

// Fits (P^{-1} + Q)^{-1} to the moments of the true spectrum over Lambda
// with n1 = n2 = n; the continuation path starts from the constant sigma_00.
ApproxResult approx_experiment(const ArmaModel& m, int n, int N1, int N2, SysIdSolver solver,
                               const ContinuationOptions& opts = {});

// Frobenius norm of the difference over that of the reference, on raw grid values.
double relative_error(const MatR& estimate, const MatR& reference);

}  // namespace is2d
