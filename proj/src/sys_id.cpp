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

#include "is2d/sys_id.hpp"

#include <cmath>
#include <sstream>

#include "is2d/covariance.hpp"

namespace is2d {

ArmaModel separable_model(cplx alpha1, cplx alpha2, cplx beta1, cplx beta2)
{
  for (cplx z : {alpha1, alpha2, beta1, beta2})
    if (std::abs(z) > 1.0) throw std::invalid_argument("separable_model: root modulus exceeds one");
  auto factor = [](cplx z1, cplx z2) {
    MatC M(2, 2);
    M << 1.0, -z2, -z1, z1 * z2;
    return M;
  };
  return {"separable", factor(alpha1, alpha2), factor(beta1, beta2)};
}

MatC sysid_numerator()
{
  MatC B(2, 2);
  B << 0.6696, -0.5357, -0.4018, 0.3214;
  return B;
}

ArmaModel sysid_preset(const std::string& name, A4Reading reading)
{
  const cplx e = std::polar(1.0, 2.1);
  MatC A(2, 2);
  if (name == "A1") {
    A << 1.0, -0.07, -0.05, 0.0035;
  } else if (name == "A2") {
    A << 1.0, -0.7, -0.5, 0.35;
  } else if (name == "A3") {
    A << 1.0, -0.98 * e, -0.98 * e, std::polar(0.9604, 4.2);
  } else if (name == "A4") {
    const cplx corner = reading == A4Reading::Separable ? std::polar(0.9702, 4.2)
                                                        : std::exp(cplx(0.0, 4.2 * std::log(0.9702)));
    A << 1.0, 0.985 * e, 0.985 * e, corner;
  } else {
    throw std::invalid_argument("sysid_preset: unknown model '" + name + "'");
  }
  return {name, A, sysid_numerator()};
}

MatR poly_power(const MatC& coeffs, int N1, int N2)
{
  const auto d1 = static_cast<int>(coeffs.rows()) - 1;
  const auto d2 = static_cast<int>(coeffs.cols()) - 1;
  const int n = std::max(d1, d2);
  MatC c = MatC::Zero(2 * n + 1, 2 * n + 1);
  for (int k1 = 0; k1 <= d1; ++k1)
    for (int k2 = 0; k2 <= d2; ++k2) c(k2 + n, k1 + n) = coeffs(k1, k2);
  return evaluate_coeffs_complex(c, n, n, N1, N2).cwiseAbs2();
}

ArmaSpectrum arma_spectrum(const ArmaModel& m, const GridSpec& g)
{
  if (m.A.size() == 0 || m.A(0, 0) == 0.0) throw std::invalid_argument("arma_spectrum: a_00 must be nonzero");
  const MatR a2 = poly_power(m.A, g.N1(), g.N2());
  const MatR b2 = poly_power(m.B, g.N1(), g.N2());
  Eigen::Index r = 0, c = 0;
  const double amin = a2.minCoeff(&r, &c);
  if (!(amin > 1e-14 * a2.maxCoeff())) {
    std::ostringstream os;
    os << "arma_spectrum: a vanishes at grid point (l1,l2)=(" << c << "," << r << ")";
    throw std::domain_error(os.str());
  }
  ArmaSpectrum out{b2.cwiseQuotient(a2), b2};
  require_positive(out.P, "arma_spectrum numerator");
  return out;
}

double relative_error(const MatR& estimate, const MatR& reference)
{
  if (estimate.rows() != reference.rows() || estimate.cols() != reference.cols())
    throw std::invalid_argument("relative_error: shape mismatch");
  return (estimate - reference).norm() / reference.norm();
}

ApproxResult approx_experiment(const ArmaModel& m, int n, int N1, int N2, SysIdSolver solver,
                               const ContinuationOptions& opts)
{
  const GridSpec g(N1, N2, n, n);
  const ArmaSpectrum truth = arma_spectrum(m, g);
  const CoeffArray sigma = covariances_from_spectrum(truth.phi, g);

  ApproxResult res;
  res.phi = truth.phi;
  if (solver == SysIdSolver::Newton) {
    const DualProblem p(sigma, truth.P, g);
    SolveReport rep = newton_solve(p, opts.newton);
    res.q = rep.q;
    res.converged = rep.converged;
    res.newton = std::move(rep);
  } else {
    const HomotopyProblem hp{sigma, MatR::Constant(g.N2(), g.N1(), sigma(0, 0).real()), truth.P, g};
    ContinuationReport rep = continue_solve(hp, opts);
    res.q = rep.q;
    res.converged = rep.converged;
    res.continuation = std::move(rep);
  }
  const DualProblem p(sigma, truth.P, g);
  if (feasible(res.q, p).ok) {
    res.phi_hat = primal_spectrum(res.q, p);
    res.relative_error = relative_error(res.phi_hat, res.phi);
  } else {
    res.phi_hat = MatR::Constant(g.N2(), g.N1(), std::numeric_limits<double>::quiet_NaN());
    res.relative_error = std::numeric_limits<double>::quiet_NaN();
  }
  return res;
}

}  // namespace is2d
