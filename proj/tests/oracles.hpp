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

// Serial direct-summation references and random problem generators shared by
// the unit tests and the acceptance runner. Nothing here calls the FFT path.

#include <cmath>
#include <numbers>
#include <random>

#include "is2d/dual.hpp"
#include "is2d/freq_est.hpp"

namespace is2d::oracle {

inline double theta(int l, int N) { return 2.0 * std::numbers::pi * l / N; }

// sum_k c_k exp(-i<k, theta_l>) by double loop over the grid and Lambda.
inline MatC evaluate(const MatC& c, int n1, int n2, int M1, int M2)
{
  MatC out(M2, M1);
  for (int l2 = 0; l2 < M2; ++l2)
    for (int l1 = 0; l1 < M1; ++l1) {
      cplx acc = 0.0;
      for (int k1 = -n1; k1 <= n1; ++k1)
        for (int k2 = -n2; k2 <= n2; ++k2)
          acc += c(k2 + n2, k1 + n1) * std::polar(1.0, -(k1 * theta(l1, M1) + k2 * theta(l2, M2)));
      out(l2, l1) = acc;
    }
  return out;
}

// (1/|N|) sum_l exp(i<k, theta_l>) f(zeta_l) for a single k.
template <class M>
cplx riemann(const M& f, int k1, int k2)
{
  const int N2 = static_cast<int>(f.rows()), N1 = static_cast<int>(f.cols());
  cplx acc = 0.0;
  for (int l2 = 0; l2 < N2; ++l2)
    for (int l1 = 0; l1 < N1; ++l1)
      acc += cplx(f(l2, l1)) * std::polar(1.0, k1 * theta(l1, N1) + k2 * theta(l2, N2));
  return acc / static_cast<double>(N1 * N2);
}

template <class M>
MatC fourier(const M& f, int n1, int n2)
{
  MatC out(2 * n2 + 1, 2 * n1 + 1);
  for (int k1 = -n1; k1 <= n1; ++k1)
    for (int k2 = -n2; k2 <= n2; ++k2) out(k2 + n2, k1 + n1) = riemann(f, k1, k2);
  return out;
}

// (1/(T1 T2)) sum over t with t and t+k in the window, for every k in Lambda.
inline MatC covariance(const MatC& y, int n1, int n2)
{
  const int T2 = static_cast<int>(y.rows()), T1 = static_cast<int>(y.cols());
  MatC out(2 * n2 + 1, 2 * n1 + 1);
  for (int k1 = -n1; k1 <= n1; ++k1)
    for (int k2 = -n2; k2 <= n2; ++k2) {
      cplx acc = 0.0;
      for (int t1 = 0; t1 < T1; ++t1)
        for (int t2 = 0; t2 < T2; ++t2) {
          const int u1 = t1 + k1, u2 = t2 + k2;
          if (u1 < 0 || u1 >= T1 || u2 < 0 || u2 >= T2) continue;
          acc += y(u2, u1) * std::conj(y(t2, t1));
        }
      out(k2 + n2, k1 + n1) = acc / static_cast<double>(T1 * T2);
    }
  return out;
}

inline MatC full_from_half(const HalfVector& q, int n1, int n2)
{
  MatC c = MatC::Zero(2 * n2 + 1, 2 * n1 + 1);
  int i = 0;
  for (int k1 = 0; k1 <= n1; ++k1)
    for (int k2 = (k1 == 0 ? 0 : -n2); k2 <= n2; ++k2, ++i) {
      c(k2 + n2, k1 + n1) = q(i);
      c(-k2 + n2, -k1 + n1) = std::conj(q(i));
    }
  c(n2, n1) = q(0).real();
  return c;
}

inline MatR integrand(const HalfVector& q, const DualProblem& p)
{
  const GridSpec& g = p.grid();
  const MatC Q = evaluate(full_from_half(q, g.n1(), g.n2()), g.n1(), g.n2(), g.N1(), g.N2());
  return p.psi().cwiseInverse() + Q.real();
}

inline double dual_value(const HalfVector& q, const DualProblem& p)
{
  const GridSpec& g = p.grid();
  const MatC qc = full_from_half(q, g.n1(), g.n2());
  cplx lin = 0.0;
  for (int k1 = -g.n1(); k1 <= g.n1(); ++k1)
    for (int k2 = -g.n2(); k2 <= g.n2(); ++k2) lin += qc(k2 + g.n2(), k1 + g.n1()) * std::conj(p.sigma()(k1, k2));
  const MatR s = integrand(q, p);
  double logs = 0.0;
  for (Eigen::Index i = 0; i < s.size(); ++i) logs += std::log(s(i));
  return lin.real() - logs / static_cast<double>(s.size());
}

// h_k = Gamma(s^-2)_k by direct sums.
inline cplx h(const HalfVector& q, const DualProblem& p, int k1, int k2)
{
  const MatR s = integrand(q, p);
  return riemann(MatR(s.array().square().inverse()), k1, k2);
}

// Half-set Hessian with entry (k, l) = h_{k-l}, every entry summed directly.
inline MatC dense_hessian(const HalfVector& q, const DualProblem& p)
{
  const auto& idx = p.grid().half_indices();
  const MatR s2 = integrand(q, p).array().square().inverse();
  const auto m = static_cast<Eigen::Index>(idx.size());
  MatC H(m, m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) H(a, b) = riemann(s2, idx[a].k1 - idx[b].k1, idx[a].k2 - idx[b].k2);
  return H;
}

// Correlogram sum_k w(k) sigma_k exp(-i<k, theta>) by direct summation.
inline MatR periodogram(const CoeffArray& sigma, const WindowSpec& w, int M1, int M2)
{
  MatC c(2 * w.n2 + 1, 2 * w.n1 + 1);
  for (int k1 = -w.n1; k1 <= w.n1; ++k1)
    for (int k2 = -w.n2; k2 <= w.n2; ++k2) c(k2 + w.n2, k1 + w.n1) = w.weight(k1, k2) * sigma(k1, k2);
  return evaluate(c, w.n1, w.n2, M1, M2).real();
}

// ---- generators ----

inline MatC random_coeffs(std::mt19937_64& rng, int n1, int n2, double scale = 1.0)
{
  std::normal_distribution<double> nd;
  MatC c(2 * n2 + 1, 2 * n1 + 1);
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = scale * cplx(nd(rng), nd(rng));
  return c;
}

// exp of a random low-order trigonometric polynomial: smooth and strictly positive.
inline MatR random_spectrum(std::mt19937_64& rng, int N1, int N2, double scale = 0.3)
{
  const CoeffArray c(random_coeffs(rng, 2, 2, scale / 5.0));
  return evaluate_coeffs(c, N1, N2).array().exp();
}

// Random q with |Q| bounded by a fraction of min Psi^{-1}, hence feasible.
inline HalfVector random_feasible_q(std::mt19937_64& rng, const DualProblem& p, double fraction = 0.5)
{
  const GridSpec& g = p.grid();
  std::normal_distribution<double> nd;
  HalfVector q(g.half_size());
  for (Eigen::Index i = 0; i < q.size(); ++i) q(i) = cplx(nd(rng), nd(rng));
  q(0) = q(0).real();
  const double l1 = 2.0 * q.cwiseAbs().sum();
  return q * (fraction * p.psi_inv().minCoeff() / l1);
}

inline DualProblem random_problem(std::mt19937_64& rng, const GridSpec& g)
{
  const MatR truth = random_spectrum(rng, g.N1(), g.N2());
  return DualProblem(fourier_coeffs(truth, g), random_spectrum(rng, g.N1(), g.N2()), g);
}

// Real coordinates x of q: Re of every half entry, then Im of all but (0,0).
inline Eigen::VectorXd realify(const HalfVector& q)
{
  const auto m = q.size();
  Eigen::VectorXd x(2 * m - 1);
  for (Eigen::Index i = 0; i < m; ++i) x(i) = q(i).real();
  for (Eigen::Index i = 1; i < m; ++i) x(m + i - 1) = q(i).imag();
  return x;
}

inline HalfVector unrealify(const Eigen::VectorXd& x)
{
  const auto m = (x.size() + 1) / 2;
  HalfVector q(m);
  q(0) = x(0);
  for (Eigen::Index i = 1; i < m; ++i) q(i) = cplx(x(i), x(m + i - 1));
  return q;
}

// Central differences of the direct-sum dual value in the real coordinates.
inline Eigen::VectorXd fd_gradient(const HalfVector& q, const DualProblem& p, double step = 1e-6)
{
  const Eigen::VectorXd x = realify(q);
  Eigen::VectorXd d(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Eigen::VectorXd xp = x, xm = x;
    xp(i) += step;
    xm(i) -= step;
    d(i) = (oracle::dual_value(unrealify(xp), p) - oracle::dual_value(unrealify(xm), p)) / (2 * step);
  }
  return d;
}

// The same derivative predicted from the half-set gradient g:
// Re g_00, then 2 Re g_k, then 2 Im g_k.
inline Eigen::VectorXd realified_gradient(const HalfVector& g)
{
  const auto m = g.size();
  Eigen::VectorXd d(2 * m - 1);
  d(0) = g(0).real();
  for (Eigen::Index i = 1; i < m; ++i) {
    d(i) = 2 * g(i).real();
    d(m + i - 1) = 2 * g(i).imag();
  }
  return d;
}

}  // namespace is2d::oracle
