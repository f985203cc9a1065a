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

#include "is2d/structured.hpp"

#include <chrono>
#include <limits>
#include <random>

#include <Eigen/Cholesky>
#include <Eigen/LU>

namespace is2d {
namespace {

// J conj(M) J for the exchange matrix J of matching size.
MatC reflect(const MatC& M) { return M.conjugate().reverse(); }

}  // namespace

MatC solve_tbt(const std::vector<MatC>& H, const MatC& rhs)
{
  const int m = static_cast<int>(H.size());
  if (m == 0) throw std::invalid_argument("solve_tbt: no blocks");
  const Eigen::Index p = H[0].rows();
  for (const auto& Hd : H)
    if (Hd.rows() != p || Hd.cols() != p) throw std::invalid_argument("solve_tbt: blocks must be square and equal");
  if (rhs.rows() != m * p) throw std::invalid_argument("solve_tbt: right-hand side has the wrong length");
  const Eigen::Index r = rhs.cols();

  // Forward predictor F satisfies C_k F = [E_f; 0]. Persymmetry of a
  // Hermitian TBT matrix gives the backward one as G_j = J conj(F_{k-1-j}) J.
  std::vector<MatC> F{MatC::Identity(p, p)}, G{MatC::Identity(p, p)};
  MatC Ef = H[0];
  Eigen::LLT<MatC> Eb_llt(Ef);
  if (Eb_llt.info() != Eigen::Success) throw TbtBreakdown(0);

  std::vector<MatC> x{Eb_llt.solve(rhs.topRows(p))};
  for (int k = 1; k < m; ++k) {
    MatC Df = MatC::Zero(p, p);
    for (int j = 0; j < k; ++j) Df.noalias() += H[k - j] * F[j];
    const MatC alpha = -Eb_llt.solve(Df);

    std::vector<MatC> Fn(k + 1);
    Fn[0] = F[0];
    for (int j = 1; j < k; ++j) Fn[j] = F[j] + G[j - 1] * alpha;
    Fn[k] = G[k - 1] * alpha;
    Ef += reflect(Df) * alpha;
    Ef = 0.5 * (Ef + Ef.adjoint()).eval();

    std::vector<MatC> Gn(k + 1);
    for (int j = 0; j <= k; ++j) Gn[j] = reflect(Fn[k - j]);
    F = std::move(Fn);
    G = std::move(Gn);

    Eb_llt.compute(reflect(Ef));
    if (Eb_llt.info() != Eigen::Success) throw TbtBreakdown(k);

    MatC eps = MatC::Zero(p, r);
    for (int j = 0; j < k; ++j) eps.noalias() += H[k - j] * x[j];
    const MatC gamma = Eb_llt.solve(rhs.middleRows(k * p, p) - eps);
    for (int j = 0; j < k; ++j) x[j].noalias() += G[j] * gamma;
    x.push_back(G[k] * gamma);
  }

  MatC out(m * p, r);
  for (int k = 0; k < m; ++k) out.middleRows(k * p, p) = x[k];
  if (!out.allFinite()) throw TbtBreakdown(m - 1);
  return out;
}

VecC solve_tbt(const std::vector<MatC>& H, const VecC& rhs) { return solve_tbt(H, MatC(rhs)).col(0); }

MatC dense_solve(const MatC& M, const MatC& rhs)
{
  if (M.rows() != M.cols() || M.rows() != rhs.rows()) throw std::invalid_argument("dense_solve: dimension mismatch");
  Eigen::PartialPivLU<MatC> lu(M);
  const double rc = lu.rcond();
  if (!(rc > std::numeric_limits<double>::epsilon())) throw SingularMatrixError("dense_solve: matrix is numerically singular");
  MatC x = lu.solve(rhs);
  if (!x.allFinite()) throw SingularMatrixError("dense_solve: non-finite solution");
  return x;
}

VecC dense_solve(const MatC& M, const VecC& rhs) { return dense_solve(M, MatC(rhs)).col(0); }

Direction newton_direction(const HessianBlocks& hb, const HalfVector& grad, const DirectionOptions& opts)
{
  const Eigen::Index na = hb.n2() + 1;
  const Eigen::Index nc = static_cast<Eigen::Index>(hb.n1()) * (2 * hb.n2() + 1);
  if (grad.size() != na + nc) throw std::invalid_argument("newton_direction: gradient length mismatch");

  Direction out;
  const VecC a = grad.head(na);
  MatC S = hb.A;
  VecC rhs_x = -a;
  MatC Y;
  VecC z;
  if (nc > 0) {
    const MatC Bs = hb.B_stacked();
    MatC R(nc, na + 1);
    R.leftCols(na) = Bs;
    R.col(na) = grad.tail(nc);
    MatC Z;
    try {
      Z = solve_tbt(hb.H, R);
    } catch (const TbtBreakdown&) {
      if (!opts.dense_fallback) throw;
      out.used_fallback = true;
      Z = dense_solve(hb.C_dense(), R);
    }
    Y = Z.leftCols(na);
    z = Z.col(na);
    S.noalias() -= Bs.adjoint() * Y;
    rhs_x.noalias() += Bs.adjoint() * z;
  }

  const double snorm = S.norm();
  out.schur_asymmetry = snorm > 0 ? (S - S.adjoint()).norm() / snorm : 0.0;
  S = 0.5 * (S + S.adjoint()).eval();
  Eigen::LLT<MatC> llt(S);
  if (llt.info() != Eigen::Success) throw IndefiniteSchurError("newton_direction: Schur complement is not positive definite");
  const VecC x = llt.solve(rhs_x);

  out.delta.resize(na + nc);
  out.delta.head(na) = x;
  if (nc > 0) out.delta.tail(nc) = -z - Y * x;
  if (!out.delta.allFinite()) throw SingularMatrixError("newton_direction: non-finite direction");
  return out;
}

HalfVector newton_direction_dense(const HessianBlocks& hb, const HalfVector& grad)
{
  return dense_solve(hb.dense(), VecC(-grad));
}

std::vector<BenchRecord> bench_tbt(const std::vector<int>& ns, int trials, unsigned long long seed)
{
  using clock = std::chrono::steady_clock;
  const int saved_threads = Eigen::nbThreads();
  Eigen::setNbThreads(1);

  std::vector<BenchRecord> out;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (int n : ns) {
    const int N = 4 * n + 2;
    const GridSpec g(N, N, n, n);
    double t_struct = 0.0, t_dense = 0.0;
    for (int t = 0; t < trials; ++t) {
      HalfVector q(static_cast<Eigen::Index>(g.half_size()));
      for (auto& v : q) v = {normal(rng), normal(rng)};
      q[0] = 0.0;
      // sum |Q| <= 2 sum |q_k| keeps 1 + Q >= 1/2 on the whole torus.
      q *= 0.25 / q.cwiseAbs().sum();
      const DualProblem p(fourier_coeffs(MatR::Ones(N, N), g), MatR::Ones(N, N), g);
      const DualState st = evaluate_dual(q, p, true);
      const HessianBlocks hb = assemble_hessian(st.h);
      HalfVector rhs(q.size());
      for (auto& v : rhs) v = {normal(rng), normal(rng)};

      auto t0 = clock::now();
      const Direction d = newton_direction(hb, rhs);
      auto t1 = clock::now();
      const HalfVector dd = newton_direction_dense(hb, rhs);
      auto t2 = clock::now();
      if ((d.delta - dd).norm() > 1e-6 * dd.norm()) throw std::runtime_error("bench_tbt: structured and dense paths disagree");
      t_struct += std::chrono::duration<double>(t1 - t0).count();
      t_dense += std::chrono::duration<double>(t2 - t1).count();
    }
    out.push_back({n, "structured", t_struct / trials});
    out.push_back({n, "dense", t_dense / trials});
  }
  Eigen::setNbThreads(saved_threads);
  return out;
}

}  // namespace is2d
