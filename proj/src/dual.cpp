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

#include "is2d/dual.hpp"

#include <cmath>
#include <sstream>

namespace is2d {
namespace {

void check_half(const HalfVector& q, const GridSpec& g)
{
  if (q.size() != static_cast<Eigen::Index>(g.half_size()))
    throw std::invalid_argument("dual: half vector length does not match the grid");
}

HalfVector read_half(const MatC& table, const GridSpec& g)
{
  HalfVector out(static_cast<Eigen::Index>(g.half_size()));
  const auto& idx = g.half_indices();
  for (std::size_t i = 0; i < idx.size(); ++i)
    out[static_cast<Eigen::Index>(i)] = fourier_at(table, idx[i].k1, idx[i].k2);
  out[0] = out[0].real();
  return out;
}

double inner_product(const HalfVector& q, const CoeffArray& sigma, const GridSpec& g)
{
  const CoeffArray Q = CoeffArray::from_half(q, g.n1(), g.n2());
  const cplx ip = (Q.values().array() * sigma.values().array().conjugate()).sum();
  if (std::abs(ip.imag()) > 1e-10 * std::max(1.0, std::abs(ip)))
    throw std::logic_error("dual: inner product is not real");
  return ip.real();
}

void throw_infeasible(double margin)
{
  std::ostringstream os;
  os << "dual: point is infeasible (min of Psi^-1 + Q is " << margin << ")";
  throw InfeasibleError(os.str());
}

}  // namespace

DualProblem::DualProblem(CoeffArray sigma, Spectrum psi, GridSpec grid)
    : sigma_(std::move(sigma)), psi_(std::move(psi)), grid_(std::move(grid))
{
  check_shape(psi_, grid_, "DualProblem");
  require_positive(psi_, "DualProblem prior");
  if (sigma_.n1() != grid_.n1() || sigma_.n2() != grid_.n2())
    throw std::invalid_argument("DualProblem: moments not indexed by the grid's Lambda");
  if (!(sigma_(0, 0).real() > 0.0)) throw std::invalid_argument("DualProblem: sigma_00 must be positive");
  psi_inv_ = psi_.cwiseInverse();
}

MatR dual_integrand(const HalfVector& q, const DualProblem& p)
{
  const auto& g = p.grid();
  check_half(q, g);
  return p.psi_inv() + evaluate_coeffs(CoeffArray::from_half(q, g.n1(), g.n2()), g);
}

Feasibility feasible(const HalfVector& q, const DualProblem& p)
{
  const MatR s = dual_integrand(q, p);
  const double margin = s.minCoeff();
  return {margin > 0.0 && std::isfinite(margin), margin};
}

DualState evaluate_dual(const HalfVector& q, const DualProblem& p, bool with_hessian)
{
  const auto& g = p.grid();
  DualState st;
  const MatR s = dual_integrand(q, p);
  st.margin = s.minCoeff();
  st.feasible = st.margin > 0.0 && std::isfinite(st.margin);
  if (!st.feasible) return st;

  st.value = inner_product(q, p.sigma(), g) - s.array().log().mean();
  const MatR inv = s.cwiseInverse();
  const HalfVector moments = read_half(grid_fourier(inv), g);
  st.grad = p.sigma().half() - moments;
  st.grad[0] = st.grad[0].real();
  if (with_hessian) st.h = h_table_from_grid(inv.cwiseAbs2(), g.n1(), g.n2());
  return st;
}

double dual_value(const HalfVector& q, const DualProblem& p)
{
  const MatR s = dual_integrand(q, p);
  const double margin = s.minCoeff();
  if (!(margin > 0.0)) throw_infeasible(margin);
  return inner_product(q, p.sigma(), p.grid()) - s.array().log().mean();
}

HalfVector dual_gradient(const HalfVector& q, const DualProblem& p)
{
  const MatR s = dual_integrand(q, p);
  const double margin = s.minCoeff();
  if (!(margin > 0.0)) throw_infeasible(margin);
  HalfVector grad = p.sigma().half() - read_half(grid_fourier(MatR(s.cwiseInverse())), p.grid());
  grad[0] = grad[0].real();
  return grad;
}

Spectrum primal_spectrum(const HalfVector& q, const DualProblem& p)
{
  const MatR s = dual_integrand(q, p);
  const double margin = s.minCoeff();
  if (!(margin > 0.0)) throw_infeasible(margin);
  return s.cwiseInverse();
}

HTable::HTable(int n1, int n2, MatC values) : n1_(n1), n2_(n2), v_(std::move(values))
{
  if (v_.rows() != 4 * n2 + 1 || v_.cols() != n1 + 1) throw std::invalid_argument("HTable: wrong table shape");
}

HTable h_table_from_grid(const MatR& f, int n1, int n2)
{
  const MatC table = grid_fourier(f);
  MatC v(4 * n2 + 1, n1 + 1);
  for (int k1 = 0; k1 <= n1; ++k1)
    for (int k2 = -2 * n2; k2 <= 2 * n2; ++k2) v(k2 + 2 * n2, k1) = fourier_at(table, k1, k2);
  v(2 * n2, 0) = v(2 * n2, 0).real();
  return HTable(n1, n2, std::move(v));
}

HTable hessian_h(const HalfVector& q, const DualProblem& p)
{
  const MatR s = dual_integrand(q, p);
  const double margin = s.minCoeff();
  if (!(margin > 0.0)) throw_infeasible(margin);
  return h_table_from_grid(s.cwiseInverse().cwiseAbs2(), p.grid().n1(), p.grid().n2());
}

HessianBlocks assemble_hessian(const HTable& h)
{
  const int n1 = h.n1(), n2 = h.n2();
  const int p = 2 * n2 + 1;
  HessianBlocks hb;
  hb.h = h;
  hb.A.resize(n2 + 1, n2 + 1);
  for (int a = 0; a <= n2; ++a)
    for (int b = 0; b <= n2; ++b) hb.A(a, b) = h(0, a - b);

  hb.B.reserve(n1);
  for (int j = 1; j <= n1; ++j) {
    MatC Bj(p, n2 + 1);
    for (int r = 0; r < p; ++r)
      for (int b = 0; b <= n2; ++b) Bj(r, b) = h(j, r - n2 - b);
    hb.B.push_back(std::move(Bj));
  }

  hb.H.reserve(n1);
  for (int d = 0; d < n1; ++d) {
    MatC Hd(p, p);
    for (int r = 0; r < p; ++r)
      for (int c = 0; c < p; ++c) Hd(r, c) = h(d, r - c);
    hb.H.push_back(std::move(Hd));
  }

  const double scale = std::max(1.0, hb.A.cwiseAbs().maxCoeff());
  if ((hb.A - hb.A.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::logic_error("assemble_hessian: A block is not Hermitian");
  if (n1 > 0 && (hb.H[0] - hb.H[0].adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::logic_error("assemble_hessian: H_0 block is not Hermitian");
  return hb;
}

HessianBlocks assemble_hessian(const HTable& h, const GridSpec& g)
{
  if (h.n1() != g.n1() || h.n2() != g.n2()) throw std::invalid_argument("assemble_hessian: table/grid mismatch");
  return assemble_hessian(h);
}

MatC HessianBlocks::B_stacked() const
{
  const int p = 2 * n2() + 1;
  MatC out(static_cast<Eigen::Index>(n1()) * p, n2() + 1);
  for (int j = 0; j < n1(); ++j) out.middleRows(static_cast<Eigen::Index>(j) * p, p) = B[j];
  return out;
}

MatC HessianBlocks::C_dense() const
{
  const int p = 2 * n2() + 1;
  MatC C(static_cast<Eigen::Index>(n1()) * p, static_cast<Eigen::Index>(n1()) * p);
  for (int i = 0; i < n1(); ++i)
    for (int j = 0; j < n1(); ++j) C.block(i * p, j * p, p, p) = C_block(i - j);
  return C;
}

MatC HessianBlocks::dense() const
{
  const Eigen::Index a = n2() + 1;
  const Eigen::Index c = static_cast<Eigen::Index>(n1()) * (2 * n2() + 1);
  MatC H(a + c, a + c);
  H.topLeftCorner(a, a) = A;
  if (c > 0) {
    const MatC Bs = B_stacked();
    H.bottomLeftCorner(c, a) = Bs;
    H.topRightCorner(a, c) = Bs.adjoint();
    H.bottomRightCorner(c, c) = C_dense();
  }
  return H;
}

double directional_derivative(const HalfVector& g, const HalfVector& d)
{
  double D = (std::conj(g[0]) * d[0]).real();
  for (Eigen::Index i = 1; i < g.size(); ++i) D += 2.0 * (std::conj(g[i]) * d[i]).real();
  return D;
}

}  // namespace is2d
