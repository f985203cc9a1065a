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

#include <vector>

#include "is2d/grid.hpp"

namespace is2d {

class InfeasibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// J(q) = <Q, Sigma> - mean log(Psi^{-1} + Q) over the N-grid.
class DualProblem {
 public:
  DualProblem(CoeffArray sigma, Spectrum psi, GridSpec grid);

  const CoeffArray& sigma() const { return sigma_; }
  const Spectrum& psi() const { return psi_; }
  const MatR& psi_inv() const { return psi_inv_; }
  const GridSpec& grid() const { return grid_; }

 private:
  CoeffArray sigma_;
  Spectrum psi_;
  MatR psi_inv_;
  GridSpec grid_;
};

struct Feasibility {
  bool ok;
  double margin;
};

// s = Psi^{-1} + Q on the grid.
MatR dual_integrand(const HalfVector& q, const DualProblem& p);

Feasibility feasible(const HalfVector& q, const DualProblem& p);
double dual_value(const HalfVector& q, const DualProblem& p);
HalfVector dual_gradient(const HalfVector& q, const DualProblem& p);

// Primal estimate (Psi^{-1} + Q)^{-1} on the grid.
Spectrum primal_spectrum(const HalfVector& q, const DualProblem& p);

// Table of h_k = Gamma(s^{-2})_k for k1 in [0, n1], k2 in [-2 n2, 2 n2].
class HTable {
 public:
  HTable() = default;
  HTable(int n1, int n2, MatC values);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  const MatC& values() const { return v_; }
  // Valid for |k1| <= n1, |k2| <= 2 n2.
  cplx operator()(int k1, int k2) const
  {
    return k1 >= 0 ? v_(k2 + 2 * n2_, k1) : std::conj(v_(-k2 + 2 * n2_, -k1));
  }

 private:
  int n1_ = 0, n2_ = 0;
  MatC v_;
};

HTable hessian_h(const HalfVector& q, const DualProblem& p);
HTable h_table_from_grid(const MatR& f, int n1, int n2);

// Partition of the half-set Hessian [A B*; B C]. C is block Toeplitz with
// Toeplitz blocks H_d, d = -(n1-1) .. n1-1, and H_{-d} = H_d^*.
struct HessianBlocks {
  HTable h;
  MatC A;               // (n2+1) x (n2+1)
  std::vector<MatC> B;  // B_1 .. B_n1, each (2n2+1) x (n2+1)
  std::vector<MatC> H;  // H_0 .. H_{n1-1}, each (2n2+1) x (2n2+1)

  int n1() const { return h.n1(); }
  int n2() const { return h.n2(); }
  MatC C_block(int d) const { return d >= 0 ? H[d] : MatC(H[-d].adjoint()); }
  MatC B_stacked() const;
  MatC C_dense() const;
  MatC dense() const;
};

HessianBlocks assemble_hessian(const HTable& h);
HessianBlocks assemble_hessian(const HTable& h, const GridSpec& g);

// Everything one Newton iteration needs from a single grid evaluation.
struct DualState {
  bool feasible = false;
  double margin = 0.0;
  double value = 0.0;
  HalfVector grad;
  HTable h;
};

DualState evaluate_dual(const HalfVector& q, const DualProblem& p, bool with_hessian);

// Realified directional derivative of J at q along d, using the gradient g.
double directional_derivative(const HalfVector& g, const HalfVector& d);

}  // namespace is2d
