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

#include <complex>
#include <cstddef>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace is2d {

using cplx = std::complex<double>;
using MatC = Eigen::MatrixXcd;
using VecC = Eigen::VectorXcd;
using MatR = Eigen::MatrixXd;

// Real samples on the N2 x N1 grid, entry (l2, l1). Used both for densities
// (strictly positive) and for signed grid functions such as periodograms.
using Spectrum = MatR;

// Complex coordinates over the half index set, ordered
// (0,0), (0,1), ..., (0,n2), (1,-n2), ..., (n1,n2).
using HalfVector = VecC;

struct Index2 {
  int k1;
  int k2;
  friend bool operator==(const Index2&, const Index2&) = default;
};

class GridSpec {
 public:
  GridSpec() = default;
  GridSpec(int N1, int N2, int n1, int n2);

  int N1() const { return N1_; }
  int N2() const { return N2_; }
  int n1() const { return n1_; }
  int n2() const { return n2_; }

  std::size_t num_points() const { return static_cast<std::size_t>(N1_) * N2_; }
  std::size_t lambda_size() const { return static_cast<std::size_t>(2 * n1_ + 1) * (2 * n2_ + 1); }
  std::size_t half_size() const { return static_cast<std::size_t>(n2_ + 1 + n1_ * (2 * n2_ + 1)); }

  // Half index set in storage order.
  const std::vector<Index2>& half_indices() const { return half_; }
  // Position of k in the half ordering; k must lie in the half set.
  int half_pos(int k1, int k2) const;
  bool in_lambda(int k1, int k2) const { return std::abs(k1) <= n1_ && std::abs(k2) <= n2_; }

  double theta1(int l1) const;
  double theta2(int l2) const;

  friend bool operator==(const GridSpec& a, const GridSpec& b)
  {
    return a.N1_ == b.N1_ && a.N2_ == b.N2_ && a.n1_ == b.n1_ && a.n2_ == b.n2_;
  }

 private:
  int N1_ = 0, N2_ = 0, n1_ = 0, n2_ = 0;
  std::vector<Index2> half_;
};

GridSpec make_grid(int N1, int N2, int n1, int n2);

// Laurent coefficients over Lambda stored as a (2n2+1) x (2n1+1) matrix with
// c_{k1,k2} at (k2+n2, k1+n1). Construction enforces c_{-k} = conj(c_k).
class CoeffArray {
 public:
  CoeffArray() = default;
  CoeffArray(int n1, int n2);
  explicit CoeffArray(MatC values);

  static CoeffArray from_half(const HalfVector& q, int n1, int n2);

  int n1() const { return n1_; }
  int n2() const { return n2_; }
  const MatC& values() const { return v_; }
  double symmetry_correction() const { return correction_; }

  cplx operator()(int k1, int k2) const { return v_(k2 + n2_, k1 + n1_); }
  HalfVector half() const;

 private:
  int n1_ = 0, n2_ = 0;
  MatC v_;
  double correction_ = 0.0;
};

// Coefficients of c restricted to the smaller box |k_j| <= m_j.
CoeffArray truncate(const CoeffArray& c, int m1, int m2);

// Q(zeta_l) = sum_k c_k exp(-i<k, theta_l>) on an M1 x M2 grid via a
// zero-padded FFT. Requires M_j >= 2 n_j + 1.
MatC evaluate_coeffs_complex(const MatC& c, int n1, int n2, int M1, int M2);
MatR evaluate_coeffs(const CoeffArray& c, int M1, int M2);
MatR evaluate_coeffs(const CoeffArray& c, const GridSpec& g);

// Full table (1/|N|) sum_l exp(i<k, theta_l>) f(zeta_l) for every k mod N,
// entry (k2 mod N2, k1 mod N1).
MatC grid_fourier(const MatR& f);
MatC grid_fourier(const MatC& f);

inline cplx fourier_at(const MatC& table, int k1, int k2)
{
  const auto N2 = static_cast<int>(table.rows());
  const auto N1 = static_cast<int>(table.cols());
  return table(((k2 % N2) + N2) % N2, ((k1 % N1) + N1) % N1);
}

// Gamma operator restricted to Lambda.
CoeffArray fourier_coeffs(const MatR& f, const GridSpec& g);

void check_shape(const MatR& f, const GridSpec& g, const char* what);
void require_positive(const MatR& f, const char* what);

}  // namespace is2d
