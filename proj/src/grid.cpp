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

#include "is2d/grid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "is2d/fft.hpp"

namespace is2d {

GridSpec::GridSpec(int N1, int N2, int n1, int n2) : N1_(N1), N2_(N2), n1_(n1), n2_(n2)
{
  if (N1 <= 0 || N2 <= 0) throw std::invalid_argument("grid: N1 and N2 must be positive");
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("grid: moment orders must be nonnegative");
  if (N1 < 2 * n1 + 1 || N2 < 2 * n2 + 1) {
    std::ostringstream os;
    os << "grid: N=[" << N1 << "," << N2 << "] too small for n=[" << n1 << "," << n2
       << "]; need N_j >= 2n_j+1";
    throw std::invalid_argument(os.str());
  }
  half_.reserve(half_size());
  for (int k2 = 0; k2 <= n2; ++k2) half_.push_back({0, k2});
  for (int k1 = 1; k1 <= n1; ++k1)
    for (int k2 = -n2; k2 <= n2; ++k2) half_.push_back({k1, k2});
}

int GridSpec::half_pos(int k1, int k2) const
{
  if (k1 == 0 && k2 >= 0 && k2 <= n2_) return k2;
  if (k1 >= 1 && k1 <= n1_ && std::abs(k2) <= n2_) return n2_ + 1 + (k1 - 1) * (2 * n2_ + 1) + (k2 + n2_);
  throw std::out_of_range("grid: index not in the half set");
}

double GridSpec::theta1(int l1) const { return 2.0 * std::numbers::pi * l1 / N1_; }
double GridSpec::theta2(int l2) const { return 2.0 * std::numbers::pi * l2 / N2_; }

GridSpec make_grid(int N1, int N2, int n1, int n2) { return GridSpec(N1, N2, n1, n2); }

CoeffArray::CoeffArray(int n1, int n2) : n1_(n1), n2_(n2), v_(MatC::Zero(2 * n2 + 1, 2 * n1 + 1))
{
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("coeffs: negative order");
}

CoeffArray::CoeffArray(MatC values) : v_(std::move(values))
{
  if (v_.rows() % 2 == 0 || v_.cols() % 2 == 0)
    throw std::invalid_argument("coeffs: matrix dimensions must be odd");
  n2_ = static_cast<int>(v_.rows() / 2);
  n1_ = static_cast<int>(v_.cols() / 2);
  // Rotating by 180 degrees and conjugating maps c_k to conj(c_{-k}).
  MatC mirrored = v_.reverse().conjugate();
  correction_ = 0.5 * (v_ - mirrored).cwiseAbs().maxCoeff();
  v_ = 0.5 * (v_ + mirrored);
}

CoeffArray CoeffArray::from_half(const HalfVector& q, int n1, int n2)
{
  const GridSpec shape(2 * n1 + 1, 2 * n2 + 1, n1, n2);
  if (q.size() != static_cast<Eigen::Index>(shape.half_size()))
    throw std::invalid_argument("coeffs: half vector has the wrong length");
  MatC v = MatC::Zero(2 * n2 + 1, 2 * n1 + 1);
  const auto& idx = shape.half_indices();
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto [k1, k2] = idx[i];
    v(k2 + n2, k1 + n1) = q[static_cast<Eigen::Index>(i)];
    v(-k2 + n2, -k1 + n1) = std::conj(q[static_cast<Eigen::Index>(i)]);
  }
  v(n2, n1) = q[0].real();
  CoeffArray c;
  c.n1_ = n1;
  c.n2_ = n2;
  c.v_ = std::move(v);
  return c;
}

HalfVector CoeffArray::half() const
{
  const GridSpec shape(2 * n1_ + 1, 2 * n2_ + 1, n1_, n2_);
  HalfVector q(static_cast<Eigen::Index>(shape.half_size()));
  const auto& idx = shape.half_indices();
  for (std::size_t i = 0; i < idx.size(); ++i) q[static_cast<Eigen::Index>(i)] = (*this)(idx[i].k1, idx[i].k2);
  return q;
}

CoeffArray truncate(const CoeffArray& c, int m1, int m2)
{
  if (m1 < 0 || m2 < 0 || m1 > c.n1() || m2 > c.n2()) throw std::invalid_argument("truncate: box exceeds coefficient support");
  return CoeffArray(MatC(c.values().block(c.n2() - m2, c.n1() - m1, 2 * m2 + 1, 2 * m1 + 1)));
}

MatC evaluate_coeffs_complex(const MatC& c, int n1, int n2, int M1, int M2)
{
  if (c.rows() != 2 * n2 + 1 || c.cols() != 2 * n1 + 1)
    throw std::invalid_argument("evaluate_coeffs: coefficient shape mismatch");
  if (M1 < 2 * n1 + 1 || M2 < 2 * n2 + 1)
    throw std::invalid_argument("evaluate_coeffs: grid too small for coefficient support");
  MatC buf = MatC::Zero(M2, M1);
  for (int k1 = -n1; k1 <= n1; ++k1)
    for (int k2 = -n2; k2 <= n2; ++k2)
      buf((k2 + M2) % M2, (k1 + M1) % M1) = c(k2 + n2, k1 + n1);
  fft::transform(buf.data(), M1, M2, fft::Direction::Forward);
  return buf;
}

MatR evaluate_coeffs(const CoeffArray& c, int M1, int M2)
{
  return evaluate_coeffs_complex(c.values(), c.n1(), c.n2(), M1, M2).real();
}

MatR evaluate_coeffs(const CoeffArray& c, const GridSpec& g)
{
  if (c.n1() != g.n1() || c.n2() != g.n2())
    throw std::invalid_argument("evaluate_coeffs: coefficients not indexed by this grid");
  return evaluate_coeffs(c, g.N1(), g.N2());
}

MatC grid_fourier(const MatC& f)
{
  MatC buf = f;
  const auto N2 = static_cast<int>(f.rows());
  const auto N1 = static_cast<int>(f.cols());
  fft::transform(buf.data(), N1, N2, fft::Direction::Backward);
  buf /= static_cast<double>(f.size());
  return buf;
}

MatC grid_fourier(const MatR& f) { return grid_fourier(MatC(f.cast<cplx>())); }

CoeffArray fourier_coeffs(const MatR& f, const GridSpec& g)
{
  check_shape(f, g, "fourier_coeffs");
  const MatC table = grid_fourier(f);
  MatC v(2 * g.n2() + 1, 2 * g.n1() + 1);
  for (int k1 = -g.n1(); k1 <= g.n1(); ++k1)
    for (int k2 = -g.n2(); k2 <= g.n2(); ++k2) v(k2 + g.n2(), k1 + g.n1()) = fourier_at(table, k1, k2);
  return CoeffArray(std::move(v));
}

void check_shape(const MatR& f, const GridSpec& g, const char* what)
{
  if (f.rows() != g.N2() || f.cols() != g.N1()) {
    std::ostringstream os;
    os << what << ": grid function is " << f.rows() << "x" << f.cols() << ", expected " << g.N2() << "x"
       << g.N1();
    throw std::invalid_argument(os.str());
  }
}

void require_positive(const MatR& f, const char* what)
{
  if (f.size() == 0 || !(f.minCoeff() > 0.0) || !f.allFinite())
    throw std::invalid_argument(std::string(what) + ": values must be finite and strictly positive");
}

}  // namespace is2d
