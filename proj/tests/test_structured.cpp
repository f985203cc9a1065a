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
#include "is2d/structured.hpp"
#include "oracles.hpp"

using namespace is2d;

namespace {

HessianBlocks random_blocks(std::mt19937_64& rng, int n1, int n2)
{
  const GridSpec g(std::max(4 * n1 + 2, 6), std::max(4 * n2 + 2, 6), n1, n2);
  const DualProblem p = oracle::random_problem(rng, g);
  return assemble_hessian(hessian_h(oracle::random_feasible_q(rng, p, 0.8), p), g);
}

}  // namespace

TEST_CASE("solve_tbt trivial cases")
{
  std::vector<MatC> H{MatC::Identity(5, 5), MatC::Zero(5, 5), MatC::Zero(5, 5)};
  const VecC b = VecC::Random(15);
  CHECK((solve_tbt(H, b) - b).norm() < 1e-15);
  H[0] *= 4.0;
  CHECK((solve_tbt(H, b) - b / 4.0).norm() < 1e-15);
  CHECK_THROWS_AS(solve_tbt(H, VecC(VecC::Random(14))), std::invalid_argument);
}

TEST_CASE("solve_tbt matches dense on Hessian C-blocks")
{
  std::mt19937_64 rng(2);
  for (int n1 = 1; n1 <= 4; ++n1)
    for (int n2 = 0; n2 <= 3; ++n2) {
      const HessianBlocks hb = random_blocks(rng, n1, n2);
      const MatC C = hb.C_dense();
      const MatC R = MatC::Random(C.rows(), 3);
      const MatC x = solve_tbt(hb.H, R);
      const MatC ref = dense_solve(C, R);
      CHECK((x - ref).norm() <= 1e-8 * ref.norm());
      CHECK((C * x - R).norm() <= 1e-8 * R.norm());
    }
}

TEST_CASE("solve_tbt reports breakdown on an indefinite block")
{
  std::vector<MatC> H{MatC::Identity(3, 3), MatC::Identity(3, 3) * 2.0};
  CHECK_THROWS_AS(solve_tbt(H, VecC(VecC::Random(6))), TbtBreakdown);
}

TEST_CASE("dense_solve examples")
{
  const VecC b = VecC::Random(4);
  CHECK((dense_solve(MatC::Identity(4, 4), b) - b).norm() < 1e-15);
  MatC D = MatC::Zero(2, 2);
  D(0, 0) = 1.0;
  D(1, 1) = 2.0;
  VecC r(2);
  r << 2.0, 2.0;
  const VecC x = dense_solve(D, r);
  CHECK(std::abs(x(0) - 2.0) < 1e-15);
  CHECK(std::abs(x(1) - 1.0) < 1e-15);

  const MatC G = MatC::Random(20, 20);
  const MatC M = G * G.adjoint() + MatC::Identity(20, 20);
  const VecC rhs = VecC::Random(20);
  CHECK((M * dense_solve(M, rhs) - rhs).norm() <= 1e-10 * rhs.norm());
  CHECK_THROWS_AS(dense_solve(MatC(MatC::Zero(3, 3)), VecC(VecC::Ones(3))), SingularMatrixError);
}

TEST_CASE("newton_direction examples")
{
  const int n1 = 2, n2 = 2;
  MatC hv = MatC::Zero(4 * n2 + 1, n1 + 1);
  hv(2 * n2, 0) = 9.0;
  const HessianBlocks hb = assemble_hessian(HTable(n1, n2, hv));
  const HalfVector g = HalfVector::Random(13);
  CHECK((newton_direction(hb, g).delta + g / 9.0).norm() < 1e-14);

  std::mt19937_64 rng(6);
  for (int i = 0; i < 20; ++i) {
    const HessianBlocks b = random_blocks(rng, 3, 3);
    HalfVector grad = HalfVector::Random(b.A.rows() + b.H[0].rows() * 3);
    grad(0) = grad(0).real();
    const Direction d = newton_direction(b, grad);
    const MatC H = b.dense();
    CHECK((H * d.delta + grad).norm() <= 1e-8 * grad.norm());
    CHECK((d.delta - newton_direction_dense(b, grad)).norm() <= 1e-8 * d.delta.norm());
    CHECK(d.schur_asymmetry <= 1e-12);
    CHECK_FALSE(d.used_fallback);
    CHECK(directional_derivative(grad, d.delta) < 0.0);
  }
}

TEST_CASE("newton_direction handles n1 = 0 and n2 = 0")
{
  std::mt19937_64 rng(8);
  for (auto [n1, n2] : {std::pair{0, 2}, std::pair{2, 0}}) {
    const HessianBlocks b = random_blocks(rng, n1, n2);
    const HalfVector grad = HalfVector::Random(b.dense().rows());
    CHECK((b.dense() * newton_direction(b, grad).delta + grad).norm() <= 1e-8 * grad.norm());
  }
}

TEST_CASE("bench_tbt smoke")
{
  const auto recs = bench_tbt({2, 3}, 2, 1);
  REQUIRE(recs.size() == 4);
  for (const auto& r : recs) CHECK(r.mean_seconds > 0.0);
  CHECK(recs[0].method != recs[1].method);
}
