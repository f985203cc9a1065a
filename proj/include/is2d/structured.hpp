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

#include <string>
#include <vector>

#include "is2d/dual.hpp"

namespace is2d {

// Raised when a leading block of the recursion is not positive definite.
class TbtBreakdown : public std::runtime_error {
 public:
  TbtBreakdown(int level) : std::runtime_error("solve_tbt: recursion breakdown at block level " + std::to_string(level)), level(level) {}
  int level;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndefiniteSchurError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Solves C X = R for Hermitian positive definite block-Toeplitz C whose
// blocks H_d are themselves Toeplitz. Only H_0 .. H_{m-1} are read;
// H_{-d} = H_d^*. R may hold several right-hand sides.
MatC solve_tbt(const std::vector<MatC>& H, const MatC& rhs);
VecC solve_tbt(const std::vector<MatC>& H, const VecC& rhs);

// Pivoted LU solve of a Hermitian system; throws SingularMatrixError when the
// reciprocal condition estimate underflows machine precision.
MatC dense_solve(const MatC& M, const MatC& rhs);
VecC dense_solve(const MatC& M, const VecC& rhs);

struct DirectionOptions {
  bool dense_fallback = true;
};

struct Direction {
  HalfVector delta;
  bool used_fallback = false;
  double schur_asymmetry = 0.0;
};

// Solves [A B*; B C] delta = -grad by eliminating the C block through
// solve_tbt and factoring the (n2+1) x (n2+1) Schur complement.
Direction newton_direction(const HessianBlocks& hb, const HalfVector& grad, const DirectionOptions& opts = {});

// Same system solved densely on the assembled Hessian.
HalfVector newton_direction_dense(const HessianBlocks& hb, const HalfVector& grad);

struct BenchRecord {
  int n;
  std::string method;
  double mean_seconds;
};

// Times the structured and dense Newton-direction solves on Hessians taken at
// random feasible points of ME problems with n1 = n2 = n.
std::vector<BenchRecord> bench_tbt(const std::vector<int>& ns, int trials, unsigned long long seed);

}  // namespace is2d
