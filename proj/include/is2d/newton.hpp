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

struct NewtonOptions {
  double grad_tol = 1e-3;
  int max_iters = 100;
  double backtrack_factor = 0.5;
  double min_step = 1e-12;
  double armijo = 1e-4;
  // false: take the full step every iteration (plain Newton).
  bool damped = true;

  void validate() const;
};

enum class Termination { Converged, MaxIterations, LineSearchFailed, LeftFeasibleSet, SingularSystem };

const char* to_string(Termination t);

struct SolveReport {
  HalfVector q;
  std::vector<double> grad_norm_history;
  int iterations = 0;
  bool converged = false;
  int fallback_events = 0;
  // Steps whose q_00 component was rescaled to restore descent.
  int descent_corrections = 0;
  Termination termination = Termination::MaxIterations;
  double final_value = 0.0;
};

SolveReport newton_solve(const DualProblem& p, const HalfVector& q0, const NewtonOptions& opts = {});
SolveReport newton_solve(const DualProblem& p, const NewtonOptions& opts = {});

}  // namespace is2d
