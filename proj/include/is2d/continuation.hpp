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

#include <iosfwd>
#include <string>
#include <vector>

#include "is2d/newton.hpp"

namespace is2d {

// Moments Sigma with the prior deformed along (1-t) psi0 + t psi1.
struct HomotopyProblem {
  CoeffArray sigma;
  Spectrum psi0;
  Spectrum psi1;
  GridSpec grid;

  void validate() const;
};

struct ContinuationOptions {
  double dt = 0.5;
  double min_dt = 1.0 / 64;
  NewtonOptions newton;

  void validate() const;
};

struct TraceRecord {
  int outer_step;
  double t;
  int inner_iter;
  double grad_norm;
};

struct ContinuationReport {
  HalfVector q;
  std::vector<double> t_path;                // accepted parameter values, starting at 0
  std::vector<SolveReport> inner_reports;    // one per accepted t
  int step_halvings = 0;
  bool converged = false;
  double failed_t = -1.0;                    // parameter at which the step underflowed
  std::string failure;

  std::vector<TraceRecord> trace() const;
};

Spectrum homotopy_prior(double t, const HomotopyProblem& hp);

// dq/dt along the solution curve: H^{-1} Gamma(s^-2 Psi_t^-2 (Psi1 - Psi0))
// restricted to the half set, with s = Psi_t^{-1} + Q.
HalfVector vector_field(const HalfVector& q, double t, const HomotopyProblem& hp);

ContinuationReport continue_solve(const HomotopyProblem& hp, const ContinuationOptions& opts = {});

// Delimiter-separated records: outer_step,t,inner_iter,grad_norm.
void write_trace(std::ostream& os, const ContinuationReport& rep);

}  // namespace is2d
