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

#include "is2d/newton.hpp"

#include <cmath>
#include <limits>

#include "is2d/structured.hpp"

namespace is2d {

void NewtonOptions::validate() const
{
  if (!(grad_tol > 0) || max_iters < 0 || !(min_step > 0) || !(armijo > 0 && armijo < 1))
    throw std::invalid_argument("NewtonOptions: tolerances must be positive");
  if (!(backtrack_factor > 0 && backtrack_factor < 1))
    throw std::invalid_argument("NewtonOptions: backtrack_factor must lie in (0,1)");
}

const char* to_string(Termination t)
{
  switch (t) {
    case Termination::Converged: return "converged";
    case Termination::MaxIterations: return "max_iterations";
    case Termination::LineSearchFailed: return "line_search_failed";
    case Termination::LeftFeasibleSet: return "left_feasible_set";
    case Termination::SingularSystem: return "singular_system";
  }
  return "unknown";
}

SolveReport newton_solve(const DualProblem& p, const HalfVector& q0, const NewtonOptions& opts)
{
  opts.validate();
  SolveReport rep;
  rep.q = q0;
  rep.q[0] = rep.q[0].real();

  DualState st = evaluate_dual(rep.q, p, true);
  if (!st.feasible) throw InfeasibleError("newton_solve: initial point is infeasible");

  for (int it = 0;; ++it) {
    const double gn = st.grad.norm();
    rep.grad_norm_history.push_back(gn);
    rep.final_value = st.value;
    if (gn <= opts.grad_tol) {
      rep.converged = true;
      rep.termination = Termination::Converged;
      break;
    }
    if (it == opts.max_iters) {
      rep.termination = Termination::MaxIterations;
      break;
    }

    HalfVector d;
    try {
      const Direction dir = newton_direction(assemble_hessian(st.h), st.grad);
      rep.fallback_events += dir.used_fallback ? 1 : 0;
      d = dir.delta;
    } catch (const std::runtime_error&) {
      rep.termination = Termination::SingularSystem;
      break;
    }
    // q_00 is a real coordinate; the complex system leaves a spurious
    // imaginary part there.
    d[0] = d[0].real();

    if (!opts.damped) {
      const HalfVector qn = rep.q + d;
      DualState sn = evaluate_dual(qn, p, true);
      if (!sn.feasible) {
        rep.termination = Termination::LeftFeasibleSet;
        break;
      }
      rep.q = qn;
      st = std::move(sn);
      ++rep.iterations;
      continue;
    }

    double D = directional_derivative(st.grad, d);
    if (!(D < 0)) {
      d[0] *= 2.0;
      D = directional_derivative(st.grad, d);
      ++rep.descent_corrections;
    }

    bool accepted = false;
    for (double s = 1.0; s >= opts.min_step; s *= opts.backtrack_factor) {
      const HalfVector qn = rep.q + s * d;
      DualState sn = evaluate_dual(qn, p, false);
      if (!sn.feasible || !std::isfinite(sn.value)) continue;
      const bool decrease = sn.value <= st.value + opts.armijo * s * D && sn.value < st.value;
      // Once the predicted decrease is at rounding level, J can no longer
      // rank the iterates and the gradient norm is used instead.
      const bool flat = std::abs(s * D) <= 64 * std::numeric_limits<double>::epsilon() * (1 + std::abs(st.value));
      if (decrease || (flat && sn.grad.norm() < gn)) {
        rep.q = qn;
        st = evaluate_dual(rep.q, p, true);
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      rep.termination = Termination::LineSearchFailed;
      break;
    }
    ++rep.iterations;
  }
  return rep;
}

SolveReport newton_solve(const DualProblem& p, const NewtonOptions& opts)
{
  return newton_solve(p, HalfVector::Zero(static_cast<Eigen::Index>(p.grid().half_size())), opts);
}

}  // namespace is2d
