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

#include "is2d/continuation.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "is2d/structured.hpp"

namespace is2d {

void HomotopyProblem::validate() const
{
  check_shape(psi0, grid, "HomotopyProblem psi0");
  check_shape(psi1, grid, "HomotopyProblem psi1");
  require_positive(psi0, "HomotopyProblem psi0");
  require_positive(psi1, "HomotopyProblem psi1");
  if (sigma.n1() != grid.n1() || sigma.n2() != grid.n2())
    throw std::invalid_argument("HomotopyProblem: moments not indexed by the grid's Lambda");
}

void ContinuationOptions::validate() const
{
  if (!(min_dt > 0 && min_dt <= dt && dt <= 1)) throw std::invalid_argument("ContinuationOptions: need 0 < min_dt <= dt <= 1");
  newton.validate();
}

Spectrum homotopy_prior(double t, const HomotopyProblem& hp)
{
  if (!(t >= 0.0 && t <= 1.0)) throw std::domain_error("homotopy_prior: t outside [0,1]");
  if (t == 0.0) return hp.psi0;
  if (t == 1.0) return hp.psi1;
  return (1.0 - t) * hp.psi0 + t * hp.psi1;
}

HalfVector vector_field(const HalfVector& q, double t, const HomotopyProblem& hp)
{
  const Spectrum psi_t = homotopy_prior(t, hp);
  const DualProblem p(hp.sigma, psi_t, hp.grid);
  const MatR s = dual_integrand(q, p);
  if (!(s.minCoeff() > 0.0)) throw InfeasibleError("vector_field: point is infeasible for the prior at t");

  const MatR inv2 = s.cwiseInverse().cwiseAbs2();
  const MatR integrand = inv2.cwiseProduct(p.psi_inv().cwiseAbs2()).cwiseProduct(hp.psi1 - hp.psi0);
  const MatC table = grid_fourier(integrand);
  const auto& g = hp.grid;
  HalfVector r(static_cast<Eigen::Index>(g.half_size()));
  for (std::size_t i = 0; i < g.half_indices().size(); ++i)
    r[static_cast<Eigen::Index>(i)] = fourier_at(table, g.half_indices()[i].k1, g.half_indices()[i].k2);
  r[0] = r[0].real();

  // newton_direction returns -H^{-1} grad, so pass -r to obtain H^{-1} r.
  const HessianBlocks hb = assemble_hessian(h_table_from_grid(inv2, g.n1(), g.n2()));
  HalfVector V = newton_direction(hb, -r).delta;
  V[0] = V[0].real();
  return V;
}

ContinuationReport continue_solve(const HomotopyProblem& hp, const ContinuationOptions& opts)
{
  hp.validate();
  opts.validate();
  ContinuationReport rep;

  const DualProblem p0(hp.sigma, hp.psi0, hp.grid);
  SolveReport first = newton_solve(p0, opts.newton);
  rep.q = first.q;
  const bool ok0 = first.converged;
  rep.inner_reports.push_back(std::move(first));
  if (!ok0) {
    rep.failed_t = 0.0;
    rep.failure = "corrector failed at t=0";
    return rep;
  }
  rep.t_path.push_back(0.0);

  double t = 0.0, dt = opts.dt;
  while (t < 1.0) {
    const double step = std::min(dt, 1.0 - t);
    const double t_next = (1.0 - (t + step) < 1e-14) ? 1.0 : t + step;

    bool accepted = false;
    SolveReport corr;
    try {
      const HalfVector pred = rep.q + step * vector_field(rep.q, t, hp);
      const DualProblem pn(hp.sigma, homotopy_prior(t_next, hp), hp.grid);
      if (feasible(pred, pn).ok) {
        corr = newton_solve(pn, pred, opts.newton);
        accepted = corr.converged;
      }
    } catch (const InfeasibleError&) {
      accepted = false;
    } catch (const std::runtime_error&) {
      accepted = false;
    }

    if (!accepted) {
      dt *= 0.5;
      ++rep.step_halvings;
      if (dt < opts.min_dt) {
        rep.failed_t = t;
        std::ostringstream os;
        os << "step size underflow at t=" << t;
        rep.failure = os.str();
        return rep;
      }
      continue;
    }
    rep.q = corr.q;
    rep.inner_reports.push_back(std::move(corr));
    t = t_next;
    rep.t_path.push_back(t);
    dt = std::min(opts.dt, 2.0 * dt);
  }
  rep.converged = true;
  return rep;
}

std::vector<TraceRecord> ContinuationReport::trace() const
{
  std::vector<TraceRecord> out;
  for (std::size_t i = 0; i < inner_reports.size(); ++i) {
    const double t = i < t_path.size() ? t_path[i] : failed_t;
    const auto& h = inner_reports[i].grad_norm_history;
    for (std::size_t k = 0; k < h.size(); ++k) out.push_back({static_cast<int>(i), t, static_cast<int>(k), h[k]});
  }
  return out;
}

void write_trace(std::ostream& os, const ContinuationReport& rep)
{
  os << "outer_step,t,inner_iter,grad_norm\n" << std::setprecision(17);
  for (const auto& r : rep.trace()) os << r.outer_step << ',' << r.t << ',' << r.inner_iter << ',' << r.grad_norm << '\n';
}

}  // namespace is2d
