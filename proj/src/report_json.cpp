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

#include "is2d/report_json.hpp"

namespace is2d {

nlohmann::json half_to_json(const HalfVector& q)
{
  auto out = nlohmann::json::array();
  for (const auto& v : q) out.push_back({v.real(), v.imag()});
  return out;
}

nlohmann::json to_json(const SolveReport& r)
{
  return {{"q", half_to_json(r.q)},
          {"grad_norm_history", r.grad_norm_history},
          {"iterations", r.iterations},
          {"converged", r.converged},
          {"fallback_events", r.fallback_events},
          {"descent_corrections", r.descent_corrections},
          {"termination", to_string(r.termination)},
          {"final_value", r.final_value}};
}

nlohmann::json to_json(const ContinuationReport& r)
{
  auto inner = nlohmann::json::array();
  for (const auto& s : r.inner_reports) inner.push_back(to_json(s));
  nlohmann::json j{{"q", half_to_json(r.q)},
                   {"t_path", r.t_path},
                   {"inner_reports", inner},
                   {"step_halvings", r.step_halvings},
                   {"converged", r.converged}};
  if (!r.converged) {
    j["failed_t"] = r.failed_t;
    j["failure"] = r.failure;
  }
  return j;
}

nlohmann::json to_json(const TrialResult& r)
{
  auto th = nlohmann::json::array();
  for (const auto& f : r.theta_hat) th.push_back({f[0], f[1]});
  return {{"trial", r.trial},        {"method", to_string(r.method)}, {"theta_hat", th},
          {"error", r.error},        {"seed", r.seed},                {"converged", r.converged}};
}

nlohmann::json to_json(const MethodSummary& s)
{
  return {{"method", to_string(s.method)}, {"count", s.count},       {"median", s.median},
          {"q1", s.q1},                    {"q3", s.q3},             {"outliers", s.outliers},
          {"nonconverged", s.nonconverged}};
}

}  // namespace is2d
