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

#include "json.hpp"

#include "is2d/continuation.hpp"
#include "is2d/freq_est.hpp"
#include "is2d/sys_id.hpp"

namespace is2d {

nlohmann::json half_to_json(const HalfVector& q);
nlohmann::json to_json(const SolveReport& r);
nlohmann::json to_json(const ContinuationReport& r);
nlohmann::json to_json(const TrialResult& r);
nlohmann::json to_json(const MethodSummary& s);

}  // namespace is2d
