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

#include "is2d/grid.hpp"

namespace is2d {

// Field samples y(t1, t2) stored T2 x T1, entry (t2, t1).
using FieldData = MatC;

// Biased time-average estimate (1/(T1 T2)) sum_t y(t+k) conj(y(t)) over Lambda.
// Lags with k1 >= 0 are summed directly; the rest follow by conjugation.
CoeffArray estimate_covariances(const FieldData& y, const GridSpec& g);
CoeffArray estimate_covariances(const FieldData& y, int n1, int n2);

// Fourier coefficients of a known positive spectrum over Lambda.
CoeffArray covariances_from_spectrum(const Spectrum& phi, const GridSpec& g);

}  // namespace is2d
