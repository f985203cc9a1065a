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

#include <complex>

namespace is2d::fft {

enum class Direction { Forward, Backward };

// Unnormalized 2-D DFT of an N2 x N1 column-major array, in place.
// Forward uses exp(-i), Backward exp(+i). Plans are cached and shared; the
// call is safe from concurrent threads.
void transform(std::complex<double>* data, int N1, int N2, Direction dir);

}  // namespace is2d::fft
