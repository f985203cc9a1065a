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

#include "is2d/covariance.hpp"

#include <algorithm>
#include <sstream>

namespace is2d {

CoeffArray estimate_covariances(const FieldData& y, int n1, int n2)
{
  const auto T2 = static_cast<int>(y.rows());
  const auto T1 = static_cast<int>(y.cols());
  if (n1 < 0 || n2 < 0) throw std::invalid_argument("estimate_covariances: negative lag order");
  if (T1 <= n1 || T2 <= n2) {
    std::ostringstream os;
    os << "estimate_covariances: record T=[" << T1 << "," << T2 << "] has no summands for lag order n=[" << n1
       << "," << n2 << "]";
    throw std::invalid_argument(os.str());
  }
  const double scale = 1.0 / (static_cast<double>(T1) * T2);
  const int w2 = 2 * n2 + 1;
  MatC v = MatC::Zero(w2, 2 * n1 + 1);

#pragma omp parallel for collapse(2) schedule(static) if ((n1 + 1) * w2 * T1 * T2 > 200000)
  for (int k1 = 0; k1 <= n1; ++k1) {
    for (int k2 = -n2; k2 <= n2; ++k2) {
      if (k1 == 0 && k2 < 0) continue;
      const int t2lo = std::max(0, -k2), t2hi = std::min(T2, T2 - k2);
      cplx acc = 0.0;
      for (int t1 = 0; t1 + k1 < T1; ++t1)
        for (int t2 = t2lo; t2 < t2hi; ++t2) acc += y(t2 + k2, t1 + k1) * std::conj(y(t2, t1));
      acc *= scale;
      v(k2 + n2, k1 + n1) = acc;
      v(-k2 + n2, -k1 + n1) = std::conj(acc);
    }
  }
  v(n2, n1) = v(n2, n1).real();
  return CoeffArray(std::move(v));
}

CoeffArray estimate_covariances(const FieldData& y, const GridSpec& g)
{
  return estimate_covariances(y, g.n1(), g.n2());
}

CoeffArray covariances_from_spectrum(const Spectrum& phi, const GridSpec& g)
{
  check_shape(phi, g, "covariances_from_spectrum");
  require_positive(phi, "covariances_from_spectrum");
  return fourier_coeffs(phi, g);
}

}  // namespace is2d
