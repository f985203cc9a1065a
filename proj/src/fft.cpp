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

#include "is2d/fft.hpp"

#include <fftw3.h>

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace is2d::fft {
namespace {

struct PlanDeleter {
  void operator()(fftw_plan_s* p) const { fftw_destroy_plan(p); }
};
using PlanPtr = std::unique_ptr<fftw_plan_s, PlanDeleter>;

class PlanCache {
 public:
  fftw_plan get(int N1, int N2, Direction dir)
  {
    const auto key = std::make_tuple(N1, N2, dir == Direction::Forward);
    {
      std::shared_lock lock(mu_);
      auto it = plans_.find(key);
      if (it != plans_.end()) return it->second.get();
    }
    std::unique_lock lock(mu_);
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second.get();

    // FFTW's planner is not reentrant; planning happens only under the lock.
    std::vector<fftw_complex> scratch(static_cast<std::size_t>(N1) * N2);
    fftw_plan p = fftw_plan_dft_2d(N1, N2, scratch.data(), scratch.data(),
                                   dir == Direction::Forward ? FFTW_FORWARD : FFTW_BACKWARD,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (p == nullptr) throw std::runtime_error("fftw: planning failed");
    plans_.emplace(key, PlanPtr(p));
    return p;
  }

 private:
  std::shared_mutex mu_;
  std::map<std::tuple<int, int, bool>, PlanPtr> plans_;
};

PlanCache& cache()
{
  static PlanCache c;
  return c;
}

}  // namespace

void transform(std::complex<double>* data, int N1, int N2, Direction dir)
{
  if (N1 <= 0 || N2 <= 0) throw std::invalid_argument("fft: empty grid");
  // Column-major N2 x N1 is row-major N1 x N2, so the slow axis is l1.
  auto* p = reinterpret_cast<fftw_complex*>(data);
  fftw_execute_dft(cache().get(N1, N2, dir), p, p);
}

}  // namespace is2d::fft
