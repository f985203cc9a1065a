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

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "is2d/continuation.hpp"
#include "is2d/covariance.hpp"

namespace is2d {

using Freq = std::array<double, 2>;

struct SinusoidModel {
  int nu = 0;
  std::vector<double> amps;
  std::vector<Freq> freqs;
  double noise_var = 0.0;
  int T1 = 0, T2 = 0;

  void validate() const;
};

// y(t) = sum_j a_j exp(i(<theta_j, t> + phi_j)) + w(t), phi_j ~ U[0, 2pi),
// w circular complex Gaussian with E|w|^2 = noise_var.
FieldData generate_field(const SinusoidModel& m, std::mt19937_64& rng);
FieldData generate_field(const SinusoidModel& m, std::uint64_t seed);

enum class WindowKind { Rectangular, Bartlett };

struct WindowSpec {
  WindowKind kind = WindowKind::Bartlett;
  int n1 = 1, n2 = 1;

  double weight(int k1, int k2) const;
};

// Correlogram sum_{|k_j| <= n_j} w(k) sigma_k exp(-i<k, theta>) on an M1 x M2
// grid. sigma must cover the window widths.
MatR periodogram(const CoeffArray& sigma, const WindowSpec& w, int M1, int M2);
MatR periodogram(const CoeffArray& sigma, const WindowSpec& w, const GridSpec& g);
MatR interpolate_periodogram(const CoeffArray& sigma, const WindowSpec& w, const GridSpec& g, int factor);

// Prior for the IS estimator. Constant and trigonometric-polynomial priors
// can be evaluated on any grid; sampled priors only on their own grid.
class Prior {
 public:
  static Prior constant(double c);
  static Prior polynomial(CoeffArray coeffs);
  static Prior samples(Spectrum values);

  MatR evaluate(int M1, int M2) const;
  MatR on_grid(const GridSpec& g) const { return evaluate(g.N1(), g.N2()); }
  bool evaluable_anywhere() const { return kind_ != Kind::Samples; }

 private:
  enum class Kind { Constant, Polynomial, Samples };
  Kind kind_ = Kind::Constant;
  double c_ = 1.0;
  CoeffArray coeffs_;
  Spectrum samples_;
};

struct IsOptions {
  bool use_continuation = false;
  NewtonOptions newton;
  ContinuationOptions continuation;
};

struct IsEstimate {
  GridSpec grid;
  Prior prior;
  HalfVector q;
  Spectrum phi_hat;
  bool converged = false;
  int iterations = 0;
  std::optional<SolveReport> newton;
  std::optional<ContinuationReport> continuation;
};

// Solves the dual for the given moments and returns (Psi^{-1} + Q)^{-1}.
// With continuation the homotopy starts from the constant prior sigma_00.
IsEstimate is_estimate_from_moments(const CoeffArray& sigma, const GridSpec& g, const Prior& prior,
                                    const IsOptions& opts = {});
IsEstimate is_estimate(const FieldData& y, const GridSpec& g, const Prior& prior, const IsOptions& opts = {});
// Same, with the maximum-entropy prior Psi = sigma_00.
IsEstimate is_estimate(const FieldData& y, const GridSpec& g, const IsOptions& opts = {});

// Evaluates (Psi^{-1} + Q)^{-1} on the grid refined by an integer factor.
// Refined points where Psi^{-1} + Q <= 0 are set to zero and counted in
// *nonpositive.
MatR interpolate(const IsEstimate& est, int factor, int* nonpositive = nullptr);

struct Peak {
  int l1, l2;
  double value;
};

// Strict 8-neighbour local maxima on the periodic grid, descending by value;
// ties go to the lexicographically smaller (l1, l2).
std::vector<Peak> local_maxima(const MatR& f);

// The nu largest local maxima as frequency pairs on f's grid, padded with the
// largest points not adjacent to an earlier pick when maxima run out.
std::vector<Freq> find_peaks(const MatR& f, int nu);

double torus_distance(const Freq& a, const Freq& b);
// Minimum over pairings of the stacked Euclidean error with wrap-around.
double frequency_error(const std::vector<Freq>& theta_hat, const std::vector<Freq>& theta);

enum class Method { Rect, Bart, Is };
const char* to_string(Method m);

struct TrialResult {
  Method method;
  std::vector<Freq> theta_hat;
  double error = 0.0;
  std::uint64_t seed = 0;
  int trial = 0;
  bool converged = true;
};

struct FreqEstConfig {
  SinusoidModel model;   // freqs are redrawn per trial in Monte-Carlo runs
  int N1 = 30, N2 = 30;  // estimation grid
  int is_n = 3;
  WindowSpec rect{WindowKind::Rectangular, 8, 8};
  WindowSpec bart{WindowKind::Bartlett, 12, 12};
  int interp_factor = 2;
  IsOptions is;
};

FreqEstConfig default_freq_config();
// Resolution cases 'A', 'B', 'C'.
SinusoidModel resolution_case(char which);

struct MethodOutput {
  Method method;
  MatR spectrum;  // on the interpolated grid
  std::vector<Freq> theta_hat;
  double error = 0.0;
  bool converged = true;
};

// Runs RECT, BART and IS on one realization of cfg.model.
std::vector<MethodOutput> run_single(const FreqEstConfig& cfg, std::uint64_t seed);

std::uint64_t trial_seed(std::uint64_t master, int trial);

// Draws frequencies uniformly on the torus per trial and records one result
// per method. Results are ordered by (trial, method) for any thread count.
std::vector<TrialResult> run_monte_carlo(const FreqEstConfig& cfg, int trials, std::uint64_t seed, int threads = 1);

struct MethodSummary {
  Method method;
  int count = 0;
  double median = 0.0, q1 = 0.0, q3 = 0.0;
  int outliers = 0;
  int nonconverged = 0;
};

// Boxplot statistics with outliers outside [q1 - 1.5 IQR, q3 + 1.5 IQR].
std::vector<MethodSummary> summarize(const std::vector<TrialResult>& results);

}  // namespace is2d
