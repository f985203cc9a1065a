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

#include "is2d/freq_est.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <numeric>

namespace is2d {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double quantile(std::vector<double> v, double p)
{
  std::sort(v.begin(), v.end());
  const double pos = p * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

bool adjacent(int a1, int a2, int b1, int b2, int M1, int M2)
{
  const int d1 = std::min((a1 - b1 + M1) % M1, (b1 - a1 + M1) % M1);
  const int d2 = std::min((a2 - b2 + M2) % M2, (b2 - a2 + M2) % M2);
  return d1 <= 1 && d2 <= 1;
}

}  // namespace

void SinusoidModel::validate() const
{
  if (nu < 0 || amps.size() != static_cast<std::size_t>(nu) || freqs.size() != static_cast<std::size_t>(nu))
    throw std::invalid_argument("SinusoidModel: nu must match amps and freqs");
  if (!(noise_var >= 0)) throw std::invalid_argument("SinusoidModel: noise variance must be nonnegative");
  if (T1 < 1 || T2 < 1) throw std::invalid_argument("SinusoidModel: record length must be positive");
}

FieldData generate_field(const SinusoidModel& m, std::mt19937_64& rng)
{
  m.validate();
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  std::normal_distribution<double> normal(0.0, std::sqrt(m.noise_var / 2.0));
  FieldData y = FieldData::Zero(m.T2, m.T1);
  for (int j = 0; j < m.nu; ++j) {
    const double phi = phase(rng);
    for (int t1 = 0; t1 < m.T1; ++t1)
      for (int t2 = 0; t2 < m.T2; ++t2)
        y(t2, t1) += m.amps[j] * std::polar(1.0, m.freqs[j][0] * t1 + m.freqs[j][1] * t2 + phi);
  }
  if (m.noise_var > 0) {
    for (int t1 = 0; t1 < m.T1; ++t1)
      for (int t2 = 0; t2 < m.T2; ++t2) {
        const double re = normal(rng);
        y(t2, t1) += cplx(re, normal(rng));
      }
  }
  return y;
}

FieldData generate_field(const SinusoidModel& m, std::uint64_t seed)
{
  std::mt19937_64 rng(seed);
  return generate_field(m, rng);
}

double WindowSpec::weight(int k1, int k2) const
{
  if (std::abs(k1) > n1 || std::abs(k2) > n2) return 0.0;
  if (kind == WindowKind::Rectangular) return 1.0;
  return (n1 + 1.0 - std::abs(k1)) / (n1 + 1.0) * (n2 + 1.0 - std::abs(k2)) / (n2 + 1.0);
}

MatR periodogram(const CoeffArray& sigma, const WindowSpec& w, int M1, int M2)
{
  if (w.n1 < 1 || w.n2 < 1) throw std::invalid_argument("periodogram: window widths must be positive");
  if (sigma.n1() < w.n1 || sigma.n2() < w.n2) throw std::invalid_argument("periodogram: not enough covariance lags for the window");
  MatC v(2 * w.n2 + 1, 2 * w.n1 + 1);
  for (int k1 = -w.n1; k1 <= w.n1; ++k1)
    for (int k2 = -w.n2; k2 <= w.n2; ++k2) v(k2 + w.n2, k1 + w.n1) = w.weight(k1, k2) * sigma(k1, k2);
  return evaluate_coeffs(CoeffArray(std::move(v)), M1, M2);
}

MatR periodogram(const CoeffArray& sigma, const WindowSpec& w, const GridSpec& g)
{
  return periodogram(sigma, w, g.N1(), g.N2());
}

MatR interpolate_periodogram(const CoeffArray& sigma, const WindowSpec& w, const GridSpec& g, int factor)
{
  if (factor < 1) throw std::invalid_argument("interpolate: factor must be positive");
  return periodogram(sigma, w, factor * g.N1(), factor * g.N2());
}

Prior Prior::constant(double c)
{
  if (!(c > 0)) throw std::invalid_argument("Prior: constant must be positive");
  Prior p;
  p.kind_ = Kind::Constant;
  p.c_ = c;
  return p;
}

Prior Prior::polynomial(CoeffArray coeffs)
{
  Prior p;
  p.kind_ = Kind::Polynomial;
  p.coeffs_ = std::move(coeffs);
  return p;
}

Prior Prior::samples(Spectrum values)
{
  require_positive(values, "Prior samples");
  Prior p;
  p.kind_ = Kind::Samples;
  p.samples_ = std::move(values);
  return p;
}

MatR Prior::evaluate(int M1, int M2) const
{
  switch (kind_) {
    case Kind::Constant: return MatR::Constant(M2, M1, c_);
    case Kind::Polynomial: {
      MatR v = evaluate_coeffs(coeffs_, M1, M2);
      require_positive(v, "Prior polynomial");
      return v;
    }
    case Kind::Samples:
      if (samples_.rows() != M2 || samples_.cols() != M1)
        throw std::invalid_argument("Prior: sampled prior cannot be evaluated off its grid");
      return samples_;
  }
  return {};
}

IsEstimate is_estimate_from_moments(const CoeffArray& sigma, const GridSpec& g, const Prior& prior, const IsOptions& opts)
{
  IsEstimate est{g, prior, {}, {}, false, 0, std::nullopt, std::nullopt};
  const Spectrum psi = prior.on_grid(g);
  if (opts.use_continuation) {
    HomotopyProblem hp{sigma, MatR::Constant(g.N2(), g.N1(), sigma(0, 0).real()), psi, g};
    ContinuationOptions co = opts.continuation;
    co.newton = opts.newton;
    ContinuationReport rep = continue_solve(hp, co);
    est.q = rep.q;
    est.converged = rep.converged;
    for (const auto& r : rep.inner_reports) est.iterations += r.iterations;
    est.continuation = std::move(rep);
  } else {
    const DualProblem p(sigma, psi, g);
    SolveReport rep = newton_solve(p, opts.newton);
    est.q = rep.q;
    est.converged = rep.converged;
    est.iterations = rep.iterations;
    est.newton = std::move(rep);
  }
  est.phi_hat = primal_spectrum(est.q, DualProblem(sigma, psi, g));
  return est;
}

IsEstimate is_estimate(const FieldData& y, const GridSpec& g, const Prior& prior, const IsOptions& opts)
{
  return is_estimate_from_moments(estimate_covariances(y, g), g, prior, opts);
}

IsEstimate is_estimate(const FieldData& y, const GridSpec& g, const IsOptions& opts)
{
  const CoeffArray sigma = estimate_covariances(y, g);
  return is_estimate_from_moments(sigma, g, Prior::constant(sigma(0, 0).real()), opts);
}

MatR interpolate(const IsEstimate& est, int factor, int* nonpositive)
{
  if (nonpositive) *nonpositive = 0;
  if (factor < 1) throw std::invalid_argument("interpolate: factor must be positive");
  if (factor == 1) return est.phi_hat;
  if (!est.prior.evaluable_anywhere()) throw std::invalid_argument("interpolate: prior is not evaluable off-grid");
  const int M1 = factor * est.grid.N1(), M2 = factor * est.grid.N2();
  const MatR s = est.prior.evaluate(M1, M2).cwiseInverse() +
                 evaluate_coeffs(CoeffArray::from_half(est.q, est.grid.n1(), est.grid.n2()), M1, M2);
  // Positivity is only guaranteed on the coarse grid; refined points where
  // the extension is not a density carry no power.
  int bad = 0;
  MatR out = s.unaryExpr([&](double v) {
    if (v > 0.0 && std::isfinite(1.0 / v)) return 1.0 / v;
    ++bad;
    return 0.0;
  });
  if (nonpositive) *nonpositive = bad;
  return out;
}

std::vector<Peak> local_maxima(const MatR& f)
{
  const auto M2 = static_cast<int>(f.rows());
  const auto M1 = static_cast<int>(f.cols());
  std::vector<Peak> out;
  for (int l1 = 0; l1 < M1; ++l1) {
    for (int l2 = 0; l2 < M2; ++l2) {
      const double v = f(l2, l1);
      bool is_max = true;
      for (int d1 = -1; d1 <= 1 && is_max; ++d1) {
        for (int d2 = -1; d2 <= 1; ++d2) {
          const int m1 = (l1 + d1 + M1) % M1, m2 = (l2 + d2 + M2) % M2;
          if (m1 == l1 && m2 == l2) continue;
          const double u = f(m2, m1);
          // Equal neighbours: the lexicographically smaller index dominates.
          if (u > v || (u == v && std::pair(m1, m2) < std::pair(l1, l2))) {
            is_max = false;
            break;
          }
        }
      }
      if (is_max) out.push_back({l1, l2, v});
    }
  }
  std::sort(out.begin(), out.end(), [](const Peak& a, const Peak& b) {
    if (a.value != b.value) return a.value > b.value;
    return std::pair(a.l1, a.l2) < std::pair(b.l1, b.l2);
  });
  return out;
}

std::vector<Freq> find_peaks(const MatR& f, int nu)
{
  const auto M2 = static_cast<int>(f.rows());
  const auto M1 = static_cast<int>(f.cols());
  if (nu < 1 || static_cast<Eigen::Index>(nu) > f.size()) throw std::invalid_argument("find_peaks: nu out of range");
  if (!f.allFinite()) throw std::invalid_argument("find_peaks: grid function is not finite");

  std::vector<Peak> picks = local_maxima(f);
  if (picks.size() > static_cast<std::size_t>(nu)) picks.resize(nu);
  if (picks.size() < static_cast<std::size_t>(nu)) {
    std::vector<Peak> all;
    all.reserve(f.size());
    for (int l1 = 0; l1 < M1; ++l1)
      for (int l2 = 0; l2 < M2; ++l2) all.push_back({l1, l2, f(l2, l1)});
    std::stable_sort(all.begin(), all.end(), [](const Peak& a, const Peak& b) { return a.value > b.value; });
    auto taken = [&](const Peak& c, bool allow_adjacent) {
      for (const auto& p : picks) {
        if (p.l1 == c.l1 && p.l2 == c.l2) return true;
        if (!allow_adjacent && adjacent(p.l1, p.l2, c.l1, c.l2, M1, M2)) return true;
      }
      return false;
    };
    for (bool allow_adjacent : {false, true})
      for (const auto& c : all) {
        if (picks.size() == static_cast<std::size_t>(nu)) break;
        if (!taken(c, allow_adjacent)) picks.push_back(c);
      }
  }

  std::vector<Freq> out;
  for (const auto& p : picks) out.push_back({kTwoPi * p.l1 / M1, kTwoPi * p.l2 / M2});
  return out;
}

double torus_distance(const Freq& a, const Freq& b)
{
  double s = 0.0;
  for (int c = 0; c < 2; ++c) {
    double d = std::fmod(std::abs(a[c] - b[c]), kTwoPi);
    d = std::min(d, kTwoPi - d);
    s += d * d;
  }
  return std::sqrt(s);
}

double frequency_error(const std::vector<Freq>& theta_hat, const std::vector<Freq>& theta)
{
  if (theta_hat.size() != theta.size()) throw std::invalid_argument("frequency_error: length mismatch");
  std::vector<std::size_t> perm(theta.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  do {
    double s = 0.0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      const double d = torus_distance(theta_hat[perm[i]], theta[i]);
      s += d * d;
    }
    best = std::min(best, std::sqrt(s));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

const char* to_string(Method m)
{
  switch (m) {
    case Method::Rect: return "RECT";
    case Method::Bart: return "BART";
    case Method::Is: return "IS";
  }
  return "?";
}

FreqEstConfig default_freq_config()
{
  FreqEstConfig cfg;
  cfg.model.nu = 2;
  cfg.model.amps = {1.0, 1.0};
  cfg.model.freqs = {Freq{0.0, 0.0}, Freq{0.0, 0.0}};
  cfg.model.noise_var = 1.0;
  cfg.model.T1 = cfg.model.T2 = 30;
  return cfg;
}

SinusoidModel resolution_case(char which)
{
  SinusoidModel m = default_freq_config().model;
  switch (which) {
    case 'A': m.freqs = {Freq{2.3, 2.3}, Freq{2.3, 4.4}}; break;
    case 'B': m.freqs = {Freq{2.3, 2.3}, Freq{2.3, 2.6}}; break;
    case 'C': m.freqs = {Freq{2.4, 2.4}, Freq{2.51, 2.51}}; break;
    default: throw std::invalid_argument(std::string("resolution_case: unknown case '") + which + "'");
  }
  return m;
}

std::vector<MethodOutput> run_single(const FreqEstConfig& cfg, std::uint64_t seed)
{
  const FieldData y = generate_field(cfg.model, seed);
  const int lag1 = std::max({cfg.rect.n1, cfg.bart.n1, cfg.is_n});
  const int lag2 = std::max({cfg.rect.n2, cfg.bart.n2, cfg.is_n});
  const CoeffArray sig = estimate_covariances(y, lag1, lag2);
  const GridSpec g(cfg.N1, cfg.N2, cfg.is_n, cfg.is_n);

  std::vector<MethodOutput> out;
  for (auto [method, w] : {std::pair{Method::Rect, cfg.rect}, std::pair{Method::Bart, cfg.bart}}) {
    MethodOutput o{method, interpolate_periodogram(sig, w, g, cfg.interp_factor), {}, 0.0, true};
    out.push_back(std::move(o));
  }
  const CoeffArray sig_is = truncate(sig, cfg.is_n, cfg.is_n);
  const IsEstimate est = is_estimate_from_moments(sig_is, g, Prior::constant(sig_is(0, 0).real()), cfg.is);
  out.push_back({Method::Is, interpolate(est, cfg.interp_factor), {}, 0.0, est.converged});

  for (auto& o : out) {
    o.theta_hat = find_peaks(o.spectrum, cfg.model.nu);
    o.error = frequency_error(o.theta_hat, cfg.model.freqs);
  }
  return out;
}

std::uint64_t trial_seed(std::uint64_t master, int trial)
{
  std::seed_seq seq{static_cast<std::uint32_t>(master), static_cast<std::uint32_t>(master >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::array<std::uint32_t, 2> w{};
  seq.generate(w.begin(), w.end());
  return (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
}

std::vector<TrialResult> run_monte_carlo(const FreqEstConfig& cfg, int trials, std::uint64_t seed, int threads)
{
  if (trials < 0) throw std::invalid_argument("run_monte_carlo: negative trial count");
  std::vector<TrialResult> out(static_cast<std::size_t>(trials) * 3);

  std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, threads))
  for (int tr = 0; tr < trials; ++tr) {
    try {
      const std::uint64_t s = trial_seed(seed, tr);
      std::mt19937_64 rng(s);
      std::uniform_real_distribution<double> unif(0.0, kTwoPi);
      FreqEstConfig c = cfg;
      for (auto& f : c.model.freqs) {
        const double a = unif(rng);
        f = {a, unif(rng)};
      }
      const auto outputs = run_single(c, rng());
      for (std::size_t m = 0; m < outputs.size(); ++m) {
        const auto& o = outputs[m];
        out[static_cast<std::size_t>(tr) * 3 + m] = {o.method, o.theta_hat, o.error, s, tr, o.converged};
      }
    } catch (...) {
#pragma omp critical(is2d_mc_error)
      if (!err) err = std::current_exception();
    }
  }
  if (err) std::rethrow_exception(err);
  return out;
}

std::vector<MethodSummary> summarize(const std::vector<TrialResult>& results)
{
  std::vector<MethodSummary> out;
  for (Method m : {Method::Rect, Method::Bart, Method::Is}) {
    std::vector<double> e;
    MethodSummary s{m};
    for (const auto& r : results)
      if (r.method == m) {
        e.push_back(r.error);
        s.nonconverged += r.converged ? 0 : 1;
      }
    s.count = static_cast<int>(e.size());
    if (!e.empty()) {
      s.median = quantile(e, 0.5);
      s.q1 = quantile(e, 0.25);
      s.q3 = quantile(e, 0.75);
      const double iqr = s.q3 - s.q1;
      for (double v : e)
        if (v < s.q1 - 1.5 * iqr || v > s.q3 + 1.5 * iqr) ++s.outliers;
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace is2d
