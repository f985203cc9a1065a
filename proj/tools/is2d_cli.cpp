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

// Command-line driver: estimate, freqest, sysid, bench.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "is2d/config.hpp"
#include "is2d/freq_est.hpp"
#include "is2d/grid_io.hpp"
#include "is2d/report_json.hpp"
#include "is2d/structured.hpp"
#include "is2d/sys_id.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace is2d;

namespace {

constexpr int kExitNotConverged = 1;
constexpr int kExitUsage = 2;

struct Common {
  std::string config;
  std::optional<long long> seed;
  int threads = 1;
  std::string out = ".";
  std::string preset;
};

Config load_config(const Common& c)
{
  Config cfg = c.config.empty() ? Config{} : Config::load(c.config);
  if (c.seed) cfg.set("seed", std::to_string(*c.seed));
  return cfg;
}

std::uint64_t require_seed(const Config& cfg)
{
  if (!cfg.has("seed")) throw std::invalid_argument("this command is randomized; pass --seed or set 'seed' in the config");
  return static_cast<std::uint64_t>(cfg.get_int64("seed", 0));
}

void write_json(const fs::path& path, const json& j)
{
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  os << std::setprecision(17) << j.dump(2) << '\n';
}

NewtonOptions newton_options(const Config& cfg)
{
  NewtonOptions o;
  o.grad_tol = cfg.get_double("solver.grad_tol", o.grad_tol);
  o.max_iters = cfg.get_int("solver.max_iters", o.max_iters);
  o.damped = cfg.get_bool("solver.damped", o.damped);
  return o;
}

ContinuationOptions continuation_options(const Config& cfg)
{
  ContinuationOptions o;
  o.dt = cfg.get_double("continuation.dt", o.dt);
  o.min_dt = cfg.get_double("continuation.min_dt", o.min_dt);
  o.newton = newton_options(cfg);
  return o;
}

A4Reading a4_reading(const Config& cfg)
{
  return cfg.get_choice("model.a4_reading", "separable", {"separable", "literal"}) == "literal" ? A4Reading::Literal
                                                                                               : A4Reading::Separable;
}

// estimate: moments from a data file, synthetic data, or an ARMA truth;
// prior constant / file / arma_P; Newton or continuation.
int cmd_estimate(const Common& c)
{
  const Config cfg = load_config(c);
  const int n1 = cfg.get_int("lags.n1", 3), n2 = cfg.get_int("lags.n2", 3);
  const GridSpec g(cfg.get_int("grid.N1", 30), cfg.get_int("grid.N2", 30), n1, n2);
  const std::string input = cfg.get_choice("input.kind", cfg.has("input.file") ? "file" : "white_noise",
                                           {"file", "white_noise", "arma"});
  const std::string prior_kind = cfg.get_choice("prior.kind", "constant", {"constant", "file", "arma_P"});
  const std::string solver = cfg.get_choice("solver.kind", "newton", {"newton", "continuation"});

  CoeffArray sigma;
  std::optional<ArmaSpectrum> truth;
  if (input == "file") {
    sigma = estimate_covariances(io::load_complex_text(cfg.get_string("input.file", "")), g);
  } else if (input == "white_noise") {
    SinusoidModel m;
    m.noise_var = cfg.get_double("input.noise_var", 1.0);
    m.T1 = cfg.get_int("input.T1", 64);
    m.T2 = cfg.get_int("input.T2", 64);
    sigma = estimate_covariances(generate_field(m, require_seed(cfg)), g);
  } else {
    truth = arma_spectrum(sysid_preset(cfg.get_string("model", "A1"), a4_reading(cfg)), g);
    sigma = covariances_from_spectrum(truth->phi, g);
  }

  Spectrum psi;
  if (prior_kind == "constant") {
    psi = MatR::Constant(g.N2(), g.N1(), cfg.get_double("prior.value", sigma(0, 0).real()));
  } else if (prior_kind == "file") {
    psi = io::load_real_text(cfg.get_string("prior.file", ""));
  } else {
    if (!truth) truth = arma_spectrum(sysid_preset(cfg.get_string("model", "A1"), a4_reading(cfg)), g);
    psi = truth->P;
  }

  fs::create_directories(c.out);
  const fs::path out(c.out);
  bool converged = false;
  HalfVector q;
  json report;
  if (solver == "newton") {
    const SolveReport rep = newton_solve(DualProblem(sigma, psi, g), newton_options(cfg));
    converged = rep.converged;
    q = rep.q;
    report = to_json(rep);
  } else {
    const HomotopyProblem hp{sigma, MatR::Constant(g.N2(), g.N1(), sigma(0, 0).real()), psi, g};
    const ContinuationReport rep = continue_solve(hp, continuation_options(cfg));
    converged = rep.converged;
    q = rep.q;
    report = to_json(rep);
    std::ofstream trace(out / "trace.csv");
    write_trace(trace, rep);
  }
  report["solver"] = solver;
  const DualProblem p(sigma, psi, g);
  if (feasible(q, p).ok) {
    const Spectrum phi_hat = primal_spectrum(q, p);
    io::save_text(out / "phi_hat.txt", phi_hat);
    if (truth) report["relative_error"] = relative_error(phi_hat, truth->phi);
  }
  write_json(out / "report.json", report);
  std::cout << "estimate: solver=" << solver << " converged=" << std::boolalpha << converged << "\n";
  return converged ? 0 : kExitNotConverged;
}

FreqEstConfig freq_config(const Config& cfg)
{
  FreqEstConfig fc = default_freq_config();
  fc.N1 = cfg.get_int("grid.N1", fc.N1);
  fc.N2 = cfg.get_int("grid.N2", fc.N2);
  fc.is_n = cfg.get_int("lags.n1", fc.is_n);
  if (cfg.get_int("lags.n2", fc.is_n) != fc.is_n) throw std::invalid_argument("freqest: lags.n1 and lags.n2 must match");
  fc.interp_factor = cfg.get_int("interp.factor", fc.interp_factor);
  fc.is.newton = newton_options(cfg);
  fc.is.use_continuation = cfg.get_choice("solver.kind", "newton", {"newton", "continuation"}) == "continuation";
  fc.is.continuation = continuation_options(cfg);
  return fc;
}

int cmd_freqest(const Common& c)
{
  const Config cfg = load_config(c);
  FreqEstConfig fc = freq_config(cfg);
  const std::uint64_t seed = require_seed(cfg);
  fs::create_directories(c.out);
  const fs::path out(c.out);
  const std::string preset = c.preset.empty() ? "montecarlo" : c.preset;

  if (preset == "caseA" || preset == "caseB" || preset == "caseC") {
    fc.model = resolution_case(preset.back());
    const auto outputs = run_single(fc, seed);
    json j = json::array();
    bool ok = true;
    for (const auto& o : outputs) {
      auto th = json::array();
      for (const auto& f : o.theta_hat) th.push_back({f[0], f[1]});
      j.push_back({{"method", to_string(o.method)}, {"theta_hat", th}, {"error", o.error}, {"converged", o.converged}});
      io::save_text(out / (std::string("spectrum_") + to_string(o.method) + ".txt"), o.spectrum);
      ok = ok && o.converged;
      std::cout << preset << " " << to_string(o.method) << " error=" << std::setprecision(4) << o.error << "\n";
    }
    write_json(out / "case.json", {{"preset", preset}, {"seed", seed}, {"results", j}});
    return ok ? 0 : kExitNotConverged;
  }
  if (preset != "montecarlo") throw std::invalid_argument("freqest: unknown preset '" + preset + "'");

  const int trials = cfg.get_int("trials", 500);
  const auto results = run_monte_carlo(fc, trials, seed, c.threads);
  {
    std::ofstream os(out / "trials.jsonl");
    for (const auto& r : results) os << std::setprecision(17) << to_json(r).dump() << '\n';
  }
  std::ofstream os(out / "summary.csv");
  os << "method,count,median,q1,q3,outliers,nonconverged\n" << std::setprecision(17);
  bool ok = true;
  for (const auto& s : summarize(results)) {
    os << to_string(s.method) << ',' << s.count << ',' << s.median << ',' << s.q1 << ',' << s.q3 << ',' << s.outliers
       << ',' << s.nonconverged << '\n';
    std::cout << to_string(s.method) << " median=" << s.median << " outliers=" << s.outliers << "\n";
    ok = ok && s.nonconverged == 0;
  }
  return ok ? 0 : kExitNotConverged;
}

int cmd_sysid(const Common& c)
{
  const Config cfg = load_config(c);
  const std::string preset = c.preset.empty() ? cfg.get_string("model", "A1") : c.preset;
  const std::string solver = cfg.get_choice("solver.kind", "newton", {"newton", "continuation"});
  const int n = cfg.get_int("lags.n1", 1);
  if (cfg.get_int("lags.n2", n) != n) throw std::invalid_argument("sysid: lags.n1 and lags.n2 must match");
  const ApproxResult r = approx_experiment(sysid_preset(preset, a4_reading(cfg)), n, cfg.get_int("grid.N1", 30),
                                           cfg.get_int("grid.N2", 30),
                                           solver == "newton" ? SysIdSolver::Newton : SysIdSolver::Continuation,
                                           continuation_options(cfg));
  fs::create_directories(c.out);
  const fs::path out(c.out);
  json j{{"model", preset}, {"solver", solver}, {"relative_error", r.relative_error}, {"converged", r.converged}};
  if (r.newton) j["report"] = to_json(*r.newton);
  if (r.continuation) {
    j["report"] = to_json(*r.continuation);
    std::ofstream trace(out / "trace.csv");
    write_trace(trace, *r.continuation);
  }
  write_json(out / "sysid.json", j);
  io::save_text(out / "phi.txt", r.phi);
  io::save_text(out / "phi_hat.txt", r.phi_hat);
  std::cout << preset << " solver=" << solver << " converged=" << std::boolalpha << r.converged
            << " relative_error=" << r.relative_error << "\n";
  return r.converged ? 0 : kExitNotConverged;
}

int cmd_bench(const Common& c)
{
  const Config cfg = load_config(c);
  std::vector<int> ns;
  std::stringstream ss(cfg.get_string("bench.n", "5,10,20,30"));
  for (std::string tok; std::getline(ss, tok, ',');) ns.push_back(std::stoi(tok));
  const int trials = cfg.get_int("bench.trials", 5);
  const auto recs = bench_tbt(ns, trials, static_cast<std::uint64_t>(cfg.get_int64("seed", 1)));
  fs::create_directories(c.out);
  std::ofstream os(fs::path(c.out) / "bench.csv");
  os << "n,method,mean_seconds\n" << std::setprecision(17);
  for (const auto& r : recs) {
    os << r.n << ',' << r.method << ',' << r.mean_seconds << '\n';
    std::cout << r.n << ',' << r.method << ',' << r.mean_seconds << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"is2d: 2-D Itakura-Saito spectral estimation"};
  app.require_subcommand(1);
  Common common;
  long long seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config, "flat key=value config file");
    sub->add_option("--seed", seed, "master random seed");
    sub->add_option("--threads", common.threads, "worker threads for Monte-Carlo trials")->check(CLI::PositiveNumber);
    sub->add_option("--out", common.out, "output directory");
    sub->add_option("--preset", common.preset, "built-in experiment");
  };
  auto* est = app.add_subcommand("estimate", "solve one IS estimation problem");
  auto* fq = app.add_subcommand("freqest", "frequency estimation: caseA/caseB/caseC or montecarlo");
  auto* si = app.add_subcommand("sysid", "ARMA model approximation: A1..A4");
  auto* bn = app.add_subcommand("bench", "structured vs dense Newton solve timing");
  for (auto* s : {est, fq, si, bn}) add_common(s);

  CLI11_PARSE(app, argc, argv);
  for (auto* s : {est, fq, si, bn})
    if (s->parsed() && s->count("--seed")) common.seed = seed;

  try {
    if (est->parsed()) return cmd_estimate(common);
    if (fq->parsed()) return cmd_freqest(common);
    if (si->parsed()) return cmd_sysid(common);
    return cmd_bench(common);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotConverged;
  }
}
