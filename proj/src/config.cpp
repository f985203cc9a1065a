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

#include "is2d/config.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <istream>
#include <set>

namespace is2d {
namespace {

const std::set<std::string>& known_keys()
{
  static const std::set<std::string> keys{
      "grid.N1",        "grid.N2",        "lags.n1",          "lags.n2",         "prior.kind",
      "prior.file",     "prior.value",    "solver.kind",      "solver.grad_tol", "solver.max_iters",
      "solver.damped",  "continuation.dt", "continuation.min_dt", "seed",         "input.file",
      "input.kind",     "model",          "model.a4_reading", "trials",          "interp.factor",
      "input.T1",       "input.T2",       "input.noise_var",  "bench.n",         "bench.trials"};
  return keys;
}

std::string trim(const std::string& s)
{
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Config Config::parse(std::istream& is, const std::string& source)
{
  Config c;
  c.source_ = source;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(source, lineno, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError(source, lineno, "empty key");
    if (value.empty()) throw ConfigError(source, lineno, "empty value for '" + key + "'");
    if (!known_keys().count(key)) throw ConfigError(source, lineno, "unknown key '" + key + "'");
    if (c.entries_.count(key)) throw ConfigError(source, lineno, "duplicate key '" + key + "'");
    c.entries_[key] = {value, lineno};
  }
  return c;
}

Config Config::load(const std::filesystem::path& path)
{
  std::ifstream is(path);
  if (!is) throw ConfigError(path.string(), 0, "cannot open file");
  return parse(is, path.string());
}

void Config::fail(const std::string& key, const std::string& msg) const
{
  throw ConfigError(source_, entries_.at(key).line, "'" + key + "': " + msg);
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const
{
  auto it = entries_.find(key);
  return it == entries_.end() ? fallback : it->second.value;
}

long long Config::get_int64(const std::string& key, long long fallback) const
{
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const auto& v = it->second.value;
  long long out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) fail(key, "expected an integer, got '" + v + "'");
  return out;
}

int Config::get_int(const std::string& key, int fallback) const
{
  const long long v = get_int64(key, fallback);
  if (v < INT32_MIN || v > INT32_MAX) fail(key, "integer out of range");
  return static_cast<int>(v);
}

double Config::get_double(const std::string& key, double fallback) const
{
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const auto& v = it->second.value;
  double out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size()) fail(key, "expected a number, got '" + v + "'");
  return out;
}

bool Config::get_bool(const std::string& key, bool fallback) const
{
  auto it = entries_.find(key);
  if (it == entries_.end()) return fallback;
  const auto& v = it->second.value;
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  fail(key, "expected a boolean, got '" + v + "'");
}

std::string Config::get_choice(const std::string& key, const std::string& fallback,
                               std::initializer_list<const char*> allowed) const
{
  const std::string v = get_string(key, fallback);
  for (const char* a : allowed)
    if (v == a) return v;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  if (!has(key)) throw std::invalid_argument("'" + key + "': default '" + v + "' not in {" + list + "}");
  fail(key, "expected one of {" + list + "}, got '" + v + "'");
}

}  // namespace is2d
