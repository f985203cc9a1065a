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

#include "is2d/grid_io.hpp"

#include <bit>
#include <charconv>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace is2d::io {
namespace {

constexpr char kMagic[4] = {'I', 'S', '2', 'D'};

std::string format_real(double x)
{
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

std::vector<std::string> split_row(const std::string& line)
{
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',' || ch == ' ' || ch == '\t') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else if (ch != '\r') {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

template <typename Scalar, typename Parse>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> read_rows(std::istream& is, Parse parse)
{
  std::vector<std::vector<Scalar>> rows;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto tokens = split_row(line);
    if (tokens.empty()) continue;
    std::vector<Scalar> row;
    row.reserve(tokens.size());
    for (const auto& t : tokens) {
      try {
        row.push_back(parse(t));
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
      }
    }
    if (!rows.empty() && row.size() != rows.front().size())
      throw std::invalid_argument("line " + std::to_string(lineno) + ": ragged row");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("grid text: no data");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  return m;
}

double parse_real(const std::string& t)
{
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) throw std::invalid_argument("bad number '" + t + "'");
  return v;
}

template <typename T>
void put(std::ostream& os, T v)
{
  static_assert(std::endian::native == std::endian::little, "binary format assumes little-endian host");
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is)
{
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("grid binary: truncated input");
  return v;
}

std::pair<std::uint64_t, std::uint64_t> read_header(std::istream& is, std::uint32_t expect_kind)
{
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0) throw std::runtime_error("grid binary: bad magic");
  if (get<std::uint32_t>(is) != expect_kind) throw std::runtime_error("grid binary: element kind mismatch");
  const auto rows = get<std::uint64_t>(is);
  const auto cols = get<std::uint64_t>(is);
  return {rows, cols};
}

}  // namespace

std::string format_complex(cplx z)
{
  std::string im = format_real(z.imag());
  if (im.front() != '-') im.insert(im.begin(), '+');
  return format_real(z.real()) + im + "i";
}

cplx parse_complex(const std::string& t)
{
  if (t.empty()) throw std::invalid_argument("empty complex token");
  if (t.back() != 'i') return {parse_real(t), 0.0};
  // The imaginary part starts at the last sign that is not an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size() - 1; k > 0; --k) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(t.substr(0, t.size() - 1))};
  std::string re = t.substr(0, split);
  std::string im = t.substr(split, t.size() - 1 - split);
  if (im.front() == '+') im.erase(im.begin());
  return {parse_real(re), parse_real(im)};
}

void write_text(std::ostream& os, const MatR& m)
{
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? "," : "") << format_real(m(r, c));
    os << '\n';
  }
}

void write_text(std::ostream& os, const MatC& m)
{
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) os << (c ? "," : "") << format_complex(m(r, c));
    os << '\n';
  }
}

MatR read_real_text(std::istream& is) { return read_rows<double>(is, parse_real); }
MatC read_complex_text(std::istream& is) { return read_rows<cplx>(is, parse_complex); }

void write_binary(std::ostream& os, const MatR& m)
{
  os.write(kMagic, 4);
  put<std::uint32_t>(os, 0);
  put<std::uint64_t>(os, static_cast<std::uint64_t>(m.rows()));
  put<std::uint64_t>(os, static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) put<double>(os, m(r, c));
}

void write_binary(std::ostream& os, const MatC& m)
{
  os.write(kMagic, 4);
  put<std::uint32_t>(os, 1);
  put<std::uint64_t>(os, static_cast<std::uint64_t>(m.rows()));
  put<std::uint64_t>(os, static_cast<std::uint64_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      put<double>(os, m(r, c).real());
      put<double>(os, m(r, c).imag());
    }
}

MatR read_real_binary(std::istream& is)
{
  const auto [rows, cols] = read_header(is, 0);
  MatR m(rows, cols);
  for (std::uint64_t r = 0; r < rows; ++r)
    for (std::uint64_t c = 0; c < cols; ++c) m(r, c) = get<double>(is);
  return m;
}

MatC read_complex_binary(std::istream& is)
{
  const auto [rows, cols] = read_header(is, 1);
  MatC m(rows, cols);
  for (std::uint64_t r = 0; r < rows; ++r)
    for (std::uint64_t c = 0; c < cols; ++c) {
      const double re = get<double>(is);
      m(r, c) = {re, get<double>(is)};
    }
  return m;
}

void save_text(const std::filesystem::path& path, const MatR& m)
{
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  write_text(os, m);
}

void save_text(const std::filesystem::path& path, const MatC& m)
{
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  write_text(os, m);
}

MatR load_real_text(const std::filesystem::path& path)
{
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  return read_real_text(is);
}

MatC load_complex_text(const std::filesystem::path& path)
{
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read " + path.string());
  return read_complex_text(is);
}

}  // namespace is2d::io
