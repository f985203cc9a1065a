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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "is2d/grid.hpp"

namespace is2d::io {

// Text layout: one matrix row per line, comma separated, 17 significant
// digits. Complex entries are written as "re+imi" (e.g. "1.5-0.25i").
void write_text(std::ostream& os, const MatR& m);
void write_text(std::ostream& os, const MatC& m);
MatR read_real_text(std::istream& is);
MatC read_complex_text(std::istream& is);

std::string format_complex(cplx z);
cplx parse_complex(const std::string& token);

// Binary layout: magic "IS2D", u32 kind (0 real, 1 complex), u64 rows,
// u64 cols, then row-major little-endian doubles (re, im pairs if complex).
void write_binary(std::ostream& os, const MatR& m);
void write_binary(std::ostream& os, const MatC& m);
MatR read_real_binary(std::istream& is);
MatC read_complex_binary(std::istream& is);

void save_text(const std::filesystem::path& path, const MatR& m);
void save_text(const std::filesystem::path& path, const MatC& m);
MatR load_real_text(const std::filesystem::path& path);
MatC load_complex_text(const std::filesystem::path& path);

}  // namespace is2d::io
