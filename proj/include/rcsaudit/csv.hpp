// Copyright 2026 The rcsaudit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "rcsaudit/errors.hpp"

namespace rcsaudit {

// One parsed CSV cell row plus its 1-based source line (for error messages).
struct CsvRow {
  std::vector<std::string> cells;
  long line = 0;
};

struct CsvFile {
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
  std::vector<std::string> comments;  // leading '#' lines, markers stripped
};

// Comma-separated values, UTF-8, LF line endings, '#' comment lines permitted.
// The header row is required; `expected_header` (when nonempty) must match it
// exactly.
CsvFile parse_csv(const std::string& text, const std::string& expected_header = "");

CsvFile parse_csv_file(const std::string& path, const std::string& expected_header = "");

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// strict double/int parsing with line context
double parse_number(const std::string& cell, long line);
long parse_integer(const std::string& cell, long line);

// FNV-1a 64-bit digest of a byte string; used for fixture checksums and
// output provenance headers.
std::uint64_t fnv1a64(const std::string& bytes);
std::string to_hex64(std::uint64_t value);

}  // namespace rcsaudit
