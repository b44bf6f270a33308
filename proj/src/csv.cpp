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

#include "rcsaudit/csv.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace rcsaudit {

namespace {

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

CsvFile parse_csv(const std::string& text, const std::string& expected_header) {
  CsvFile out;
  std::istringstream in(text);
  std::string line;
  long lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string s = strip(line);
    if (s.empty()) continue;
    if (s[0] == '#') {
      if (!have_header) out.comments.push_back(strip(s.substr(1)));
      continue;
    }
    if (!have_header) {
      out.header = split_cells(s);
      if (!expected_header.empty() && s != expected_header)
        throw ParseError("unexpected header '" + s + "', want '" +
                             expected_header + "'",
                         lineno);
      have_header = true;
      continue;
    }
    CsvRow row;
    row.cells = split_cells(s);
    row.line = lineno;
    if (row.cells.size() != out.header.size())
      throw ParseError("expected " + std::to_string(out.header.size()) +
                           " cells, got " + std::to_string(row.cells.size()),
                       lineno);
    out.rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError("missing header row");
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << text;
  if (!out) throw Error("short write: " + path);
}

CsvFile parse_csv_file(const std::string& path, const std::string& expected_header) {
  try {
    return parse_csv(read_text_file(path), expected_header);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

double parse_number(const std::string& cell, long line) {
  const std::string s = cell;
  double value = 0.0;
  const char* begin = s.data();
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError("not a number: '" + cell + "'", line);
  return value;
}

long parse_integer(const std::string& cell, long line) {
  long value = 0;
  const char* begin = cell.data();
  const char* end = cell.data() + cell.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError("not an integer: '" + cell + "'", line);
  return value;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string to_hex64(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = digits[value & 0xF];
    value >>= 4;
  }
  return out;
}

}  // namespace rcsaudit
