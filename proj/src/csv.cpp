// Copyright 2026 The lossycv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lossycv/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>

namespace lossycv {
namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_field(std::string_view field) {
  if (field == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (field == "inf") return std::numeric_limits<double>::infinity();
  if (field == "-inf") return -std::numeric_limits<double>::infinity();
  const std::string s(field);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw std::invalid_argument("unparsable CSV field '" + s + "'");
  }
  return v;
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += fields[i];
  }
  out += '\n';
  return out;
}

CsvTable::CsvTable(std::vector<std::string> header)
    : header_(std::move(header)) {}

void CsvTable::add_row(const std::vector<double>& values) {
  std::vector<std::string> fields;
  fields.reserve(values.size());
  for (double v : values) fields.push_back(format_number(v));
  add_row(std::move(fields));
}

void CsvTable::add_row(std::vector<std::string> fields) {
  if (fields.size() != header_.size()) {
    throw std::invalid_argument("CSV row has the wrong number of fields");
  }
  rows_.push_back(std::move(fields));
}

std::string CsvTable::str() const {
  std::string out = csv_line(header_);
  for (const auto& row : rows_) out += csv_line(row);
  return out;
}

std::string emit_records(const std::vector<SweepRecord>& records) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const auto& rec : records) {
    out += csv_line({to_string(rec.scheme), format_number(rec.epsilon),
                     format_number(rec.r),
                     rec.t ? format_number(*rec.t) : "asymptotic",
                     format_number(rec.n), format_number(rec.log_negativity),
                     format_number(rec.delta), format_number(rec.f_symmetric),
                     format_number(rec.f_bk_opt)});
  }
  return out;
}

std::vector<SweepRecord> parse_records(std::string_view text) {
  std::vector<std::string_view> lines = split(text, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kSweepHeader) {
    throw std::invalid_argument("CSV does not start with the sweep header");
  }
  std::vector<SweepRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto f = split(lines[i], ',');
    if (f.size() != 9) {
      throw std::invalid_argument("CSV line " + std::to_string(i + 1) +
                                  " has " + std::to_string(f.size()) +
                                  " fields");
    }
    const auto scheme = parse_scheme(f[0]);
    if (!scheme) {
      throw std::invalid_argument("unknown scheme '" + std::string(f[0]) + "'");
    }
    SweepRecord rec;
    rec.scheme = *scheme;
    rec.epsilon = parse_field(f[1]);
    rec.r = parse_field(f[2]);
    if (f[3] != "asymptotic") rec.t = parse_field(f[3]);
    rec.n = parse_field(f[4]);
    rec.log_negativity = parse_field(f[5]);
    rec.delta = parse_field(f[6]);
    rec.f_symmetric = parse_field(f[7]);
    rec.f_bk_opt = parse_field(f[8]);
    out.push_back(rec);
  }
  return out;
}

}  // namespace lossycv
