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

#ifndef LOSSYCV_CSV_HPP
#define LOSSYCV_CSV_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lossycv/sweep.hpp"

namespace lossycv {

/// 12 significant digits; non-finite values print as nan, inf, -inf.
std::string format_number(double value);

/// Comma-joined fields terminated by '\n'.
std::string csv_line(const std::vector<std::string>& fields);

/// Comma-separated table with a header row.
class CsvTable {
 public:
  explicit CsvTable(std::vector<std::string> header);

  void add_row(const std::vector<double>& values);
  void add_row(std::vector<std::string> fields);

  std::string str() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

inline constexpr std::string_view kSweepHeader =
    "scheme,epsilon,r,t,N,log_negativity,delta,F_symmetric,F_bk_opt";

std::string emit_records(const std::vector<SweepRecord>& records);

/// Inverse of emit_records. Throws std::invalid_argument on a bad header,
/// a wrong field count, or an unparsable field.
std::vector<SweepRecord> parse_records(std::string_view text);

}  // namespace lossycv

#endif  // LOSSYCV_CSV_HPP
