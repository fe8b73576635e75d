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

#ifndef LOSSYCV_ACCEPTANCE_HPP
#define LOSSYCV_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lossycv {

struct CheckRow {
  std::string check;
  std::string expected;
  std::string got;
  std::string tolerance;
  bool passed = false;
};

struct CriterionResult {
  int number = 0;
  std::string id;
  std::string title;
  std::vector<CheckRow> rows;
  double seconds = 0.0;
  /// Set when the criterion threw instead of producing rows.
  std::string error;

  bool passed() const;
};

struct Criterion {
  int number = 0;
  std::string id;
  std::vector<std::string> tags;
  std::string title;
  std::function<std::vector<CheckRow>()> run;
};

const std::vector<Criterion>& acceptance_criteria();

/// `only` is a comma-separated list of numbers, ids or tags; empty selects
/// everything.
bool criterion_selected(const Criterion& criterion, std::string_view only);

CriterionResult run_criterion(const Criterion& criterion);

/// "PASS  3 optimal-squeezing  <title>  (0.01 s)"
std::string summary_line(const CriterionResult& result);

/// Fixed-width table of the rows of `result`.
std::string format_rows(const CriterionResult& result);

}  // namespace lossycv

#endif  // LOSSYCV_ACCEPTANCE_HPP
