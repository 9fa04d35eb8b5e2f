// Copyright 2026 The trifourier Authors
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
//
#ifndef TRIFOURIER_REPORT_HPP_
#define TRIFOURIER_REPORT_HPP_

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace trifourier {

struct Check {
  std::string id;
  bool passed = false;
  std::string details;
};

/// Outcome of a verification suite. passed() holds iff every check passed.
class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }

  Report& add(std::string id, bool passed, std::string details = {});
  /// Appends the checks of another report, prefixing their ids.
  Report& merge(const Report& other);

  bool passed() const;
  std::size_t failures() const;
  /// First failing check, or nullptr.
  const Check* first_failure() const;

  nlohmann::json to_json() const;
  /// One "PASS id" / "FAIL id: details" line per check.
  std::string to_text() const;

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

}  // namespace trifourier

#endif  // TRIFOURIER_REPORT_HPP_
