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
#include "trifourier/report.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>

namespace trifourier {

Report& Report::add(std::string id, bool passed, std::string details) {
  checks_.push_back(Check{std::move(id), passed, std::move(details)});
  return *this;
}

Report& Report::merge(const Report& other) {
  for (const auto& c : other.checks_) {
    checks_.push_back(Check{other.suite_.empty() ? c.id : other.suite_ + "/" + c.id, c.passed,
                            c.details});
  }
  return *this;
}

bool Report::passed() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
}

const Check* Report::first_failure() const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; });
  return it == checks_.end() ? nullptr : &*it;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    checks.push_back({{"id", c.id}, {"passed", c.passed}, {"details", c.details}});
  }
  return {{"suite", suite_}, {"passed", passed()}, {"checks", std::move(checks)}};
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks_) {
    out += c.passed ? "PASS " : "FAIL ";
    out += c.id;
    if (!c.details.empty()) out += ": " + c.details;
    out += '\n';
  }
  out += "suite " + suite_ + (passed() ? " passed" : " FAILED") + " (" +
         std::to_string(checks_.size() - failures()) + "/" + std::to_string(checks_.size()) +
         ")\n";
  return out;
}

}  // namespace trifourier
