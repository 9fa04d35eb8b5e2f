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
#include "trifourier/serialize.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace trifourier {
namespace {

nlohmann::json member_json(const Family& family, std::size_t k) {
  const FamilyEntry& e = family[k];
  nlohmann::json normalized = nlohmann::json::array();
  nlohmann::json intervals = nlohmann::json::array();
  for (const IntervalLabel& label : e.intervals) {
    normalized.push_back(label.normalized());
    intervals.push_back({label.first, label.last});
  }
  return {{"index", k},
          {"dimension", e.dimension()},
          {"n", e.even_count},
          {"label", e.label()},
          {"normalized", std::move(normalized)},
          {"intervals", std::move(intervals)},
          {"basis", e.space.to_string()},
          {"kappa", e.kappa}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string family_text(const Family& family) {
  std::ostringstream out;
  for (const Fiber& fiber : family.fibers()) {
    for (std::size_t j = 0; j < fiber.members.size(); ++j) {
      if (j) out << ',';
      out << family[fiber.members[j]].label();
    }
    out << '\n';
  }
  return out.str();
}

nlohmann::json family_json(const Family& family) {
  nlohmann::json fibers = nlohmann::json::array();
  for (const Fiber& fiber : family.fibers()) {
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t k : fiber.members) members.push_back(member_json(family, k));
    fibers.push_back({{"root", fiber.root}, {"parameter", fiber.parameter()}, {"members", std::move(members)}});
  }
  return {{"dimension", family.dimension()}, {"size", family.size()}, {"fibers", std::move(fibers)}};
}

nlohmann::json cob_json(const Family& family, const CobMatrix& matrix) {
  nlohmann::json order = nlohmann::json::array();
  for (std::size_t k = 0; k < family.size(); ++k) order.push_back(member_json(family, k));
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < matrix.size(); ++c) row.push_back(matrix.at(r, c).get_str());
    entries.push_back(std::move(row));
  }
  return {{"dimension", family.dimension()},
          {"denominator", matrix.denominator()},
          {"order", std::move(order)},
          {"entries", std::move(entries)}};
}

std::string cob_csv(const Family& family, const CobMatrix& matrix) {
  std::ostringstream out;
  out << "E";
  for (std::size_t k = 0; k < family.size(); ++k) out << ',' << csv_field(family[k].label());
  out << '\n';
  for (std::size_t r = 0; r < matrix.size(); ++r) {
    out << csv_field(family[r].label());
    for (std::size_t c = 0; c < matrix.size(); ++c) out << ',' << matrix.at(r, c).get_str();
    out << '\n';
  }
  return out.str();
}

nlohmann::json orbit_json(const Family& family, const StabilityResult& stability) {
  nlohmann::json orbits = nlohmann::json::array();
  for (const Orbit& orbit : stability.orbits) {
    nlohmann::json members = nlohmann::json::array();
    for (std::size_t k : orbit.members) members.push_back(family[k].label());
    orbits.push_back({{"representative", family[orbit.representative()].label()},
                      {"size", orbit.members.size()},
                      {"members", std::move(members)}});
  }
  return {{"dimension", family.dimension()},
          {"group_order", stability.group_order},
          {"rotation", stability.rotation_permutation},
          {"reflection", stability.reflection_permutation},
          {"orbits", std::move(orbits)}};
}

nlohmann::json ft_json(const NonabelianGroup& group, const CycMatrix& ft) {
  nlohmann::json pairs = nlohmann::json::array();
  for (const MPair& p : group.pairs()) pairs.push_back({{"x", p.x}, {"rho", p.rho}});
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& row : ft) {
    nlohmann::json out = nlohmann::json::array();
    for (const CycNum& v : row) out.push_back(v.to_json());
    entries.push_back(std::move(out));
  }
  return {{"group", group_string(group.name())},
          {"pairs", std::move(pairs)},
          {"trace", trace(ft).to_json()},
          {"entries", std::move(entries)}};
}

}  // namespace trifourier
