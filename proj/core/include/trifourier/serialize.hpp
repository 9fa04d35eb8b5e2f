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
#ifndef TRIFOURIER_SERIALIZE_HPP_
#define TRIFOURIER_SERIALIZE_HPP_

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "trifourier/dihedral.hpp"
#include "trifourier/family.hpp"
#include "trifourier/fourier.hpp"
#include "trifourier/nonabelian.hpp"

namespace trifourier {

/// One line per fiber, members by n-value, joined by ",": "∅,<3>".
std::string family_text(const Family& family);

/// Fibers with explicit integer arrays for each I' and each interval [a, b].
nlohmann::json family_json(const Family& family);

/// Ordered basis and the entries c_{E,E1} as "p/q" strings (row E).
nlohmann::json cob_json(const Family& family, const CobMatrix& matrix);
/// Header of member labels, then one row per E.
std::string cob_csv(const Family& family, const CobMatrix& matrix);

/// Orbits of the dihedral group, each with its representative in I' form.
nlohmann::json orbit_json(const Family& family, const StabilityResult& stability);

/// Pairs and entries of a non-abelian transform.
nlohmann::json ft_json(const NonabelianGroup& group, const CycMatrix& ft);

}  // namespace trifourier

#endif  // TRIFOURIER_SERIALIZE_HPP_
