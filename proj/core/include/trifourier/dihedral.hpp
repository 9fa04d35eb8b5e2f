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
#ifndef TRIFOURIER_DIHEDRAL_HPP_
#define TRIFOURIER_DIHEDRAL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "trifourier/family.hpp"
#include "trifourier/gf2.hpp"
#include "trifourier/report.hpp"
#include "trifourier/tau.hpp"

namespace trifourier {

/// A linear automorphism of V, stored as the images of e_1..e_D.
class SympAuto {
 public:
  SympAuto(int dimension, std::vector<Word> columns);
  static SympAuto identity(int dimension);

  int dimension() const { return dimension_; }
  const std::vector<Word>& columns() const { return columns_; }

  Word apply(Word x) const;
  Subspace apply(const Subspace& subspace) const;
  /// this o other.
  SympAuto compose(const SympAuto& other) const;
  SympAuto power(int exponent) const;

  bool preserves_form(const SymplecticSpace& space) const;
  /// The same map viewed as an embedding V -> V.
  LinearEmbedding as_embedding(const SymplecticSpace& space) const;

  friend bool operator==(const SympAuto&, const SympAuto&) = default;

 private:
  int dimension_;
  std::vector<Word> columns_;
};

/// R: e_1, ..., e_{D+1} -> e_2, ..., e_{D+1}, e_1.
SympAuto rotation(const SymplecticSpace& space);
/// S: e_i -> e_{D+1-i}, fixing e_{D+1}.
SympAuto reflection(const SymplecticSpace& space);

/// R tau_i = tau_{i+1} R' for i < D, R tau_D = tau_{D+1}, R tau_{D+1} = tau_1,
/// S tau_i = tau_{D+1-i} S' for i <= D and S tau_{D+1} = tau_{D+1} S'.
/// Requires D >= 2.
Report verify_tau_intertwining(int dimension);

/// R^{D+1} = 1, S^2 = 1, S R S = R^{-1}, and both maps are symplectic.
Report verify_dihedral_relations(int dimension);

struct Orbit {
  std::vector<std::size_t> members;
  std::size_t representative() const { return members.front(); }
};

struct StabilityResult {
  Report report;
  /// Images of each family index under R and S; entries are family.size()
  /// where a member escapes.
  std::vector<std::size_t> rotation_permutation;
  std::vector<std::size_t> reflection_permutation;
  std::vector<Orbit> orbits;
  /// Order of the permutation group generated on the family.
  std::size_t group_order = 0;
};

/// R(E) and S(E) are members for every E, with the induced action.
StabilityResult verify_family_stability(const Family& family);

}  // namespace trifourier

#endif  // TRIFOURIER_DIHEDRAL_HPP_
