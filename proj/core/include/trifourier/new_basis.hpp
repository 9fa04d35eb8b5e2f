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
#ifndef TRIFOURIER_NEW_BASIS_HPP_
#define TRIFOURIER_NEW_BASIS_HPP_

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

#include "trifourier/nonabelian.hpp"
#include "trifourier/report.hpp"

namespace trifourier {

/// The two S3 bases: hat(g3, theta^k) contains (g2,1) for G2 and (g2,eps)
/// for the E types.
enum class Variant { kG2, kE };

Variant parse_variant(const std::string& name);
std::string variant_string(Variant variant);

struct BasisTerm {
  MPair pair;
  mpq_class coefficient;
};

/// hat(label) = sum of terms.
struct Expansion {
  MPair label;
  std::vector<BasisTerm> terms;
};

struct NewBasis {
  GroupName group = GroupName::kS3;
  std::string variant;
  std::vector<Expansion> expansions;

  nlohmann::json to_json() const;
  /// Throws std::invalid_argument on a malformed document.
  static NewBasis from_json(const nlohmann::json& document);
};

NewBasis s3_new_basis(Variant variant);

/// Ordered pieces of the new basis with the sign expected on each piece.
struct PiecePartition {
  GroupName group = GroupName::kS3;
  int version = 0;
  std::vector<std::vector<MPair>> pieces;
  std::vector<int> signs;
};

/// The listings for S3, S4 and S5. Throws std::invalid_argument for S2.
PiecePartition piece_partition(GroupName group);

struct TriangularResult {
  Report report;
  /// Column k is F(hat p_k) in the new basis, indexed like group.pairs().
  CycMatrix matrix;
  /// Diagonal entry of each basis element when it is +-1.
  std::vector<std::optional<int>> signs;
  /// Smallest of Q, Q(sqrt5), R, C containing all coefficients, overall and
  /// per piece.
  std::string field;
  std::vector<std::string> piece_fields;
  /// Description of the first failing entry, if any.
  std::optional<std::string> first_violation;
};

/// F applied to each element of a piece is +-itself plus elements of later
/// pieces, with the listed sign on each piece.
TriangularResult verify_triangular(const NonabelianGroup& group, const CycMatrix& ft, const NewBasis& basis,
                                   const PiecePartition& partition);

/// Sum over pieces of sign times size equals trace(F).
Report verify_sign_trace(const NonabelianGroup& group, const CycMatrix& ft, const PiecePartition& partition);

}  // namespace trifourier

#endif  // TRIFOURIER_NEW_BASIS_HPP_
