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
#ifndef TRIFOURIER_NONABELIAN_HPP_
#define TRIFOURIER_NONABELIAN_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "trifourier/cyclotomic.hpp"
#include "trifourier/permutation_group.hpp"
#include "trifourier/report.hpp"

namespace trifourier {

enum class GroupName { kS2, kS3, kS4, kS5 };

/// "s2".."s5" (case-insensitive). Throws std::invalid_argument otherwise.
GroupName parse_group(const std::string& name);
std::string group_string(GroupName group);

/// Labels are stored in ASCII: "g2'", "eps''", "theta^2", "eps*theta",
/// "lambda^1", "zeta^3", "nu'", "-r". Greek letters, primes and
/// superscript digits are accepted on input.
std::string normalize_label(const std::string& label);
/// The same label with Greek letters, primes and superscripts.
std::string display_label(const std::string& label);

/// Irreducible characters of the centralizer of a class representative.
struct CharacterTable {
  std::string element;
  Permutation x;
  PermutationGroup centralizer;
  std::vector<std::string> labels;
  /// values[k][c]: character k on class c of the centralizer.
  std::vector<std::vector<CycNum>> values;

  std::optional<std::size_t> find(const std::string& label) const;
  CycNum value(std::size_t character, const Permutation& g) const {
    return values[character][centralizer.class_index(g)];
  }
  /// Row and column orthogonality, and sum chi(1)^2 = |Z|.
  Report verify_orthogonality() const;
};

/// (x, rho) with x a class label and rho a character label of Z(x).
struct MPair {
  std::string x;
  std::string rho;

  std::string to_string() const { return "(" + x + "," + rho + ")"; }
  std::string display() const { return "(" + display_label(x) + "," + display_label(rho) + ")"; }
  friend bool operator==(const MPair&, const MPair&) = default;
  friend auto operator<=>(const MPair&, const MPair&) = default;
};

using CycMatrix = std::vector<std::vector<CycNum>>;

/// A symmetric group with the labeled data making up M(Gamma).
class NonabelianGroup {
 public:
  static NonabelianGroup make(GroupName name);

  GroupName name() const { return name_; }
  const PermutationGroup& group() const { return group_; }
  /// One table per class, in the order 1, g2, g2', g3, g4, g5, g6.
  const std::vector<CharacterTable>& tables() const { return tables_; }
  /// M(Gamma), table by table.
  const std::vector<MPair>& pairs() const { return pairs_; }
  std::optional<std::size_t> index(const MPair& pair) const;
  /// Throws std::invalid_argument for an unknown pair.
  std::size_t require_index(const MPair& pair) const;

 private:
  NonabelianGroup(GroupName name, PermutationGroup group) : name_(name), group_(std::move(group)) {}

  GroupName name_;
  PermutationGroup group_;
  std::vector<CharacterTable> tables_;
  std::vector<MPair> pairs_;
};

/// Entry ((x,s),(y,t)) = 1/(|Z(x)||Z(y)|) sum over g with x commuting with
/// g y g^-1 of s(g y g^-1) conj(t(g^-1 x g)).
CycMatrix nonabelian_ft(const NonabelianGroup& group);

CycMatrix multiply(const CycMatrix& a, const CycMatrix& b);
CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b);
CycNum trace(const CycMatrix& m);
bool is_identity(const CycMatrix& m);
bool is_symmetric(const CycMatrix& m);

/// Symmetry, FT^2 = 1, the field the entries live in, and all character
/// tables.
Report verify_ft(const NonabelianGroup& group, const CycMatrix& ft);

/// M and FT of S3 x S2 as a tensor product: FT^2 = 1 and the trace is the
/// product of the factor traces.
Report verify_product(GroupName left, GroupName right);

struct HyperplaneResult {
  Report report;
  /// phi o F = lambda phi.
  CycNum lambda;
};

/// The hyperplane a(g5,z) + a(g5,z^4) = a(g5,z^2) + a(g5,z^3) of C[M(S5)] is
/// F-stable.
HyperplaneResult hyperplane_check(const NonabelianGroup& group, const CycMatrix& ft);

/// The defining functional of that hyperplane, indexed like pairs().
std::vector<CycNum> hyperplane_functional(const NonabelianGroup& group);

}  // namespace trifourier

#endif  // TRIFOURIER_NONABELIAN_HPP_
