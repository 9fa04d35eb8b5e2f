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
#ifndef TRIFOURIER_FAMILY_HPP_
#define TRIFOURIER_FAMILY_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "trifourier/gf2.hpp"
#include "trifourier/report.hpp"
#include "trifourier/tau.hpp"

namespace trifourier {

/// Raised when a subspace does not have the interval basis a family member
/// must have.
class FamilyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How a member was first produced by the recursion.
struct Provenance {
  enum class Kind { kZero, kTau, kStandard, kGeneric, kLine };
  Kind kind = Kind::kZero;
  /// tau index i, standard index k, or target vertex gamma.
  int index = 0;
  /// Source vertex gamma' for kGeneric.
  int source_vertex = 0;
  /// The member of the smaller family it came from, if any.
  std::optional<Subspace> parent;

  std::string to_string() const;
};

struct FamilyEntry {
  Subspace space;
  /// b_E in display order.
  std::vector<IntervalLabel> intervals;
  /// n_E, the number of even-length intervals in b_E.
  int even_count = 0;
  /// Index of E^! (span of the odd-length intervals).
  std::size_t shriek = 0;
  std::size_t fiber = 0;
  /// Position j inside the fiber (ordered by n-value) and fiber parameter k.
  int fiber_position = 0;
  int fiber_parameter = 0;
  std::size_t kappa = 0;
  Provenance provenance;

  int dimension() const { return space.dimension(); }
  /// "<1,512>" style label, or "∅" for the zero subspace.
  std::string label() const;
};

/// Members sharing the same E^!, ordered by n-value.
struct Fiber {
  std::size_t root = 0;
  std::vector<std::size_t> members;

  int parameter() const { return static_cast<int>(members.size()) - 1; }
};

/// A complete collection of subspaces with its interval statistics. Entries
/// are sorted by dimension, then by echelon representation.
class Family {
 public:
  /// Computes b_E, n_E, E^!, fibers and kappa for the given members.
  /// Throws FamilyError when a member has no valid interval basis.
  static Family from_members(int dimension, std::map<Subspace, Provenance> members);

  int dimension() const { return space_.dimension(); }
  int half_dimension() const { return space_.half_dimension(); }
  const SymplecticSpace& space() const { return space_; }

  std::size_t size() const { return entries_.size(); }
  const std::vector<FamilyEntry>& entries() const { return entries_; }
  const FamilyEntry& operator[](std::size_t k) const { return entries_.at(k); }

  std::optional<std::size_t> find(const Subspace& subspace) const;
  bool contains(const Subspace& subspace) const { return find(subspace).has_value(); }
  std::vector<Subspace> members() const;

  /// F_k: members of dimension k.
  std::vector<std::size_t> with_dimension(int k) const;
  /// F^k: members with n_E = k.
  std::vector<std::size_t> with_even_count(int k) const;

  /// Fibers ordered by (dim E^!, echelon form of E^!).
  const std::vector<Fiber>& fibers() const { return fibers_; }

 private:
  explicit Family(SymplecticSpace space) : space_(std::move(space)) {}

  SymplecticSpace space_;
  std::vector<FamilyEntry> entries_;
  std::map<Subspace, std::size_t> index_;
  std::vector<Fiber> fibers_;
};

/// Clauses (i) and (ii): E = tau_i(E') + F2 e_i for i in [1, D], and the
/// standard subspaces E_k.
Family build_family(int dimension);

/// E = 0, or E = tau_i(E') + F2 e_i for i in [1, D+1], recursing on this
/// same construction in dimension D-2.
Family build_family_prime(int dimension);

/// The vertex-pair construction: E = 0, or tau~_{gamma',gamma}(E') + F2 gamma
/// over all vertex pairs; all subspaces of dimension <= 1 when D = 2.
Family build_family_ucb(int dimension, Orientation orientation = Orientation::kForward);

/// E_k, spanned by e_[1,D], e_[2,D-1], ..., e_[k,D+1-k].
Subspace standard_subspace(const SymplecticSpace& space, int k);

/// All intervals [a, b] of [1, D] with e_[a,b] in E. Throws FamilyError
/// unless they number dim E and are independent.
std::vector<IntervalLabel> interval_basis(const SymplecticSpace& space, const Subspace& subspace);

/// (-1)^(N(N+1)/2).
int delta(long long n);

/// Sizes, n-values and dimension ranges of every fiber, and kappa^2 = id.
Report verify_fibers(const Family& family);

/// |F_k| = C(D+1, k), |F^k| = C(D+1, d-k), kappa(F^k) = F_{d-k}, and the
/// alternating binomial identity for this d.
Report verify_counts(const Family& family);

/// sum_{k=0..d} delta(d-k) C(2d+1, k), computed with big integers.
mpz_class alternating_binomial_sum(int half_dimension);
Report verify_binomial_identity(int max_half_dimension);

mpz_class binomial(int n, int k);

}  // namespace trifourier

#endif  // TRIFOURIER_FAMILY_HPP_
