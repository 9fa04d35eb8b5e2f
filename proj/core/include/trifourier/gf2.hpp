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
#ifndef TRIFOURIER_GF2_HPP_
#define TRIFOURIER_GF2_HPP_

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#ifndef TRIFOURIER_MAX_DIMENSION
#define TRIFOURIER_MAX_DIMENSION 14
#endif

namespace trifourier {

/// Bit-packed coordinates over F2. Bit (i-1) holds the coefficient of e_i.
using Word = std::uint32_t;

inline constexpr int kMaxDimension = TRIFOURIER_MAX_DIMENSION;
static_assert(kMaxDimension % 2 == 0 && kMaxDimension < 31,
              "ambient dimension must be even and fit a 32-bit word");

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws DimensionError unless 0 <= D <= kMaxDimension and D is even.
void require_valid_dimension(int dimension);

inline int parity(Word w) { return __builtin_parity(w); }
inline int popcount(Word w) { return __builtin_popcount(w); }
inline Word low_mask(int n) { return n >= 32 ? ~Word{0} : (Word{1} << n) - 1; }

/// A vector of V written in the coordinates e_1..e_D.
class GF2Vector {
 public:
  GF2Vector() = default;
  GF2Vector(int dimension, Word bits);

  static GF2Vector zero(int dimension) { return GF2Vector(dimension, 0); }
  /// The coordinate vector e_i, 1 <= i <= dimension.
  static GF2Vector unit(int dimension, int i);

  int dimension() const { return dimension_; }
  Word bits() const { return bits_; }
  /// Coefficient of e_i (1-based).
  bool coordinate(int i) const;
  bool is_zero() const { return bits_ == 0; }
  int weight() const { return popcount(bits_); }

  GF2Vector& operator+=(const GF2Vector& other);
  friend GF2Vector operator+(GF2Vector a, const GF2Vector& b) { return a += b; }

  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
  friend auto operator<=>(const GF2Vector&, const GF2Vector&) = default;

  /// Coordinates as a 0/1 string, e_1 first.
  std::string to_string() const;

 private:
  int dimension_ = 0;
  Word bits_ = 0;
};

/// V = F2^D with the symplectic form whose circular basis is e_1..e_{D+1}:
/// (e_i, e_j) = 1 exactly when i - j = +-1 mod D+1. e_{D+1} is the sum of
/// the coordinate vectors.
class SymplecticSpace {
 public:
  /// Builds the space of dimension D. Rejects odd, negative or oversized D.
  static SymplecticSpace make(int dimension);

  int dimension() const { return dimension_; }
  int half_dimension() const { return dimension_ / 2; }
  /// Number of vectors, 2^D.
  std::size_t cardinality() const { return std::size_t{1} << dimension_; }
  Word full_mask() const { return low_mask(dimension_); }

  /// Gram matrix entry for coordinates i, j in [1, D].
  bool gram(int i, int j) const;
  /// Row i of the Gram matrix as a mask.
  Word gram_row(int i) const { return gram_rows_.at(static_cast<std::size_t>(i - 1)); }
  /// Determinant of the Gram matrix over F2.
  int gram_determinant() const;

  /// Circular basis vector e_i, i in [1, D+1].
  Word circular_bits(int i) const;
  GF2Vector circular(int i) const { return GF2Vector(dimension_, circular_bits(i)); }
  std::vector<GF2Vector> circular_basis() const;

  /// Gram * u, so that pairing(u, v) = parity(dual(u) & v).
  Word dual(Word u) const;
  int pairing_bits(Word u, Word v) const { return parity(dual(u) & v); }
  /// (u, v) in F2. Throws DimensionError on a length mismatch.
  int pairing(const GF2Vector& u, const GF2Vector& v) const;

  /// e_{[a,b]} = e_a + ... + e_b for 1 <= a <= b <= D.
  GF2Vector interval_vector(int a, int b) const;
  Word interval_bits(int a, int b) const;
  /// e_I for an arbitrary I contained in [1, D+1].
  Word subset_bits(std::span<const int> indices) const;

  friend bool operator==(const SymplecticSpace& a, const SymplecticSpace& b) {
    return a.dimension_ == b.dimension_;
  }

 private:
  explicit SymplecticSpace(int dimension);

  int dimension_ = 0;
  std::vector<Word> gram_rows_;
};

/// A subspace kept in reduced echelon form. The pivot of a basis vector is
/// its lowest coordinate; no other basis vector has that coordinate set, and
/// the basis is sorted by pivot. Equal spans give identical representations.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(int ambient_dimension) : ambient_(ambient_dimension) {}

  static Subspace span(int ambient_dimension, std::span<const Word> generators);
  static Subspace span(int ambient_dimension, std::initializer_list<Word> generators) {
    return span(ambient_dimension, std::span<const Word>(generators.begin(), generators.size()));
  }

  int ambient_dimension() const { return ambient_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<Word>& basis() const { return basis_; }
  std::vector<GF2Vector> basis_vectors() const;

  /// Reduces w against the echelon basis; zero iff w lies in the span.
  Word reduce(Word w) const;
  bool contains(Word w) const { return reduce(w) == 0; }
  bool contains(const GF2Vector& v) const { return contains(v.bits()); }
  bool contains(const Subspace& other) const;

  /// All 2^dim elements, in Gray-code order starting at 0.
  std::vector<Word> elements() const;

  /// Span of this subspace and one more vector.
  Subspace with(Word w) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  /// Orders by dimension, then lexicographically on the echelon basis.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);

  std::string to_string() const;

 private:
  void insert(Word w);

  int ambient_ = 0;
  std::vector<Word> basis_;
};

/// Reduced echelon form of the span of `vectors` inside F2^ambient_dimension.
Subspace canonical_subspace(int ambient_dimension, std::span<const GF2Vector> vectors);

bool is_isotropic(const SymplecticSpace& space, const Subspace& subspace);

/// {x : (x, w) = 0 for all w in subspace}.
Subspace orthogonal_complement(const SymplecticSpace& space, const Subspace& subspace);

/// Rank over F2 of a list of words.
int rank(std::span<const Word> vectors);

/// An interval [first, last] of [1, D] and its normalized form I' in [1, D+1]:
/// I' = I when |I| is odd and I' = [1, D+1] - I when |I| is even.
struct IntervalLabel {
  int ambient = 0;
  int first = 0;
  int last = 0;

  int length() const { return last - first + 1; }
  bool is_even() const { return length() % 2 == 0; }
  /// I' listed as a circular run, starting at the run's first vertex.
  std::vector<int> normalized() const;
  /// Elements of I' as digits when D <= 8 ("512"); otherwise a comma list in
  /// parentheses ("(11,1,2)") so that labels stay separable.
  std::string compact() const;

  friend bool operator==(const IntervalLabel&, const IntervalLabel&) = default;
  friend auto operator<=>(const IntervalLabel&, const IntervalLabel&) = default;
};

/// Display order for the intervals of one subspace: |I'| ascending, then by
/// the run's starting vertex.
bool label_display_less(const IntervalLabel& a, const IntervalLabel& b);

}  // namespace trifourier

#endif  // TRIFOURIER_GF2_HPP_
