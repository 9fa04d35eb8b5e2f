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
#include "trifourier/gf2.hpp"

#include <algorithm>
#include <sstream>

namespace trifourier {

void require_valid_dimension(int dimension) {
  if (dimension < 0 || dimension % 2 != 0) {
    throw DimensionError("dimension must be even and non-negative, got " +
                         std::to_string(dimension));
  }
  if (dimension > kMaxDimension) {
    throw DimensionError("dimension " + std::to_string(dimension) +
                         " exceeds the configured cap " + std::to_string(kMaxDimension));
  }
}

GF2Vector::GF2Vector(int dimension, Word bits) : dimension_(dimension), bits_(bits) {
  if (dimension < 0 || dimension > 31 || (bits & ~low_mask(dimension)) != 0) {
    throw DimensionError("vector does not fit in dimension " + std::to_string(dimension));
  }
}

GF2Vector GF2Vector::unit(int dimension, int i) {
  if (i < 1 || i > dimension) throw std::out_of_range("unit vector index out of range");
  return GF2Vector(dimension, Word{1} << (i - 1));
}

bool GF2Vector::coordinate(int i) const {
  if (i < 1 || i > dimension_) throw std::out_of_range("coordinate index out of range");
  return (bits_ >> (i - 1)) & 1u;
}

GF2Vector& GF2Vector::operator+=(const GF2Vector& other) {
  if (other.dimension_ != dimension_) throw DimensionError("vector dimension mismatch");
  bits_ ^= other.bits_;
  return *this;
}

std::string GF2Vector::to_string() const {
  std::string out(static_cast<std::size_t>(dimension_), '0');
  for (int i = 0; i < dimension_; ++i) {
    if ((bits_ >> i) & 1u) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

SymplecticSpace::SymplecticSpace(int dimension) : dimension_(dimension) {
  const int n = dimension + 1;
  gram_rows_.assign(static_cast<std::size_t>(dimension), 0);
  for (int i = 1; i <= dimension; ++i) {
    for (int j = 1; j <= dimension; ++j) {
      const int diff = ((i - j) % n + n) % n;
      if (diff == 1 || diff == n - 1) gram_rows_[static_cast<std::size_t>(i - 1)] |= Word{1} << (j - 1);
    }
  }
}

SymplecticSpace SymplecticSpace::make(int dimension) {
  require_valid_dimension(dimension);
  return SymplecticSpace(dimension);
}

bool SymplecticSpace::gram(int i, int j) const {
  if (i < 1 || i > dimension_ || j < 1 || j > dimension_) {
    throw std::out_of_range("gram index out of range");
  }
  return (gram_rows_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1u;
}

int SymplecticSpace::gram_determinant() const {
  return rank(gram_rows_) == dimension_ ? 1 : 0;
}

Word SymplecticSpace::circular_bits(int i) const {
  if (i < 1 || i > dimension_ + 1) throw std::out_of_range("circular index out of range");
  if (i == dimension_ + 1) return full_mask();
  return Word{1} << (i - 1);
}

std::vector<GF2Vector> SymplecticSpace::circular_basis() const {
  std::vector<GF2Vector> out;
  for (int i = 1; i <= dimension_ + 1; ++i) out.push_back(circular(i));
  return out;
}

Word SymplecticSpace::dual(Word u) const {
  Word out = 0;
  while (u) {
    const int i = __builtin_ctz(u);
    out ^= gram_rows_[static_cast<std::size_t>(i)];
    u &= u - 1;
  }
  return out;
}

int SymplecticSpace::pairing(const GF2Vector& u, const GF2Vector& v) const {
  if (u.dimension() != dimension_ || v.dimension() != dimension_) {
    throw DimensionError("pairing: vector dimension does not match the space");
  }
  return pairing_bits(u.bits(), v.bits());
}

Word SymplecticSpace::interval_bits(int a, int b) const {
  if (a < 1 || a > b || b > dimension_) throw std::out_of_range("interval out of range");
  return low_mask(b) & ~low_mask(a - 1);
}

GF2Vector SymplecticSpace::interval_vector(int a, int b) const {
  return GF2Vector(dimension_, interval_bits(a, b));
}

Word SymplecticSpace::subset_bits(std::span<const int> indices) const {
  Word out = 0;
  for (int i : indices) out ^= circular_bits(i);
  return out;
}

// Subspace

void Subspace::insert(Word w) {
  w = reduce(w);
  if (w == 0) return;
  const Word pivot = w & (~w + 1);
  for (Word& b : basis_) {
    if (b & pivot) b ^= w;
  }
  auto pos = std::lower_bound(basis_.begin(), basis_.end(), w, [](Word a, Word b) {
    return (a & (~a + 1)) < (b & (~b + 1));
  });
  basis_.insert(pos, w);
}

Subspace Subspace::span(int ambient_dimension, std::span<const Word> generators) {
  Subspace out(ambient_dimension);
  const Word mask = low_mask(ambient_dimension);
  for (Word g : generators) {
    if (g & ~mask) throw DimensionError("generator does not fit the ambient dimension");
    out.insert(g);
  }
  return out;
}

std::vector<GF2Vector> Subspace::basis_vectors() const {
  std::vector<GF2Vector> out;
  out.reserve(basis_.size());
  for (Word b : basis_) out.emplace_back(ambient_, b);
  return out;
}

Word Subspace::reduce(Word w) const {
  for (Word b : basis_) {
    if (w & b & (~b + 1)) w ^= b;
  }
  return w;
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [this](Word w) { return contains(w); });
}

std::vector<Word> Subspace::elements() const {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << basis_.size());
  out.push_back(0);
  Word current = 0;
  for (std::size_t k = 1; k < (std::size_t{1} << basis_.size()); ++k) {
    current ^= basis_[static_cast<std::size_t>(__builtin_ctzll(k))];
    out.push_back(current);
  }
  return out;
}

Subspace Subspace::with(Word w) const {
  Subspace out = *this;
  out.insert(w);
  return out;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.basis_.size() <=> b.basis_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.basis_.begin(), a.basis_.end(),
                                                b.basis_.begin(), b.basis_.end());
}

std::string Subspace::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (k) os << ',';
    os << GF2Vector(ambient_, basis_[k]).to_string();
  }
  os << '>';
  return os.str();
}

Subspace canonical_subspace(int ambient_dimension, std::span<const GF2Vector> vectors) {
  std::vector<Word> words;
  words.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.dimension() != ambient_dimension) throw DimensionError("vectors live in different spaces");
    words.push_back(v.bits());
  }
  return Subspace::span(ambient_dimension, words);
}

bool is_isotropic(const SymplecticSpace& space, const Subspace& subspace) {
  const auto& basis = subspace.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Word dual = space.dual(basis[i]);
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (parity(dual & basis[j])) return false;
    }
  }
  return true;
}

Subspace orthogonal_complement(const SymplecticSpace& space, const Subspace& subspace) {
  // x is orthogonal to w iff x . dual(w) = 0 (standard dot product), so the
  // complement is the kernel of the matrix whose rows are dual(w).
  std::vector<Word> rows;
  for (Word w : subspace.basis()) rows.push_back(space.dual(w));
  const Subspace row_space = Subspace::span(space.dimension(), rows);
  std::vector<Word> kernel;
  const Word mask = space.full_mask();
  // Free coordinates are the non-pivot positions of the reduced row space.
  Word pivots = 0;
  for (Word r : row_space.basis()) pivots |= r & (~r + 1);
  for (int f = 0; f < space.dimension(); ++f) {
    const Word free_bit = Word{1} << f;
    if (pivots & free_bit) continue;
    Word x = free_bit;
    for (Word r : row_space.basis()) {
      if (r & free_bit) x |= r & (~r + 1);
    }
    kernel.push_back(x & mask);
  }
  return Subspace::span(space.dimension(), kernel);
}

int rank(std::span<const Word> vectors) {
  std::vector<Word> basis;
  for (Word v : vectors) {
    for (Word b : basis) {
      if (v & b & (~b + 1)) v ^= b;
    }
    if (v) {
      const Word pivot = v & (~v + 1);
      for (Word& b : basis) {
        if (b & pivot) b ^= v;
      }
      basis.push_back(v);
    }
  }
  return static_cast<int>(basis.size());
}

std::vector<int> IntervalLabel::normalized() const {
  std::vector<int> out;
  if (!is_even()) {
    for (int i = first; i <= last; ++i) out.push_back(i);
    return out;
  }
  for (int i = last + 1; i <= ambient + 1; ++i) out.push_back(i);
  for (int i = 1; i < first; ++i) out.push_back(i);
  return out;
}

std::string IntervalLabel::compact() const {
  const auto elements = normalized();
  std::string out;
  if (ambient <= 8) {
    for (int i : elements) out += std::to_string(i);
    return out;
  }
  if (elements.size() == 1) return std::to_string(elements.front());
  out = "(";
  for (std::size_t k = 0; k < elements.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(elements[k]);
  }
  return out + ")";
}

bool label_display_less(const IntervalLabel& a, const IntervalLabel& b) {
  const auto na = a.normalized();
  const auto nb = b.normalized();
  if (na.size() != nb.size()) return na.size() < nb.size();
  return na.front() < nb.front();
}

}  // namespace trifourier
