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
#include "trifourier/fourier.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace trifourier {
namespace {

template <typename T>
void walsh_hadamard(std::vector<T>& a) {
  for (std::size_t h = 1; h < a.size(); h <<= 1) {
    for (std::size_t i = 0; i < a.size(); i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        T x = a[j];
        T y = a[j + h];
        a[j] = x + y;
        a[j + h] = x - y;
      }
    }
  }
}

void require_length(const SymplecticSpace& space, std::size_t n) {
  if (n != space.cardinality()) {
    throw DimensionError("function has " + std::to_string(n) + " values, expected " +
                         std::to_string(space.cardinality()));
  }
}

}  // namespace

FunctionVector::FunctionVector(int dimension) : dimension_(dimension) {
  require_valid_dimension(dimension);
  values_.assign(std::size_t{1} << dimension, Rational(0));
}

FunctionVector::FunctionVector(int dimension, std::vector<Rational> values)
    : dimension_(dimension), values_(std::move(values)) {
  require_valid_dimension(dimension);
  if (values_.size() != (std::size_t{1} << dimension)) {
    throw DimensionError("function length does not match 2^D");
  }
}

FunctionVector FunctionVector::delta(int dimension, Word x) {
  FunctionVector out(dimension);
  out[x] = 1;
  return out;
}

bool FunctionVector::is_integral() const {
  for (const Rational& v : values_) {
    if (v.get_den() != 1) return false;
  }
  return true;
}

FunctionVector& FunctionVector::operator+=(const FunctionVector& other) {
  if (other.dimension_ != dimension_) throw DimensionError("function dimensions differ");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] += other.values_[k];
  return *this;
}

FunctionVector& FunctionVector::operator-=(const FunctionVector& other) {
  if (other.dimension_ != dimension_) throw DimensionError("function dimensions differ");
  for (std::size_t k = 0; k < values_.size(); ++k) values_[k] -= other.values_[k];
  return *this;
}

FunctionVector& FunctionVector::operator*=(const Rational& scalar) {
  for (Rational& v : values_) v *= scalar;
  return *this;
}

// sum_y (-1)^(x,y) f(y) = W(f)(Gx), W the standard Walsh-Hadamard transform.
FunctionVector phi(const SymplecticSpace& space, const FunctionVector& f) {
  require_length(space, f.size());
  std::vector<Rational> w = f.values();
  walsh_hadamard(w);
  const Rational scale(1, static_cast<unsigned long>(1) << space.half_dimension());
  std::vector<Rational> out(w.size());
  for (Word x = 0; x < w.size(); ++x) out[x] = w[space.dual(x)] * scale;
  return FunctionVector(space.dimension(), std::move(out));
}

std::vector<std::int64_t> scaled_phi(const SymplecticSpace& space, std::span<const std::int64_t> f) {
  require_length(space, f.size());
  std::vector<std::int64_t> w(f.begin(), f.end());
  walsh_hadamard(w);
  std::vector<std::int64_t> out(w.size());
  for (Word x = 0; x < w.size(); ++x) out[x] = w[space.dual(x)];
  return out;
}

FunctionVector characteristic(const SymplecticSpace& space, const Subspace& subspace) {
  if (subspace.ambient_dimension() != space.dimension()) throw DimensionError("subspace lives elsewhere");
  FunctionVector out(space.dimension());
  for (Word x : subspace.elements()) out[x] = 1;
  return out;
}

FunctionVector characteristic(const SymplecticSpace& space, std::span<const Word> points) {
  FunctionVector out(space.dimension());
  for (Word x : points) {
    if ((x & ~space.full_mask()) != 0) throw DimensionError("point outside V");
    out[x] = 1;
  }
  return out;
}

FunctionVector z_map(const SymplecticSpace& space, int i, const FunctionVector& f_prime) {
  if (space.dimension() < 2 || f_prime.dimension() != space.dimension() - 2) {
    throw DimensionError("z_i maps functions on V' to functions on V");
  }
  const LinearEmbedding t = tau(space, i);
  const Word ei = space.circular_bits(i);
  FunctionVector out(space.dimension());
  for (Word y = 0; y < f_prime.size(); ++y) {
    if (f_prime[y] == 0) continue;
    const Word image = t.apply(y);
    out[image] += f_prime[y];
    out[image ^ ei] += f_prime[y];
  }
  return out;
}

IntegerMatrix basis_matrix(const Family& family) {
  const std::size_t n = family.size();
  IntegerMatrix b(family.space().cardinality(), n);
  for (std::size_t k = 0; k < n; ++k) {
    for (Word x : family[k].space.elements()) b(x, k) = 1;
  }
  return b;
}

CobMatrix::CobMatrix(int dimension, IntegerMatrix scaled, std::int64_t peak)
    : dimension_(dimension), scaled_(std::move(scaled)), peak_(peak) {}

Rational CobMatrix::at(std::size_t row, std::size_t col) const {
  Rational out(static_cast<long>(scaled_(row, col)), static_cast<unsigned long>(denominator()));
  out.canonicalize();
  return out;
}

Rational CobMatrix::trace() const {
  Rational out = 0;
  for (std::size_t k = 0; k < size(); ++k) out += at(k, k);
  return out;
}

std::size_t CobMatrix::count_diagonal(int sign) const {
  std::size_t out = 0;
  for (std::size_t k = 0; k < size(); ++k) out += scaled_(k, k) == sign * denominator();
  return out;
}

CobMatrix change_of_basis(const Family& family) {
  const SymplecticSpace& space = family.space();
  const std::size_t n = family.size();
  if (n != space.cardinality()) throw std::logic_error("family size differs from |V|");
  const IntegerMatrix b = basis_matrix(family);

  // Column k of y is 2^d Phi(psi_k).
  IntegerMatrix y(n, n);
  std::vector<std::int64_t> column(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) column[x] = b(x, k);
    const std::vector<std::int64_t> image = scaled_phi(space, column);
    for (std::size_t x = 0; x < n; ++x) y(x, k) = image[x];
  }

  IntegerElimination solved = eliminate(b, y);
  if (!solved.solution) {
    throw std::logic_error("basis matrix is not unimodular (det " + solved.determinant.get_str() + ")");
  }
  if (!(b * *solved.solution == y)) throw std::logic_error("change of basis failed its product check");
  // solution(E1, E) = 2^d c_{E,E1}.
  return CobMatrix(space.dimension(), solved.solution->transpose(), solved.peak);
}

Report verify_triangularity(const Family& family, const CobMatrix& matrix) {
  Report report("fourier");
  const std::size_t n = family.size();
  const int d = family.half_dimension();
  if (matrix.size() != n || matrix.dimension() != family.dimension()) {
    report.add("shape", false, "matrix does not belong to this family");
    return report;
  }

  // Row expansion: sum_E1 2^d c_{E,E1} psi_E1 = 2^d Phi(psi_E).
  const SymplecticSpace& space = family.space();
  std::size_t bad_rows = 0;
  std::vector<std::int64_t> psi(n), rebuilt(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(psi.begin(), psi.end(), 0);
    std::fill(rebuilt.begin(), rebuilt.end(), 0);
    for (Word x : family[r].space.elements()) psi[x] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      const std::int64_t v = matrix.scaled(r, c);
      if (v == 0) continue;
      for (Word x : family[c].space.elements()) rebuilt[x] += v;
    }
    if (rebuilt != scaled_phi(space, psi)) ++bad_rows;
  }
  report.add("expansion", bad_rows == 0, std::to_string(bad_rows) + " rows differ from Phi(psi_E)");

  std::size_t violations = 0;
  std::size_t wrong_diagonal = 0;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c == r || matrix.scaled(r, c) == 0) continue;
      if (family[c].dimension() <= family[r].dimension() || c < r) ++violations;
    }
    const int expected = delta(d - family[r].dimension());
    if (matrix.scaled(r, r) != expected * matrix.denominator()) ++wrong_diagonal;
  }
  report.add("triangular", violations == 0, std::to_string(violations) + " entries break dim E1 > dim E");
  report.add("diagonal-law", wrong_diagonal == 0,
             std::to_string(wrong_diagonal) + " diagonal entries differ from delta(d - dim E)");

  const Rational trace = matrix.trace();
  const mpz_class expected_trace = mpz_class(1) << d;
  report.add("trace", trace == Rational(expected_trace), "trace " + trace.get_str());
  report.add("trace-identity", Rational(alternating_binomial_sum(d)) == trace,
             "alternating binomial sum " + alternating_binomial_sum(d).get_str());

  const std::size_t plus = matrix.count_diagonal(1);
  const std::size_t expected_plus = ((std::size_t{1} << family.dimension()) + (std::size_t{1} << d)) / 2;
  report.add("plus-count", plus == expected_plus,
             std::to_string(plus) + " entries +1, expected " + std::to_string(expected_plus));
  report.add("minus-count", matrix.count_diagonal(-1) == n - expected_plus,
             std::to_string(matrix.count_diagonal(-1)) + " entries -1");
  return report;
}

Report verify_z_commutation(int dimension) {
  Report report("z-commutation");
  const SymplecticSpace space = SymplecticSpace::make(dimension);
  if (dimension < 2) {
    report.add("defined", false, "z_i needs D >= 2");
    return report;
  }
  const SymplecticSpace prime = SymplecticSpace::make(dimension - 2);
  for (int i = 1; i <= dimension + 1; ++i) {
    std::size_t mismatches = 0;
    for (Word y = 0; y < prime.cardinality(); ++y) {
      const FunctionVector d = FunctionVector::delta(prime.dimension(), y);
      if (phi(space, z_map(space, i, d)) != z_map(space, i, phi(prime, d))) ++mismatches;
    }
    report.add("i=" + std::to_string(i), mismatches == 0, std::to_string(mismatches) + " delta functions differ");
  }
  return report;
}

}  // namespace trifourier
