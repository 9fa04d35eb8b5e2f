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
#ifndef TRIFOURIER_FOURIER_HPP_
#define TRIFOURIER_FOURIER_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "trifourier/family.hpp"
#include "trifourier/gf2.hpp"
#include "trifourier/integer_matrix.hpp"
#include "trifourier/report.hpp"

namespace trifourier {

using Rational = mpq_class;

/// A function V -> Q, indexed by the bit encoding of x.
class FunctionVector {
 public:
  FunctionVector() = default;
  explicit FunctionVector(int dimension);
  /// Throws DimensionError unless values.size() == 2^dimension.
  FunctionVector(int dimension, std::vector<Rational> values);

  /// delta_x.
  static FunctionVector delta(int dimension, Word x);

  int dimension() const { return dimension_; }
  std::size_t size() const { return values_.size(); }
  const Rational& operator[](Word x) const { return values_.at(x); }
  Rational& operator[](Word x) { return values_.at(x); }
  const std::vector<Rational>& values() const { return values_; }
  bool is_integral() const;

  FunctionVector& operator+=(const FunctionVector& other);
  FunctionVector& operator-=(const FunctionVector& other);
  FunctionVector& operator*=(const Rational& scalar);
  friend FunctionVector operator+(FunctionVector a, const FunctionVector& b) { return a += b; }
  friend FunctionVector operator-(FunctionVector a, const FunctionVector& b) { return a -= b; }
  friend FunctionVector operator*(const Rational& s, FunctionVector a) { return a *= s; }
  friend bool operator==(const FunctionVector&, const FunctionVector&) = default;

 private:
  int dimension_ = 0;
  std::vector<Rational> values_;
};

/// Phi(f)(x) = 2^-d sum_y (-1)^(x,y) f(y), evaluated through a fast
/// Walsh-Hadamard transform.
FunctionVector phi(const SymplecticSpace& space, const FunctionVector& f);

/// 2^d Phi on integer-valued functions; no division is needed.
std::vector<std::int64_t> scaled_phi(const SymplecticSpace& space, std::span<const std::int64_t> f);

/// psi_X: 1 on X, 0 elsewhere.
FunctionVector characteristic(const SymplecticSpace& space, const Subspace& subspace);
FunctionVector characteristic(const SymplecticSpace& space, std::span<const Word> points);

/// z_i : [V'] -> [V], delta'_y -> delta_{tau_i(y)} + delta_{tau_i(y)+e_i}.
FunctionVector z_map(const SymplecticSpace& space, int i, const FunctionVector& f_prime);

/// Column k is psi of the k-th family entry in the delta basis.
IntegerMatrix basis_matrix(const Family& family);

/// The coefficients c_{E,E1} of Phi(psi_E) = sum c_{E,E1} psi_{E1}, stored
/// scaled by 2^d. Rows and columns follow the family order: dimension
/// ascending, then echelon form. In this order the matrix is upper
/// triangular.
class CobMatrix {
 public:
  CobMatrix(int dimension, IntegerMatrix scaled, std::int64_t peak);

  int dimension() const { return dimension_; }
  int half_dimension() const { return dimension_ / 2; }
  std::size_t size() const { return scaled_.rows(); }
  /// 2^d.
  std::int64_t denominator() const { return std::int64_t{1} << half_dimension(); }

  /// 2^d c_{E,E1} for row E and column E1.
  std::int64_t scaled(std::size_t row, std::size_t col) const { return scaled_(row, col); }
  Rational at(std::size_t row, std::size_t col) const;
  const IntegerMatrix& scaled_matrix() const { return scaled_; }
  /// Largest intermediate seen while solving.
  std::int64_t elimination_peak() const { return peak_; }

  Rational trace() const;
  std::size_t count_diagonal(int sign) const;

 private:
  int dimension_;
  IntegerMatrix scaled_;
  std::int64_t peak_;
};

/// Solves B X = 2^d H B exactly and checks the product before returning.
/// Throws std::logic_error if B is not unimodular or the check fails.
CobMatrix change_of_basis(const Family& family);

/// Triangularity, the diagonal law c_{E,E} = delta(d - dim E), the trace and
/// the +1 count.
Report verify_triangularity(const Family& family, const CobMatrix& matrix);

/// Phi z_i = z_i Phi' on every delta function of V', for all i in [1, D+1].
Report verify_z_commutation(int dimension);

}  // namespace trifourier

#endif  // TRIFOURIER_FOURIER_HPP_
