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
#ifndef TRIFOURIER_CYCLOTOMIC_HPP_
#define TRIFOURIER_CYCLOTOMIC_HPP_

#include <array>
#include <complex>
#include <stdexcept>
#include <string>

#include <gmpxx.h>
#include <nlohmann/json_fwd.hpp>

namespace trifourier {

/// An element of Q(z), z = exp(2 pi i / 60), as its coefficients on
/// 1, z, ..., z^15 after reduction by the 60th cyclotomic polynomial
/// x^16 + x^14 - x^10 - x^8 - x^6 + x^2 + 1.
class CycNum {
 public:
  static constexpr int kOrder = 60;
  static constexpr int kDegree = 16;

  CycNum() = default;
  CycNum(long value) { coeffs_[0] = value; }  // NOLINT(google-explicit-constructor)
  CycNum(const mpq_class& value) { coeffs_[0] = value; }  // NOLINT(google-explicit-constructor)

  /// z^k for any integer k.
  static CycNum root_of_unity(long k);
  /// Primitive roots used for character values.
  static CycNum theta() { return root_of_unity(20); }
  static CycNum i() { return root_of_unity(15); }
  static CycNum zeta5() { return root_of_unity(12); }

  const std::array<mpq_class, kDegree>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  mpq_class to_rational() const;
  /// Invariant under complex conjugation.
  bool is_real() const;
  /// Lies in Q(sqrt 5): fixed by z -> z^k for k = +-1 mod 5.
  bool in_golden_field() const;

  CycNum& operator+=(const CycNum& other);
  CycNum& operator-=(const CycNum& other);
  CycNum& operator*=(const CycNum& other);
  CycNum& operator/=(const CycNum& other) { return *this *= other.inverse(); }
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum& b) { return a /= b; }
  CycNum operator-() const;

  /// Image under z -> z^k, gcd(k, 60) = 1.
  CycNum galois(long k) const;
  CycNum conj() const { return galois(-1); }
  /// Throws std::domain_error on zero.
  CycNum inverse() const;

  std::complex<double> evaluate() const;

  friend bool operator==(const CycNum&, const CycNum&) = default;

  /// Readable form, e.g. "1/2 - 3*z^5", with z a primitive 60th root.
  std::string to_string() const;
  /// List of {num, den, exp} triples for the nonzero coefficients.
  nlohmann::json to_json() const;
  static CycNum from_json(const nlohmann::json& value);

 private:
  std::array<mpq_class, kDegree> coeffs_{};
};

}  // namespace trifourier

#endif  // TRIFOURIER_CYCLOTOMIC_HPP_
