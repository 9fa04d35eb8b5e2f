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
#include "trifourier/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include <nlohmann/json.hpp>

namespace trifourier {
namespace {

// x^16 = -x^14 + x^10 + x^8 + x^6 - x^2 - 1.
template <typename T>
void reduce(std::vector<T>& c) {
  for (std::size_t k = c.size(); k-- > CycNum::kDegree;) {
    if (c[k] == 0) continue;
    const T v = c[k];
    c[k - 2] -= v;
    c[k - 6] += v;
    c[k - 8] += v;
    c[k - 10] += v;
    c[k - 14] -= v;
    c[k - 16] -= v;
    c[k] = 0;
  }
}

// Reduced integer coefficients of z^k, k in [0, 60).
const std::array<std::array<int, CycNum::kDegree>, CycNum::kOrder>& power_table() {
  static const auto table = [] {
    std::array<std::array<int, CycNum::kDegree>, CycNum::kOrder> out{};
    for (int k = 0; k < CycNum::kOrder; ++k) {
      std::vector<int> c(CycNum::kOrder, 0);
      c[static_cast<std::size_t>(k)] = 1;
      reduce(c);
      for (int j = 0; j < CycNum::kDegree; ++j) out[k][j] = c[static_cast<std::size_t>(j)];
    }
    return out;
  }();
  return table;
}

int normalize_exponent(long k) {
  long r = k % CycNum::kOrder;
  if (r < 0) r += CycNum::kOrder;
  return static_cast<int>(r);
}

}  // namespace

CycNum CycNum::root_of_unity(long k) {
  CycNum out;
  const auto& row = power_table()[normalize_exponent(k)];
  for (int j = 0; j < kDegree; ++j) out.coeffs_[j] = row[j];
  return out;
}

bool CycNum::is_zero() const {
  for (const mpq_class& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (int j = 1; j < kDegree; ++j) {
    if (coeffs_[j] != 0) return false;
  }
  return true;
}

mpq_class CycNum::to_rational() const {
  if (!is_rational()) throw std::domain_error(to_string() + " is not rational");
  return coeffs_[0];
}

bool CycNum::is_real() const { return conj() == *this; }

bool CycNum::in_golden_field() const {
  for (long k = 1; k < kOrder; ++k) {
    if (std::gcd(k, static_cast<long>(kOrder)) != 1) continue;
    if (k % 5 != 1 && k % 5 != 4) continue;
    if (galois(k) != *this) return false;
  }
  return true;
}

CycNum& CycNum::operator+=(const CycNum& other) {
  for (int j = 0; j < kDegree; ++j) coeffs_[j] += other.coeffs_[j];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& other) {
  for (int j = 0; j < kDegree; ++j) coeffs_[j] -= other.coeffs_[j];
  return *this;
}

CycNum& CycNum::operator*=(const CycNum& other) {
  if (other.is_rational()) {
    for (mpq_class& c : coeffs_) c *= other.coeffs_[0];
    return *this;
  }
  if (is_rational()) {
    const mpq_class s = coeffs_[0];
    *this = other;
    for (mpq_class& c : coeffs_) c *= s;
    return *this;
  }
  std::vector<mpq_class> product(2 * kDegree - 1);
  for (int a = 0; a < kDegree; ++a) {
    if (coeffs_[a] == 0) continue;
    for (int b = 0; b < kDegree; ++b) {
      if (other.coeffs_[b] != 0) product[static_cast<std::size_t>(a + b)] += coeffs_[a] * other.coeffs_[b];
    }
  }
  reduce(product);
  for (int j = 0; j < kDegree; ++j) coeffs_[j] = product[static_cast<std::size_t>(j)];
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum out = *this;
  for (mpq_class& c : out.coeffs_) c = -c;
  return out;
}

CycNum CycNum::galois(long k) const {
  const int e = normalize_exponent(k);
  if (std::gcd(e, kOrder) != 1) throw std::invalid_argument("galois exponent must be a unit mod 60");
  CycNum out;
  for (int j = 0; j < kDegree; ++j) {
    if (coeffs_[j] == 0) continue;
    const auto& row = power_table()[(j * e) % kOrder];
    for (int m = 0; m < kDegree; ++m) {
      if (row[m] != 0) out.coeffs_[m] += coeffs_[j] * row[m];
    }
  }
  return out;
}

// The product of the other fifteen conjugates is N(z)/z with N(z) rational.
CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in Q(z60)");
  if (is_rational()) return CycNum(mpq_class(1 / coeffs_[0]));
  CycNum others(1);
  for (long k = 2; k < kOrder; ++k) {
    if (std::gcd(k, static_cast<long>(kOrder)) == 1) others *= galois(k);
  }
  const mpq_class norm = (*this * others).to_rational();
  for (mpq_class& c : others.coeffs_) c /= norm;
  return others;
}

std::complex<double> CycNum::evaluate() const {
  std::complex<double> out = 0;
  for (int j = 0; j < kDegree; ++j) {
    if (coeffs_[j] == 0) continue;
    out += coeffs_[j].get_d() * std::polar(1.0, 2 * std::numbers::pi * j / kOrder);
  }
  return out;
}

std::string CycNum::to_string() const {
  std::string out;
  for (int j = 0; j < kDegree; ++j) {
    const mpq_class& c = coeffs_[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpq_class magnitude = abs(c);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (j == 0) {
      out += magnitude.get_str();
    } else {
      if (magnitude != 1) out += magnitude.get_str() + "*";
      out += j == 1 ? "z" : "z^" + std::to_string(j);
    }
  }
  return out.empty() ? "0" : out;
}

nlohmann::json CycNum::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (int j = 0; j < kDegree; ++j) {
    const mpq_class& c = coeffs_[j];
    if (c == 0) continue;
    nlohmann::json term;
    if (c.get_num().fits_slong_p() && c.get_den().fits_slong_p()) {
      term["num"] = c.get_num().get_si();
      term["den"] = c.get_den().get_si();
    } else {
      term["num"] = c.get_num().get_str();
      term["den"] = c.get_den().get_str();
    }
    term["exp"] = j;
    out.push_back(std::move(term));
  }
  return out;
}

CycNum CycNum::from_json(const nlohmann::json& value) {
  auto integer = [](const nlohmann::json& v) {
    return v.is_string() ? mpz_class(v.get<std::string>()) : mpz_class(v.get<long>());
  };
  if (!value.is_array()) throw std::invalid_argument("cyclotomic value must be a list of terms");
  CycNum out;
  for (const nlohmann::json& term : value) {
    const mpz_class den = term.contains("den") ? integer(term.at("den")) : mpz_class(1);
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class c(integer(term.at("num")), den);
    c.canonicalize();
    out += CycNum(c) * root_of_unity(term.value("exp", 0L));
  }
  return out;
}

}  // namespace trifourier
