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
// Readable gtest output for library value types.
#ifndef TRIFOURIER_TESTS_PRINTERS_HPP_
#define TRIFOURIER_TESTS_PRINTERS_HPP_

#include <ostream>

#include "trifourier/cyclotomic.hpp"
#include "trifourier/dihedral.hpp"
#include "trifourier/fourier.hpp"
#include "trifourier/gf2.hpp"
#include "trifourier/integer_matrix.hpp"
#include "trifourier/tau.hpp"

namespace trifourier {

inline void PrintTo(const CycNum& value, std::ostream* os) { *os << value.to_string(); }
inline void PrintTo(const Subspace& value, std::ostream* os) { *os << value.to_string(); }
inline void PrintTo(const GF2Vector& value, std::ostream* os) { *os << value.to_string(); }
inline void PrintTo(const LinearEmbedding& value, std::ostream* os) { *os << value.to_string(); }

inline void PrintTo(const FunctionVector& value, std::ostream* os) {
  *os << "{";
  for (std::size_t x = 0; x < value.size(); ++x) *os << (x ? ", " : "") << value.values()[x].get_str();
  *os << "}";
}

inline void PrintTo(const SympAuto& value, std::ostream* os) {
  *os << "columns{";
  for (std::size_t k = 0; k < value.columns().size(); ++k) *os << (k ? ", " : "") << value.columns()[k];
  *os << "}";
}

inline void PrintTo(const IntegerMatrix& value, std::ostream* os) {
  *os << "[";
  for (std::size_t r = 0; r < value.rows(); ++r) {
    *os << (r ? "; " : "");
    for (std::size_t c = 0; c < value.cols(); ++c) *os << (c ? " " : "") << value(r, c);
  }
  *os << "]";
}

}  // namespace trifourier

#endif  // TRIFOURIER_TESTS_PRINTERS_HPP_
