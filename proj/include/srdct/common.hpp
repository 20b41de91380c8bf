// Copyright 2026 The srdct Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace srdct {

using Complex = std::complex<double>;
using RealSignal = std::vector<double>;
using ComplexSignal = std::vector<Complex>;
/// Bins k = 0..N/2 of a real-input DFT.
using HalfSpectrum = std::vector<Complex>;

enum class Normalization { TwoSided, Unitary, UnitaryTimesSqrtN };

inline bool is_power_of_two(std::size_t n) { return std::has_single_bit(n); }

inline int log2_exact(std::size_t n) { return std::countr_zero(n); }

inline void require_power_of_two(std::size_t n, const char* what, std::size_t min = 1) {
  if (!is_power_of_two(n) || n < min) {
    throw std::invalid_argument(std::string(what) + ": length " + std::to_string(n) +
                                " is not a power of two >= " + std::to_string(min));
  }
}

inline const char* to_string(Normalization norm) {
  switch (norm) {
    case Normalization::TwoSided: return "two-sided";
    case Normalization::Unitary: return "unitary";
    case Normalization::UnitaryTimesSqrtN: return "unitary-sqrtn";
  }
  return "?";
}

inline Normalization parse_normalization(const std::string& s) {
  if (s == "two-sided" || s == "twosided" || s == "2") return Normalization::TwoSided;
  if (s == "unitary" || s == "ortho") return Normalization::Unitary;
  if (s == "unitary-sqrtn" || s == "sqrtn") return Normalization::UnitaryTimesSqrtN;
  throw std::invalid_argument("unknown normalization '" + s + "'");
}

/// Minimal complex pair over an arbitrary scalar. std::complex is only
/// specified for floating-point types, and the kernels also run over
/// symbolic trace handles.
template <class T>
struct Cplx {
  T re{};
  T im{};
};

}  // namespace srdct
