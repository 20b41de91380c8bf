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

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include "srdct/common.hpp"

namespace srdct {

/// Tally of real additions/subtractions and real multiplications.
struct FlopLedger {
  std::int64_t adds = 0;
  std::int64_t mults = 0;

  std::int64_t total() const { return adds + mults; }

  FlopLedger& operator+=(const FlopLedger& o) {
    adds += o.adds;
    mults += o.mults;
    return *this;
  }
  friend FlopLedger operator+(FlopLedger a, const FlopLedger& b) { return a += b; }
  friend FlopLedger operator-(FlopLedger a, const FlopLedger& b) {
    a.adds -= b.adds;
    a.mults -= b.mults;
    return a;
  }
  friend bool operator==(const FlopLedger&, const FlopLedger&) = default;
  friend std::ostream& operator<<(std::ostream& os, const FlopLedger& l) {
    return os << "{adds=" << l.adds << ", mults=" << l.mults << ", total=" << l.total() << "}";
  }
};

/// Arithmetic context for double-precision execution. Every real add/sub and
/// every multiplication by a constant is charged to the caller's ledger;
/// negation is a free sign flip.
class CountingOps {
 public:
  using value_type = double;

  explicit CountingOps(FlopLedger& ledger) : ledger_(&ledger) {}

  double add(double a, double b) {
    ++ledger_->adds;
    return a + b;
  }
  double sub(double a, double b) {
    ++ledger_->adds;
    return a - b;
  }
  double mul(double a, double constant) {
    ++ledger_->mults;
    return a * constant;
  }
  double neg(double a) { return -a; }
  double zero() { return 0.0; }

  FlopLedger& ledger() { return *ledger_; }

 private:
  FlopLedger* ledger_;
};

// Closed-form counts. All are evaluated in integer arithmetic after clearing
// the rational denominators; the division at the end must be exact.
namespace formula {

namespace detail {

inline int checked_log2(std::size_t n) {
  if (!is_power_of_two(n) || n <= 1 || n > (std::size_t{1} << 40)) {
    throw std::invalid_argument("flop formula: N must be a power of two > 1, got " +
                                std::to_string(n));
  }
  return log2_exact(n);
}

inline std::int64_t exact_div(std::int64_t num, std::int64_t den) {
  if (num % den != 0) throw std::logic_error("flop formula: non-integral result");
  return num / den;
}

}  // namespace detail

/// Real-input DCT-II via classic split radix: 2N lg N - N + 2.
inline std::int64_t classic_dct2(std::size_t n) {
  const std::int64_t m = detail::checked_log2(n), N = static_cast<std::int64_t>(n);
  return 2 * N * m - N + 2;
}

/// Complex split radix: 4N lg N - 6N + 8.
inline std::int64_t splitradix_complex(std::size_t n) {
  const std::int64_t m = detail::checked_log2(n), N = static_cast<std::int64_t>(n);
  return 4 * N * m - 6 * N + 8;
}

/// Real-input split radix: 2N lg N - 4N + 6.
inline std::int64_t splitradix_real(std::size_t n) {
  const std::int64_t m = detail::checked_log2(n), N = static_cast<std::int64_t>(n);
  return 2 * N * m - 4 * N + 6;
}

/// Real multiplications saved by the rescaled complex FFT over split radix.
inline std::int64_t M(std::size_t n) {
  const std::int64_t m = detail::checked_log2(n), N = static_cast<std::int64_t>(n);
  const std::int64_t e = (m % 2 == 0) ? 1 : -1;
  return detail::exact_div(6 * N * m - 38 * N + 54 * m + 6 * e * m - 16 * e, 27);
}

/// Multiplications saved by the complex FFT scaled by 1/s_{N,k}.
inline std::int64_t MS(std::size_t n) {
  const std::int64_t m = detail::checked_log2(n), N = static_cast<std::int64_t>(n);
  const std::int64_t e = (m % 2 == 0) ? 1 : -1;
  return detail::exact_div(6 * N * m - 20 * N + 6 * e * m - 7 * e + 27, 27);
}

/// Unscaled complex DFT with the rescaled split radix.
inline std::int64_t new_fft_complex(std::size_t n) {
  const std::int64_t m = detail::checked_log2(n), N = static_cast<std::int64_t>(n);
  const std::int64_t e = (m % 2 == 0) ? 1 : -1;
  return detail::exact_div(102 * N * m - 124 * N - 54 * m - 6 * e * m + 16 * e + 216, 27);
}

/// New DCT-II count:
/// (17/9)N lg N - (17/27)N - (1/9)(-1)^m m + (7/54)(-1)^m + 3/2.
inline std::int64_t new_dct2(std::size_t n) {
  const std::int64_t m = detail::checked_log2(n), N = static_cast<std::int64_t>(n);
  const std::int64_t e = (m % 2 == 0) ? 1 : -1;
  return detail::exact_div(102 * N * m - 34 * N - 6 * e * m + 7 * e + 81, 54);
}

}  // namespace formula
}  // namespace srdct
