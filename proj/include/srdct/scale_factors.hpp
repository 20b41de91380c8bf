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

#include <array>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "srdct/common.hpp"

namespace srdct {

namespace detail {

using wide = long double;

/// cos and sin of 2*pi*num/den, with the argument reduced to [0, pi/4] before
/// calling the library trig functions.
inline std::pair<wide, wide> cos_sin_turn(std::size_t num, std::size_t den) {
  num %= den;
  const std::size_t quadrant = (4 * num) / den;
  const std::size_t rem = 4 * num - quadrant * den;  // angle in quadrant = (pi/2) rem/den
  constexpr wide half_pi = std::numbers::pi_v<wide> / 2;
  wide c, s;
  if (2 * rem <= den) {
    const wide a = half_pi * static_cast<wide>(rem) / static_cast<wide>(den);
    c = std::cos(a);
    s = std::sin(a);
  } else {
    const wide a = half_pi * static_cast<wide>(den - rem) / static_cast<wide>(den);
    c = std::sin(a);
    s = std::cos(a);
  }
  switch (quadrant) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

/// omega_M^j = exp(-2 pi i j / M).
inline std::complex<wide> root_of_unity(std::size_t j, std::size_t m) {
  const auto [c, s] = cos_sin_turn(j, m);
  return {c, -s};
}

/// s_{M,k} for every k < M, for M = 1, 2, 4, ..., max_m.
inline std::vector<std::vector<wide>> scale_levels(std::size_t max_m) {
  std::vector<std::vector<wide>> lv;
  for (std::size_t m = 1; m <= max_m; m *= 2) {
    std::vector<wide> s(m, 1.0L);
    if (m > 4) {
      const auto& quarter = lv[log2_exact(m / 4)];
      for (std::size_t k = 0; k < m; ++k) {
        const std::size_t k4 = k % (m / 4);
        const auto [c, sn] = cos_sin_turn(k4, m);
        s[k] = quarter[k4] * (k4 <= m / 8 ? c : sn);
      }
    }
    lv.push_back(std::move(s));
  }
  return lv;
}

inline void check_scale_args(std::size_t n, std::size_t k, const char* what) {
  require_power_of_two(n, what);
  if (k >= n) {
    throw std::invalid_argument(std::string(what) + ": index " + std::to_string(k) +
                                " out of range for N = " + std::to_string(n));
  }
}

}  // namespace detail

/// Recursive scale factor s_{N,k}: 1 for N <= 4, otherwise
/// s_{N/4,k4} * cos(2 pi k4 / N) when k4 = k mod N/4 is at most N/8 and
/// s_{N/4,k4} * sin(2 pi k4 / N) beyond that.
inline double scale(std::size_t n, std::size_t k) {
  detail::check_scale_args(n, k, "scale");
  detail::wide s = 1.0L;
  while (n > 4) {
    const std::size_t k4 = k % (n / 4);
    const auto [c, sn] = detail::cos_sin_turn(k4, n);
    s *= (k4 <= n / 8 ? c : sn);
    n /= 4;
    k = k4;
  }
  return static_cast<double>(s);
}

/// t_{N,k} = omega_N^k s_{N/4,k} / s_{N,k} for 0 <= k < N/4. Always of the
/// form 1 - i tan(2 pi k/N) (k <= N/8) or cot(2 pi k/N) - i.
inline Complex t_factor(std::size_t n, std::size_t k) {
  require_power_of_two(n, "t_factor", 4);
  if (k >= n / 4) {
    throw std::invalid_argument("t_factor: index " + std::to_string(k) +
                                " out of range for N = " + std::to_string(n));
  }
  const auto [c, s] = detail::cos_sin_turn(k, n);
  if (k <= n / 8) return {1.0, -static_cast<double>(s / c)};
  return {static_cast<double>(c / s), -1.0};
}

/// A t-factor in its two-parameter form. `unit_real` selects 1 - i*tau,
/// otherwise the factor is tau - i.
struct TFactor {
  double tau = 0.0;
  bool unit_real = true;

  Complex value() const { return unit_real ? Complex{1.0, -tau} : Complex{tau, -1.0}; }
};

class ScaleTables;
namespace testing {
ScaleTables with_corrupted_dct_twiddle(ScaleTables tables, std::size_t k, double delta);
}

/// Precomputed constants for every recursion level of size-N transforms.
/// Immutable after construction.
class ScaleTables {
 public:
  /// Per-size constants for a sub-transform of length n (all entries k < n/4).
  struct Level {
    std::size_t n = 0;
    std::vector<Complex> omega;       // omega_n^k
    std::vector<TFactor> t;           // t_{n,k}
    std::vector<double> s;            // s_{n,k}, the l = 0 output ratio
    std::vector<double> ratio2_sum;   // s_{n,k} / s_{2n,k}
    std::vector<double> ratio2_diff;  // s_{n,k} / s_{2n,k+n/4}
    // s_{n,k} / s_{4n, k + {0, n/2, n/4, 3n/4}}
    std::array<std::vector<double>, 4> ratio4;
  };

  ScaleTables() = default;

  explicit ScaleTables(std::size_t n) : size_(n) {
    require_power_of_two(n, "build_tables");
    using detail::wide;
    const auto lv = detail::scale_levels(4 * n);
    for (const auto& l : lv) {
      s_.emplace_back(l.begin(), l.end());
    }
    auto s = [&lv](std::size_t m, std::size_t k) { return lv[log2_exact(m)][k % m]; };

    for (std::size_t m = 1; m <= n; m *= 2) {
      Level L;
      L.n = m;
      const std::size_t q = m / 4;
      for (std::size_t k = 0; k < q; ++k) {
        const auto w = detail::root_of_unity(k, m);
        L.omega.emplace_back(static_cast<double>(w.real()), static_cast<double>(w.imag()));
        const auto [c, sn] = detail::cos_sin_turn(k, m);
        if (k <= m / 8) {
          L.t.push_back({static_cast<double>(sn / c), true});
        } else {
          L.t.push_back({static_cast<double>(c / sn), false});
        }
        const wide snk = s(m, k);
        L.s.push_back(static_cast<double>(snk));
        L.ratio2_sum.push_back(static_cast<double>(snk / s(2 * m, k)));
        L.ratio2_diff.push_back(static_cast<double>(snk / s(2 * m, k + q)));
        L.ratio4[0].push_back(static_cast<double>(snk / s(4 * m, k)));
        L.ratio4[1].push_back(static_cast<double>(snk / s(4 * m, k + m / 2)));
        L.ratio4[2].push_back(static_cast<double>(snk / s(4 * m, k + q)));
        L.ratio4[3].push_back(static_cast<double>(snk / s(4 * m, k + 3 * q)));
      }
      levels_.push_back(std::move(L));
    }

    // DCT output stage over the length-4N embedding, k < N/2.
    for (std::size_t k = 0; k < std::max<std::size_t>(n / 2, 1); ++k) {
      const auto w = detail::root_of_unity(k, 4 * n);
      const wide snk = s(n, k);
      twiddle_dct_.emplace_back(static_cast<double>(2 * w.real() * snk),
                                static_cast<double>(2 * w.imag() * snk));
      twiddle_dct_classic_.emplace_back(static_cast<double>(2 * w.real()),
                                        static_cast<double>(2 * w.imag()));
      const auto [c, sn] = detail::cos_sin_turn(k, 4 * n);
      if (k <= 4 * n / 8) {
        dct_t_.push_back({static_cast<double>(sn / c), true});
      } else {
        dct_t_.push_back({static_cast<double>(c / sn), false});
      }
    }
  }

  std::size_t size() const { return size_; }

  /// s_{M,k} for power-of-two M <= 4 size().
  double scale(std::size_t m, std::size_t k) const {
    if (!is_power_of_two(m) || m > 4 * size_) {
      throw std::invalid_argument("ScaleTables::scale: size " + std::to_string(m) +
                                  " not tabulated");
    }
    return s_[log2_exact(m)][k % m];
  }

  const Level& level(std::size_t m) const {
    if (!is_power_of_two(m) || m > size_) {
      throw std::invalid_argument("ScaleTables::level: size " + std::to_string(m) +
                                  " not tabulated");
    }
    return levels_[log2_exact(m)];
  }

  /// 2 omega_{4N}^k s_{N,k} for k < N/2.
  const std::vector<Complex>& twiddle_dct() const { return twiddle_dct_; }
  /// 2 omega_{4N}^k for k < N/2.
  const std::vector<Complex>& twiddle_dct_classic() const { return twiddle_dct_classic_; }
  /// t_{4N,k} for k < N/2.
  const std::vector<TFactor>& dct_t() const { return dct_t_; }

 private:
  friend ScaleTables testing::with_corrupted_dct_twiddle(ScaleTables, std::size_t, double);

  std::size_t size_ = 0;
  std::vector<std::vector<double>> s_;
  std::vector<Level> levels_;
  std::vector<Complex> twiddle_dct_;
  std::vector<Complex> twiddle_dct_classic_;
  std::vector<TFactor> dct_t_;
};

inline ScaleTables build_tables(std::size_t n) { return ScaleTables(n); }

namespace testing {

/// Fault-injection hook: perturbs one DCT output-stage constant.
inline ScaleTables with_corrupted_dct_twiddle(ScaleTables tables, std::size_t k, double delta) {
  auto& tw = tables.twiddle_dct_;
  if (k < tw.size()) tw[k] += Complex{delta, 0.0};
  return tables;
}

}  // namespace testing

inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline constexpr double kInvSqrt2 = static_cast<double>(std::numbers::sqrt2_v<long double> / 2);

}  // namespace srdct
