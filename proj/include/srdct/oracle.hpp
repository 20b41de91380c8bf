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

// O(N^2) definitional transforms used as ground truth. Sums are accumulated
// with error-free transformations (TwoSum / FMA-based TwoProduct) and every
// twiddle is evaluated from an exactly reduced integer angle index.

#include <cmath>
#include <span>
#include <utility>
#include <vector>

#include "srdct/common.hpp"
#include "srdct/scale_factors.hpp"
#include "srdct/trig_family.hpp"

namespace srdct {

enum class Summation { Plain, Compensated };

struct OracleConfig {
  Summation summation = Summation::Compensated;
  Normalization normalization = Normalization::TwoSided;
};

namespace detail {

/// Dot-product accumulator; in compensated mode the rounding error of every
/// product and every addition is carried in a second word.
class Accumulator {
 public:
  explicit Accumulator(Summation mode) : compensated_(mode == Summation::Compensated) {}

  void add_product(double a, double b) {
    const double p = a * b;
    if (!compensated_) {
      sum_ += p;
      return;
    }
    const double perr = std::fma(a, b, -p);
    const double s = sum_ + p;
    const double bp = s - sum_;
    const double serr = (sum_ - (s - bp)) + (p - bp);
    sum_ = s;
    err_ += perr + serr;
  }

  double value() const { return sum_ + err_; }

 private:
  bool compensated_;
  double sum_ = 0.0;
  double err_ = 0.0;
};

/// cos and sin of 2 pi j / m for j in [0, m).
struct TurnTable {
  std::vector<double> c, s;
  explicit TurnTable(std::size_t m) : c(m), s(m) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto [cj, sj] = cos_sin_turn(j, m);
      c[j] = static_cast<double>(cj);
      s[j] = static_cast<double>(sj);
    }
  }
};

/// Per-index normalization factor relative to the two-sided definition.
/// `edge` is the index whose Kronecker delta enters the unitary form.
inline double unitary_factor(Normalization norm, std::size_t n, bool at_edge) {
  const long double dn = static_cast<long double>(n);
  const long double two_minus_delta = at_edge ? 1.0L : 2.0L;
  switch (norm) {
    case Normalization::TwoSided: return 2.0;
    case Normalization::Unitary: return static_cast<double>(std::sqrt(two_minus_delta / dn));
    case Normalization::UnitaryTimesSqrtN: return static_cast<double>(std::sqrt(two_minus_delta));
  }
  return 2.0;
}

enum class Fn { Cos, Sin };

/// y_k = out_factor(k) * sum_n in_factor(n) x_n trig(2 pi (angle(n,k) mod 4N) / 4N).
template <class Angle, class InF, class OutF>
RealSignal direct_sum(std::span<const double> x, Fn fn, Angle angle, InF in_factor, OutF out_factor,
                      Summation mode) {
  const std::size_t n = x.size();
  const std::size_t m = 4 * n;
  const TurnTable table(m);
  const auto& trig = fn == Fn::Cos ? table.c : table.s;
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = x[i] * in_factor(i);
  RealSignal y(n);
  for (std::size_t k = 0; k < n; ++k) {
    Accumulator acc(mode);
    for (std::size_t i = 0; i < n; ++i) acc.add_product(xs[i], trig[angle(i, k) % m]);
    y[k] = acc.value() * out_factor(k);
  }
  return y;
}

}  // namespace detail

/// X_k = sum_n x_n omega_N^{nk} for any N >= 1.
inline ComplexSignal naive_dft(std::span<const Complex> x,
                               Summation mode = Summation::Compensated) {
  const std::size_t n = x.size();
  if (n == 0) return {};
  const detail::TurnTable table(n);
  ComplexSignal y(n);
  for (std::size_t k = 0; k < n; ++k) {
    detail::Accumulator re(mode), im(mode);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t j = (i * k) % n;
      // (xr + i xi)(c - i s)
      re.add_product(x[i].real(), table.c[j]);
      re.add_product(x[i].imag(), table.s[j]);
      im.add_product(x[i].imag(), table.c[j]);
      im.add_product(-x[i].real(), table.s[j]);
    }
    y[k] = {re.value(), im.value()};
  }
  return y;
}

/// C_k = 2 sum_n x_n cos(pi (n + 1/2) k / N), or a unitary variant.
inline RealSignal naive_dct2(std::span<const double> x, OracleConfig cfg = {}) {
  const std::size_t n = x.size();
  return detail::direct_sum(
      x, detail::Fn::Cos, [](std::size_t i, std::size_t k) { return (2 * i + 1) * k; },
      [](std::size_t) { return 1.0; },
      [&](std::size_t k) { return detail::unitary_factor(cfg.normalization, n, k == 0); },
      cfg.summation);
}

/// C^T_k = 2 sum_n x_n cos(pi n (k + 1/2) / N): the transpose of naive_dct2.
inline RealSignal naive_dct3(std::span<const double> x, OracleConfig cfg = {}) {
  const std::size_t n = x.size();
  return detail::direct_sum(
      x, detail::Fn::Cos, [](std::size_t i, std::size_t k) { return i * (2 * k + 1); },
      [&](std::size_t i) { return detail::unitary_factor(cfg.normalization, n, i == 0); },
      [](std::size_t) { return 1.0; }, cfg.summation);
}

/// Slot j holds S_{j+1} = 2 sum_n x_n sin(pi (n + 1/2)(j + 1) / N).
inline RealSignal naive_dst2(std::span<const double> x, OracleConfig cfg = {}) {
  const std::size_t n = x.size();
  return detail::direct_sum(
      x, detail::Fn::Sin, [](std::size_t i, std::size_t j) { return (2 * i + 1) * (j + 1); },
      [](std::size_t) { return 1.0; },
      [&](std::size_t j) { return detail::unitary_factor(cfg.normalization, n, j + 1 == n); },
      cfg.summation);
}

/// Input slot j holds x_{j+1}; S^T_k = 2 sum_{n=1..N} x_n sin(pi n (k + 1/2) / N).
inline RealSignal naive_dst3(std::span<const double> x, OracleConfig cfg = {}) {
  const std::size_t n = x.size();
  return detail::direct_sum(
      x, detail::Fn::Sin, [](std::size_t j, std::size_t k) { return (j + 1) * (2 * k + 1); },
      [&](std::size_t j) { return detail::unitary_factor(cfg.normalization, n, j + 1 == n); },
      [](std::size_t) { return 1.0; }, cfg.summation);
}

inline RealSignal naive_trig(TrigKind kind, std::span<const double> x, OracleConfig cfg = {}) {
  switch (kind) {
    case TrigKind::DCT2: return naive_dct2(x, cfg);
    case TrigKind::DCT3: return naive_dct3(x, cfg);
    case TrigKind::DST2: return naive_dst2(x, cfg);
    case TrigKind::DST3: return naive_dst3(x, cfg);
  }
  return {};
}

/// Length-4N real-even sequence whose DFT starts with the two-sided DCT-II:
/// zeros at even indices, x_n at 2n+1 and at 4N-(2n+1).
inline ComplexSignal embed_4n(std::span<const double> x) {
  const std::size_t n = x.size();
  ComplexSignal e(4 * n, Complex{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    e[2 * i + 1] = x[i];
    e[4 * n - (2 * i + 1)] = x[i];
  }
  return e;
}

}  // namespace srdct
