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

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "srdct/common.hpp"
#include "srdct/fft_real.hpp"
#include "srdct/flops.hpp"
#include "srdct/scale_factors.hpp"

namespace srdct {

/// Even-indexed samples followed by the odd-indexed samples in reverse:
/// y_n = x_{2n} for n < N/2 and y_n = x_{2N-1-2n} otherwise.
template <class T>
std::vector<T> reorder_even_odd(std::span<const T> x) {
  const std::size_t n = x.size();
  if (n % 2 != 0) throw std::invalid_argument("reorder_even_odd: odd length");
  std::vector<T> y(n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    y[i] = x[2 * i];
    y[n - 1 - i] = x[2 * i + 1];
  }
  return y;
}

inline RealSignal reorder_even_odd(std::span<const double> x) {
  return reorder_even_odd<double>(x);
}

/// Inverse of reorder_even_odd.
template <class T>
std::vector<T> deinterleave_even_odd(std::span<const T> y) {
  const std::size_t n = y.size();
  if (n % 2 != 0) throw std::invalid_argument("deinterleave_even_odd: odd length");
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n / 2; ++i) {
    x[2 * i] = y[i];
    x[2 * i + 1] = y[n - 1 - i];
  }
  return x;
}

enum class DctAlgorithm { Classic, New };

/// Output-stage constants of a DCT-II of size n built on a half spectrum Z:
/// C_0 = c0 Z_0, C_{n/2} = c_half Z_{n/2}, and (C_k, C_{n-k}) from Z_k times
/// twiddle[k]. The normalization is folded into every constant.
struct DctOutputStage {
  double c0 = 2.0;
  double c_half = kSqrt2;
  bool c0_unit = false;  // UnitaryTimesSqrtN: C_0 = Z_0 and C_{n/2} = Z_{n/2}
  std::vector<Complex> twiddle;

  DctOutputStage(const ScaleTables& tables, std::size_t n, Normalization norm, DctAlgorithm algo) {
    const auto& base = algo == DctAlgorithm::New ? tables.twiddle_dct() : tables.twiddle_dct_classic();
    const long double dn = static_cast<long double>(n);
    long double f = 1.0L;
    switch (norm) {
      case Normalization::TwoSided:
        break;
      case Normalization::Unitary:
        f = 1.0L / std::sqrt(2.0L * dn);
        c0 = static_cast<double>(1.0L / std::sqrt(dn));
        c_half = c0;
        break;
      case Normalization::UnitaryTimesSqrtN:
        f = 1.0L / std::sqrt(2.0L);
        c0 = c_half = 1.0;
        c0_unit = true;
        break;
    }
    twiddle.resize(n / 2);
    for (std::size_t k = 1; k < n / 2; ++k) {
      twiddle[k] = {static_cast<double>(base[k].real() * f),
                    static_cast<double>(base[k].imag() * f)};
    }
  }
};

namespace kernels {

template <class Ops, class T = typename Ops::value_type>
std::vector<T> dct2(Ops& ops, std::span<const T> x, Normalization norm, const ScaleTables& tables,
                    DctAlgorithm algo) {
  const std::size_t n = x.size();
  require_power_of_two(n, "dct2", 2);
  check_tables(tables, n, "dct2");
  const auto y = reorder_even_odd<T>(x);
  const auto z = algo == DctAlgorithm::New
                     ? RealSplitRadix<Ops>(ops, tables, std::span<const T>(y)).scaled(1)
                     : RealSplitRadix<Ops>(ops, tables, std::span<const T>(y)).conjpair();
  const DctOutputStage stage(tables, n, norm, algo);

  std::vector<T> c(n);
  c[0] = stage.c0_unit ? z[0].re : ops.mul(z[0].re, stage.c0);
  c[n / 2] = stage.c0_unit ? z[n / 2].re : ops.mul(z[n / 2].re, stage.c_half);
  for (std::size_t k = 1; k < n / 2; ++k) {
    const Complex w = stage.twiddle[k];
    c[k] = ops.sub(ops.mul(z[k].re, w.real()), ops.mul(z[k].im, w.imag()));
    c[n - k] = ops.sub(ops.mul(z[k].re, -w.imag()), ops.mul(z[k].im, w.real()));
  }
  return c;
}

/// Values C_k / (2 s_{4N,k}) of the two-sided DCT-II.
template <class Ops, class T = typename Ops::value_type>
std::vector<T> dct2_scaled(Ops& ops, std::span<const T> x, const ScaleTables& tables) {
  const std::size_t n = x.size();
  require_power_of_two(n, "dct2_scaled", 2);
  check_tables(tables, n, "dct2_scaled");
  const auto y = reorder_even_odd<T>(x);
  const auto z = RealSplitRadix<Ops>(ops, tables, std::span<const T>(y)).scaled(1);
  std::vector<T> v(n);
  v[0] = z[0].re;
  v[n / 2] = z[n / 2].re;
  for (std::size_t k = 1; k < n / 2; ++k) {
    const TFactor t = tables.dct_t()[k];
    if (t.unit_real) {
      v[k] = ops.add(z[k].re, ops.mul(z[k].im, t.tau));
      v[n - k] = ops.sub(ops.mul(z[k].re, t.tau), z[k].im);
    } else {
      v[k] = ops.add(ops.mul(z[k].re, t.tau), z[k].im);
      v[n - k] = ops.sub(z[k].re, ops.mul(z[k].im, t.tau));
    }
  }
  return v;
}

}  // namespace kernels

/// DCT-II on the classic real-input split radix: 2N lg N - N + 2 flops
/// (two fewer for UnitaryTimesSqrtN).
inline RealSignal dct2_classic(std::span<const double> x, Normalization norm,
                               const ScaleTables& tables, FlopLedger& ledger) {
  CountingOps ops(ledger);
  return kernels::dct2(ops, x, norm, tables, DctAlgorithm::Classic);
}

inline RealSignal dct2_classic(std::span<const double> x, Normalization norm, FlopLedger& ledger) {
  require_power_of_two(x.size(), "dct2_classic", 2);
  return dct2_classic(x, norm, ScaleTables(x.size()), ledger);
}

/// DCT-II on the rescaled real-input FFT.
inline RealSignal dct2_new(std::span<const double> x, Normalization norm,
                           const ScaleTables& tables, FlopLedger& ledger) {
  CountingOps ops(ledger);
  return kernels::dct2(ops, x, norm, tables, DctAlgorithm::New);
}

struct ScaledDctOutput {
  RealSignal values;
  RealSignal scales;  // values[k] * scales[k] is the two-sided C_k
};

/// Scaled-output DCT-II: N fewer multiplications than dct2_new.
inline ScaledDctOutput dct2_scaled(std::span<const double> x, const ScaleTables& tables,
                                   FlopLedger& ledger) {
  CountingOps ops(ledger);
  ScaledDctOutput out;
  out.values = kernels::dct2_scaled(ops, x, tables);
  const std::size_t n = x.size();
  out.scales.resize(n);
  for (std::size_t k = 0; k < n; ++k) out.scales[k] = 2.0 * tables.scale(4 * n, k);
  return out;
}

}  // namespace srdct
