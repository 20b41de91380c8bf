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

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "srdct/common.hpp"
#include "srdct/complex_ops.hpp"
#include "srdct/flops.hpp"
#include "srdct/scale_factors.hpp"

namespace srdct {

namespace kernels {

/// Decimation-in-time conjugate-pair split radix over a strided, cyclic view of
/// the input: element n of a sub-transform is in[(start + n*stride) mod N].
/// Outputs are assembled in place: U lands in [0, n/2), Z in [n/2, 3n/4) and
/// Z' in [3n/4, n), and each butterfly reads and writes the same four slots.
template <class Ops>
class ComplexSplitRadix {
 public:
  using T = typename Ops::value_type;
  using C = Cplx<T>;

  ComplexSplitRadix(Ops& ops, const ScaleTables& tables, std::span<const C> in)
      : ops_(ops), tables_(tables), in_(in), mask_(in.size() - 1) {}

  std::vector<C> conjpair() {
    std::vector<C> out(in_.size());
    conjpair(0, 1, in_.size(), out.data());
    return out;
  }

  /// DFT / s_{ell N, k} for ell in {0, 1, 2, 4}.
  std::vector<C> scaled(int ell) {
    std::vector<C> out(in_.size());
    scaled(ell, 0, 1, in_.size(), out.data());
    return out;
  }

 private:
  const C& at(std::size_t start, std::size_t stride, std::size_t n) const {
    return in_[(start + n * stride) & mask_];
  }

  void conjpair(std::size_t start, std::size_t stride, std::size_t n, C* out) {
    if (n == 1) {
      out[0] = at(start, stride, 0);
      return;
    }
    if (n == 2) {
      const C& a = at(start, stride, 0);
      const C& b = at(start, stride, 1);
      out[0] = cx::add(ops_, a, b);
      out[1] = cx::sub(ops_, a, b);
      return;
    }
    const std::size_t q = n / 4;
    conjpair(start, 2 * stride, n / 2, out);
    conjpair(start + stride, 4 * stride, q, out + n / 2);
    conjpair(start - stride, 4 * stride, q, out + 3 * q);

    const auto& lev = tables_.level(n);
    for (std::size_t k = 0; k < q; ++k) {
      C a = out[2 * q + k], b = out[3 * q + k];
      if (8 * k == n) {
        // omega = (1 - i)/sqrt(2)
        a = {ops_.mul(ops_.add(a.re, a.im), kInvSqrt2), ops_.mul(ops_.sub(a.im, a.re), kInvSqrt2)};
        b = {ops_.mul(ops_.sub(b.re, b.im), kInvSqrt2), ops_.mul(ops_.add(b.im, b.re), kInvSqrt2)};
      } else if (k != 0) {
        a = cx::mul(ops_, a, lev.omega[k]);
        b = cx::mul_conj(ops_, b, lev.omega[k]);
      }
      butterfly(out, k, q, cx::add(ops_, a, b), cx::sub(ops_, a, b));
    }
  }

  void scaled(int ell, std::size_t start, std::size_t stride, std::size_t n, C* out) {
    if (n == 1) {
      out[0] = at(start, stride, 0);
      return;
    }
    if (n == 2) {
      const C& a = at(start, stride, 0);
      const C& b = at(start, stride, 1);
      out[0] = cx::add(ops_, a, b);
      out[1] = cx::sub(ops_, a, b);
      if (ell == 4) out[1] = cx::scale(ops_, out[1], kSqrt2);  // s_{8,1} = 1/sqrt(2)
      return;
    }
    const std::size_t q = n / 4;
    const int ell_u = (ell == 0) ? 0 : (ell == 1 || ell == 4) ? 2 : 4;
    scaled(ell_u, start, 2 * stride, n / 2, out);
    scaled(1, start + stride, 4 * stride, q, out + n / 2);
    scaled(1, start - stride, 4 * stride, q, out + 3 * q);

    const auto& lev = tables_.level(n);
    for (std::size_t k = 0; k < q; ++k) {
      C a = out[2 * q + k], b = out[3 * q + k];
      if (8 * k == n) {
        // t_{n,n/8} = 1 - i
        a = {ops_.add(a.re, a.im), ops_.sub(a.im, a.re)};
        b = {ops_.sub(b.re, b.im), ops_.add(b.im, b.re)};
      } else if (k != 0) {
        a = cx::mul(ops_, a, lev.t[k]);
        b = cx::mul_conj(ops_, b, lev.t[k]);
      }
      C sum = cx::add(ops_, a, b);
      C diff = cx::sub(ops_, a, b);
      switch (ell) {
        case 0:
          if (k != 0) {
            sum = cx::scale(ops_, sum, lev.s[k]);
            diff = cx::scale(ops_, diff, lev.s[k]);
          }
          break;
        case 2:
          if (k != 0) sum = cx::scale(ops_, sum, lev.ratio2_sum[k]);
          diff = cx::scale(ops_, diff, lev.ratio2_diff[k]);
          break;
        default:
          break;
      }
      if (ell != 4) {
        butterfly(out, k, q, sum, diff);
        continue;
      }
      const C u = out[k], v = out[q + k];
      C y0 = cx::add(ops_, u, sum);
      C y1 = cx::sub(ops_, u, sum);
      C y2 = cx::sub_i(ops_, v, diff);
      C y3 = cx::add_i(ops_, v, diff);
      if (k != 0) y0 = cx::scale(ops_, y0, lev.ratio4[0][k]);
      out[k] = y0;
      out[k + 2 * q] = cx::scale(ops_, y1, lev.ratio4[1][k]);
      out[k + q] = cx::scale(ops_, y2, lev.ratio4[2][k]);
      out[k + 3 * q] = cx::scale(ops_, y3, lev.ratio4[3][k]);
    }
  }

  void butterfly(C* out, std::size_t k, std::size_t q, const C& sum, const C& diff) {
    const C u = out[k], v = out[q + k];
    out[k] = cx::add(ops_, u, sum);
    out[k + 2 * q] = cx::sub(ops_, u, sum);
    out[k + q] = cx::sub_i(ops_, v, diff);
    out[k + 3 * q] = cx::add_i(ops_, v, diff);
  }

  Ops& ops_;
  const ScaleTables& tables_;
  std::span<const C> in_;
  std::size_t mask_;
};

inline void check_tables(const ScaleTables& tables, std::size_t n, const char* what) {
  if (tables.size() < n) {
    throw std::invalid_argument(std::string(what) + ": tables built for size " +
                                std::to_string(tables.size()) + " < " + std::to_string(n));
  }
}

inline void check_ell(int ell, const char* what) {
  if (ell != 0 && ell != 1 && ell != 2) {
    throw std::invalid_argument(std::string(what) + ": scale level must be 0, 1 or 2, got " +
                                std::to_string(ell));
  }
}

template <class Ops, class T = typename Ops::value_type>
std::vector<Cplx<T>> fft_conjpair(Ops& ops, std::span<const Cplx<T>> x, const ScaleTables& tables) {
  require_power_of_two(x.size(), "fft_conjpair");
  check_tables(tables, x.size(), "fft_conjpair");
  return ComplexSplitRadix<Ops>(ops, tables, x).conjpair();
}

template <class Ops, class T = typename Ops::value_type>
std::vector<Cplx<T>> fft_scaled(Ops& ops, std::span<const Cplx<T>> x, int ell,
                                const ScaleTables& tables) {
  require_power_of_two(x.size(), "fft_scaled");
  check_tables(tables, x.size(), "fft_scaled");
  if (ell != 4) check_ell(ell, "fft_scaled");
  return ComplexSplitRadix<Ops>(ops, tables, x).scaled(ell);
}

}  // namespace kernels

namespace detail {

inline std::vector<Cplx<double>> to_cplx(std::span<const Complex> x) {
  std::vector<Cplx<double>> v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = {x[i].real(), x[i].imag()};
  return v;
}

inline ComplexSignal from_cplx(const std::vector<Cplx<double>>& v) {
  ComplexSignal x(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) x[i] = {v[i].re, v[i].im};
  return x;
}

}  // namespace detail

/// Unnormalized DFT by the standard conjugate-pair split radix.
/// Costs 4N lg N - 6N + 8 flops for N > 1.
inline ComplexSignal fft_conjpair(std::span<const Complex> x, const ScaleTables& tables,
                                  FlopLedger& ledger) {
  CountingOps ops(ledger);
  const auto in = detail::to_cplx(x);
  return detail::from_cplx(kernels::fft_conjpair(ops, std::span<const Cplx<double>>(in), tables));
}

inline ComplexSignal fft_conjpair(std::span<const Complex> x, FlopLedger& ledger) {
  require_power_of_two(x.size(), "fft_conjpair");
  return fft_conjpair(x, ScaleTables(x.size()), ledger);
}

/// DFT divided by s_{ell N, k} for ell in {0, 1, 2}; ell = 0 is the plain DFT.
inline ComplexSignal fft_scaled(std::span<const Complex> x, int ell, const ScaleTables& tables,
                                FlopLedger& ledger) {
  kernels::check_ell(ell, "fft_scaled");
  CountingOps ops(ledger);
  const auto in = detail::to_cplx(x);
  return detail::from_cplx(
      kernels::fft_scaled(ops, std::span<const Cplx<double>>(in), ell, tables));
}

/// DFT divided by s_{4N, k}.
inline ComplexSignal fft_scaled4(std::span<const Complex> x, const ScaleTables& tables,
                                 FlopLedger& ledger) {
  CountingOps ops(ledger);
  const auto in = detail::to_cplx(x);
  return detail::from_cplx(kernels::fft_scaled(ops, std::span<const Cplx<double>>(in), 4, tables));
}

}  // namespace srdct
