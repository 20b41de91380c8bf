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
#include <vector>

#include "srdct/common.hpp"
#include "srdct/complex_ops.hpp"
#include "srdct/fft_complex.hpp"
#include "srdct/flops.hpp"
#include "srdct/scale_factors.hpp"

namespace srdct {

namespace kernels {

/// Real-input conjugate-pair split radix producing the half spectrum
/// k = 0..n/2. Bins 0 and n/2 are purely real; their imaginary slots hold
/// ops.zero() and are never used in arithmetic.
template <class Ops>
class RealSplitRadix {
 public:
  using T = typename Ops::value_type;
  using C = Cplx<T>;

  RealSplitRadix(Ops& ops, const ScaleTables& tables, std::span<const T> in)
      : ops_(ops), tables_(tables), in_(in), mask_(in.size() - 1) {}

  std::vector<C> conjpair() { return run(kClassic); }

  /// DFT / s_{ell N, k} for ell in {0, 1, 2, 4}.
  std::vector<C> scaled(int ell) { return run(ell); }

 private:
  static constexpr int kClassic = -1;

  static std::size_t bins(std::size_t n) { return n / 2 + 1; }

  std::vector<C> run(int variant) {
    const std::size_t n = in_.size();
    std::vector<C> out(bins(n));
    scratch_.assign(2 * n + 16, C{});
    transform(variant, 0, 1, n, out.data(), scratch_.data());
    return out;
  }

  T at(std::size_t start, std::size_t stride, std::size_t n) const {
    return in_[(start + n * stride) & mask_];
  }

  static int child_variant(int variant) {
    switch (variant) {
      case kClassic: return kClassic;
      case 0: return 0;
      case 2: return 4;
      default: return 2;  // 1 and 4
    }
  }

  void transform(int variant, std::size_t start, std::size_t stride, std::size_t n, C* out,
                 C* scratch) {
    const T zero = ops_.zero();
    if (n == 1) {
      out[0] = {at(start, stride, 0), zero};
      return;
    }
    if (n == 2) {
      const T a = at(start, stride, 0), b = at(start, stride, 1);
      out[0] = {ops_.add(a, b), zero};
      T d = ops_.sub(a, b);
      if (variant == 4) d = ops_.mul(d, kSqrt2);  // s_{8,1} = 1/sqrt(2)
      out[1] = {d, zero};
      return;
    }

    const std::size_t q = n / 4, e = n / 8;
    C* u = scratch;
    C* z = u + q + 1;
    C* zp = z + e + 1;
    C* child = zp + e + 1;
    const int sub = (variant == kClassic) ? kClassic : 1;
    transform(child_variant(variant), start, 2 * stride, n / 2, u, child);
    transform(sub, start + stride, 4 * stride, q, z, child);
    transform(sub, start - stride, 4 * stride, q, zp, child);

    const auto& lev = tables_.level(n);

    // k = 0: Z_0, Z'_0, U_0 and U_{n/4} are real.
    {
      const T sum = ops_.add(z[0].re, zp[0].re);
      T diff = ops_.sub(z[0].re, zp[0].re);
      if (variant == 2) diff = ops_.mul(diff, lev.ratio2_diff[0]);
      if (variant == 4) {
        out[0] = {ops_.add(u[0].re, sum), zero};
        out[2 * q] = {ops_.mul(ops_.sub(u[0].re, sum), lev.ratio4[1][0]), zero};
        out[q] = {ops_.mul(u[q].re, lev.ratio4[2][0]), ops_.mul(diff, -lev.ratio4[2][0])};
      } else {
        out[0] = {ops_.add(u[0].re, sum), zero};
        out[2 * q] = {ops_.sub(u[0].re, sum), zero};
        out[q] = {u[q].re, ops_.neg(diff)};
      }
    }

    // k = n/8: Z_{n/8} and Z'_{n/8} are real and the twiddle is (1 - i)
    // up to a real factor.
    if (e > 0) {
      T p = ops_.add(z[e].re, zp[e].re);
      T m = ops_.sub(z[e].re, zp[e].re);
      // Both ratios coincide at k = n/8 (mirror symmetry of s), so one
      // real factor scales p and m.
      if (variant == kClassic || variant == 0 || variant == 2) {
        const double r = variant == kClassic ? kInvSqrt2
                         : variant == 0      ? lev.s[e]
                                             : lev.ratio2_sum[e];
        p = ops_.mul(p, r);
        m = ops_.mul(m, r);
      }
      // sum = p - i m, diff = m - i p
      const C v = u[e];
      C lo{ops_.add(v.re, p), ops_.sub(v.im, m)};
      C hi{ops_.sub(v.re, p), ops_.neg(ops_.add(v.im, m))};
      if (variant == 4) {
        lo = cx::scale(ops_, lo, lev.ratio4[0][e]);
        hi = cx::scale(ops_, hi, lev.ratio4[2][e]);
      }
      out[e] = lo;
      out[3 * e] = hi;
    }

    for (std::size_t k = 1; k < e; ++k) {
      C a, b;
      if (variant == kClassic) {
        a = cx::mul(ops_, z[k], lev.omega[k]);
        b = cx::mul_conj(ops_, zp[k], lev.omega[k]);
      } else {
        a = cx::mul(ops_, z[k], lev.t[k]);
        b = cx::mul_conj(ops_, zp[k], lev.t[k]);
      }
      C sum = cx::add(ops_, a, b);
      C diff = cx::sub(ops_, a, b);
      if (variant == 0) {
        sum = cx::scale(ops_, sum, lev.s[k]);
        diff = cx::scale(ops_, diff, lev.s[k]);
      } else if (variant == 2) {
        sum = cx::scale(ops_, sum, lev.ratio2_sum[k]);
        diff = cx::scale(ops_, diff, lev.ratio2_diff[k]);
      }
      const C uk = u[k], v = u[q - k];
      C x0 = cx::add(ops_, uk, sum);                                      // X_k
      C x1{ops_.sub(uk.re, sum.re), ops_.sub(sum.im, uk.im)};             // X_{n/2-k}
      C x2{ops_.add(v.re, diff.im), ops_.neg(ops_.add(v.im, diff.re))};   // X_{n/4+k}
      C x3{ops_.sub(v.re, diff.im), ops_.sub(v.im, diff.re)};             // X_{n/4-k}
      if (variant == 4) {
        x0 = cx::scale(ops_, x0, lev.ratio4[0][k]);
        x1 = cx::scale(ops_, x1, lev.ratio4[1][k]);
        x2 = cx::scale(ops_, x2, lev.ratio4[2][k]);
        x3 = cx::scale(ops_, x3, lev.ratio4[3][k]);
      }
      out[k] = x0;
      out[2 * q - k] = x1;
      out[q + k] = x2;
      out[q - k] = x3;
    }
  }

  Ops& ops_;
  const ScaleTables& tables_;
  std::span<const T> in_;
  std::size_t mask_;
  std::vector<C> scratch_;
};

template <class Ops, class T = typename Ops::value_type>
std::vector<Cplx<T>> rfft_conjpair(Ops& ops, std::span<const T> x, const ScaleTables& tables) {
  require_power_of_two(x.size(), "rfft_conjpair");
  check_tables(tables, x.size(), "rfft_conjpair");
  return RealSplitRadix<Ops>(ops, tables, x).conjpair();
}

template <class Ops, class T = typename Ops::value_type>
std::vector<Cplx<T>> rfft_scaled(Ops& ops, std::span<const T> x, int ell,
                                 const ScaleTables& tables) {
  require_power_of_two(x.size(), "rfft_scaled");
  check_tables(tables, x.size(), "rfft_scaled");
  if (ell != 4) check_ell(ell, "rfft_scaled");
  return RealSplitRadix<Ops>(ops, tables, x).scaled(ell);
}

}  // namespace kernels

namespace detail {

inline HalfSpectrum to_half_spectrum(const std::vector<Cplx<double>>& v) {
  HalfSpectrum h(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) h[i] = {v[i].re, v[i].im};
  return h;
}

}  // namespace detail

/// Half spectrum of a real signal by conjugate-pair split radix.
/// Costs 2N lg N - 4N + 6 flops for N > 1.
inline HalfSpectrum rfft_conjpair(std::span<const double> x, const ScaleTables& tables,
                                  FlopLedger& ledger) {
  CountingOps ops(ledger);
  return detail::to_half_spectrum(kernels::rfft_conjpair(ops, x, tables));
}

inline HalfSpectrum rfft_conjpair(std::span<const double> x, FlopLedger& ledger) {
  require_power_of_two(x.size(), "rfft_conjpair");
  return rfft_conjpair(x, ScaleTables(x.size()), ledger);
}

/// Half spectrum divided by s_{ell N, k}, ell in {0, 1, 2}.
inline HalfSpectrum rfft_scaled(std::span<const double> x, int ell, const ScaleTables& tables,
                                FlopLedger& ledger) {
  kernels::check_ell(ell, "rfft_scaled");
  CountingOps ops(ledger);
  return detail::to_half_spectrum(kernels::rfft_scaled(ops, x, ell, tables));
}

/// Half spectrum divided by s_{4N, k}.
inline HalfSpectrum rfft_scaled4(std::span<const double> x, const ScaleTables& tables,
                                 FlopLedger& ledger) {
  CountingOps ops(ledger);
  return detail::to_half_spectrum(kernels::rfft_scaled(ops, x, 4, tables));
}

/// Full spectrum from a half spectrum via X_{N-k} = conj(X_k).
inline ComplexSignal expand_half_spectrum(const HalfSpectrum& h, std::size_t n) {
  ComplexSignal x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = (k <= n / 2) ? h[k] : std::conj(h[n - k]);
  return x;
}

}  // namespace srdct
