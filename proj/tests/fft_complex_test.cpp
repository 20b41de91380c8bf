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


#include "test_support.hpp"

namespace srdct {
namespace {

using test::pow2_range;
using test::rel_err;

ComplexSignal complex_impulse(std::size_t n) {
  ComplexSignal x(n);
  x[0] = 1.0;
  return x;
}

TEST(FftConjpair, ImpulseGivesOnes) {
  FlopLedger l;
  const auto y = fft_conjpair(complex_impulse(32), l);
  for (const auto& v : y) EXPECT_EQ(v, Complex(1.0, 0.0));
}

TEST(FftConjpair, SizeOneIsIdentity) {
  FlopLedger l;
  const ComplexSignal x = {Complex(2.5, -1.0)};
  EXPECT_EQ(fft_conjpair(x, l), x);
  EXPECT_EQ(l.total(), 0);
}

TEST(FftConjpair, MatchesOracle) {
  for (std::size_t n : pow2_range(2, 512)) {
    const auto x = test::random_complex(n, n);
    FlopLedger l;
    EXPECT_LT(rel_err(fft_conjpair(x, l), naive_dft(x)), 1e-12) << n;
  }
}

TEST(FftConjpair, LedgerAtSixteen) {
  FlopLedger l;
  fft_conjpair(test::random_complex(16, 3), l);
  EXPECT_EQ(l.total(), 168);
}

TEST(FftConjpair, RejectsNonPowerOfTwo) {
  FlopLedger l;
  EXPECT_THROW(fft_conjpair(ComplexSignal(12), l), std::invalid_argument);
}

TEST(FftScaled, LevelZeroMatchesConjpair) {
  for (std::size_t n : pow2_range(2, 1024)) {
    const ScaleTables t(n);
    const auto x = test::random_complex(n, 10 + n);
    FlopLedger a, b;
    EXPECT_LT(rel_err(fft_scaled(x, 0, t, a), fft_conjpair(x, t, b)), 1e-12) << n;
  }
}

TEST(FftScaled, ImpulseAtLevelOne) {
  const ScaleTables t(16);
  FlopLedger l;
  const auto y = fft_scaled(complex_impulse(16), 1, t, l);
  // 1 / s_{16,k}: 1, 1/cos(pi/8), sqrt 2, 1/cos(pi/8) repeating.
  const double r[4] = {1.0, 1.0823922002923939688, 1.4142135623730950488, 1.0823922002923939688};
  for (std::size_t k = 0; k < 16; ++k) {
    EXPECT_NEAR(y[k].real(), r[k % 4], 1e-15) << k;
    EXPECT_NEAR(y[k].imag(), 0.0, 1e-15) << k;
  }
}

TEST(FftScaled, ScalingRelation) {
  for (int ell : {1, 2, 4}) {
    for (std::size_t n : pow2_range(2, 256)) {
      const ScaleTables t(n);
      const auto x = test::random_complex(n, 7 * n + ell);
      FlopLedger a, b;
      auto y = ell == 4 ? fft_scaled4(x, t, a) : fft_scaled(x, ell, t, a);
      for (std::size_t k = 0; k < n; ++k) y[k] *= scale(ell * n, k);
      EXPECT_LT(rel_err(y, fft_conjpair(x, t, b)), 1e-11) << "ell " << ell << " N " << n;
    }
  }
}

TEST(FftScaled4, ImpulseAtFour) {
  const ScaleTables t(4);
  FlopLedger l;
  const auto y = fft_scaled4(complex_impulse(4), t, l);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_NEAR(y[k].real(), 1.0 / scale(16, k), 1e-15);
}

TEST(FftScaled4, MatchesOracleAtThirtyTwo) {
  const ScaleTables t(32);
  const auto x = test::random_complex(32, 99);
  FlopLedger l;
  auto y = fft_scaled4(x, t, l);
  for (std::size_t k = 0; k < 32; ++k) y[k] *= scale(128, k);
  EXPECT_LT(rel_err(y, naive_dft(x)), 1e-12);
}

TEST(FftScaled, ExactLedgers) {
  for (std::size_t n : pow2_range(4, 4096)) {
    const ScaleTables t(n);
    const auto x = test::random_complex(n, n);
    FlopLedger a, b;
    fft_conjpair(x, t, a);
    fft_scaled(x, 0, t, b);
    EXPECT_EQ(a.total(), formula::splitradix_complex(n)) << n;
    EXPECT_EQ(b.total(), formula::new_fft_complex(n)) << n;
  }
}

TEST(FftScaled, LevelOneSavesMSMinusM) {
  const ScaleTables t(64);
  const auto x = test::random_complex(64, 5);
  FlopLedger l0, l1;
  fft_scaled(x, 0, t, l0);
  fft_scaled(x, 1, t, l1);
  EXPECT_EQ(l0.total(), 1152);
  EXPECT_EQ(l0.mults - l1.mults, 32);
  EXPECT_EQ(l0.adds, l1.adds);
}

TEST(FftScaled, RejectsBadLevel) {
  const ScaleTables t(8);
  FlopLedger l;
  EXPECT_THROW(fft_scaled(ComplexSignal(8), 3, t, l), std::invalid_argument);
  EXPECT_THROW(fft_scaled(ComplexSignal(16), 0, t, l), std::invalid_argument);
}

TEST(FftProperties, Linearity) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-2, 2);
  for (std::size_t n : pow2_range(2, 256)) {
    const ScaleTables t(n);
    const auto x = test::random_complex(n, 2 * n), y = test::random_complex(n, 2 * n + 1);
    const Complex a(u(rng), u(rng)), b(u(rng), u(rng));
    ComplexSignal z(n);
    for (std::size_t i = 0; i < n; ++i) z[i] = a * x[i] + b * y[i];
    for (int ell : {0, 1, 2}) {
      FlopLedger l;
      const auto fx = fft_scaled(x, ell, t, l), fy = fft_scaled(y, ell, t, l);
      ComplexSignal combo(n);
      for (std::size_t k = 0; k < n; ++k) combo[k] = a * fx[k] + b * fy[k];
      EXPECT_LT(rel_err(fft_scaled(z, ell, t, l), combo), 1e-12) << n << ' ' << ell;
    }
  }
}

TEST(FftProperties, Parseval) {
  for (std::size_t n : pow2_range(2, 4096)) {
    const ScaleTables t(n);
    const auto x = test::random_complex(n, 3 * n);
    double ex = 0;
    for (const auto& v : x) ex += std::norm(v);
    FlopLedger l;
    for (const auto& y : {fft_conjpair(x, t, l), fft_scaled(x, 0, t, l)}) {
      double ey = 0;
      for (const auto& v : y) ey += std::norm(v);
      EXPECT_NEAR(ey, n * ex, 1e-12 * n * ex) << n;
    }
  }
}

}  // namespace
}  // namespace srdct
