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

constexpr Normalization kNorms[] = {Normalization::TwoSided, Normalization::Unitary,
                                    Normalization::UnitaryTimesSqrtN};

TEST(Reorder, EightPointPattern) {
  const RealSignal x = {0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_EQ(reorder_even_odd(x), (RealSignal{0, 2, 4, 6, 7, 5, 3, 1}));
  EXPECT_EQ(reorder_even_odd(RealSignal{3, 4}), (RealSignal{3, 4}));
}

TEST(Reorder, InverseRecoversInput) {
  const auto x = test::random_real(64, 1);
  EXPECT_EQ(deinterleave_even_odd<double>(reorder_even_odd(x)), x);
}

TEST(Dct2Classic, LedgerAtSixteen) {
  FlopLedger l;
  dct2_classic(test::random_real(16, 1), Normalization::TwoSided, l);
  EXPECT_EQ(l.total(), 114);
}

TEST(Dct2Classic, ImpulseAtZero) {
  for (std::size_t n : pow2_range(2, 256)) {
    FlopLedger l;
    const auto y = dct2_classic(test::impulse(n, 0), Normalization::TwoSided, l);
    for (std::size_t k = 0; k < n; ++k) {
      ASSERT_NEAR(y[k], 2 * std::cos(std::numbers::pi * k / (2.0 * n)), 1e-12) << n << ' ' << k;
    }
  }
}

TEST(Dct2, ZeroInputGivesZeros) {
  const ScaleTables t(32);
  FlopLedger l;
  for (auto norm : kNorms) {
    for (double v : dct2_classic(RealSignal(32, 0.0), norm, t, l)) EXPECT_EQ(v, 0.0);
    for (double v : dct2_new(RealSignal(32, 0.0), norm, t, l)) EXPECT_EQ(v, 0.0);
  }
}

TEST(Dct2New, TableLedgers) {
  const std::int64_t want[] = {112, 284, 686, 1614, 3708, 8384, 18698, 41266, 90264};
  int i = 0;
  for (std::size_t n : pow2_range(16, 4096)) {
    const ScaleTables t(n);
    FlopLedger l;
    dct2_new(test::random_real(n, n), Normalization::TwoSided, t, l);
    EXPECT_EQ(l.total(), want[i++]) << n;
  }
}

TEST(Dct2New, LedgerIdentitiesAllNormalizations) {
  for (std::size_t n : pow2_range(2, 4096)) {
    const ScaleTables t(n);
    const auto x = test::random_real(n, n);
    for (auto norm : kNorms) {
      FlopLedger c, w;
      dct2_classic(x, norm, t, c);
      dct2_new(x, norm, t, w);
      const std::int64_t drop = norm == Normalization::UnitaryTimesSqrtN ? 2 : 0;
      EXPECT_EQ(c.total(), formula::classic_dct2(n) - drop) << n;
      EXPECT_EQ(w.total(), formula::new_dct2(n) - drop) << n;
      EXPECT_EQ(c.total() - w.total(), formula::MS(n) / 2) << n;
    }
  }
}

TEST(Dct2New, AgreesWithClassicAndOracle) {
  for (std::size_t n : pow2_range(2, 1024)) {
    const ScaleTables t(n);
    const auto x = test::random_real(n, 3 * n);
    FlopLedger l;
    for (auto norm : kNorms) {
      const auto a = dct2_new(x, norm, t, l);
      EXPECT_LT(rel_err(a, dct2_classic(x, norm, t, l)), 1e-12) << n;
      EXPECT_LT(rel_err(a, naive_dct2(x, {Summation::Compensated, norm})), 1e-12) << n;
    }
  }
}

TEST(Dct2New, SizeTwoClosedForm) {
  const ScaleTables t(2);
  FlopLedger l;
  const auto y = dct2_new(RealSignal{0.75, -2.0}, Normalization::TwoSided, t, l);
  EXPECT_DOUBLE_EQ(y[0], 2 * (0.75 - 2.0));
  EXPECT_DOUBLE_EQ(y[1], std::numbers::sqrt2 * (0.75 + 2.0));
  EXPECT_EQ(l, (FlopLedger{2, 2}));
}

TEST(Dct2New, RejectsBadSizes) {
  const ScaleTables t(8);
  FlopLedger l;
  EXPECT_THROW(dct2_new(RealSignal(6), Normalization::TwoSided, t, l), std::invalid_argument);
  EXPECT_THROW(dct2_new(RealSignal(1), Normalization::TwoSided, t, l), std::invalid_argument);
  EXPECT_THROW(dct2_new(RealSignal(16), Normalization::TwoSided, t, l), std::invalid_argument);
}

// Unitary C_k = sqrt((2 - delta_k0) / N) sum_n x_n cos(...), half the two-sided factor.
TEST(Dct2New, NormalizationConsistency) {
  for (std::size_t n : pow2_range(2, 512)) {
    const ScaleTables t(n);
    const auto x = test::random_real(n, n + 5);
    FlopLedger l;
    const auto two = dct2_new(x, Normalization::TwoSided, t, l);
    const auto uni = dct2_new(x, Normalization::Unitary, t, l);
    const auto sqn = dct2_new(x, Normalization::UnitaryTimesSqrtN, t, l);
    RealSignal want_u(n), want_s(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double d = k == 0 ? 1.0 : 2.0;
      want_u[k] = two[k] * std::sqrt(d / n) / 2;
      want_s[k] = two[k] * std::sqrt(d) / 2;
    }
    EXPECT_LT(rel_err(uni, want_u), 1e-12) << n;
    EXPECT_LT(rel_err(sqn, want_s), 1e-12) << n;
  }
}

TEST(Dct2New, UnitaryIsOrthogonal) {
  for (std::size_t n : pow2_range(2, 128)) {
    const ScaleTables t(n);
    const auto m = test::matrix_of(n, [&](const RealSignal& e) {
      FlopLedger l;
      return dct2_new(e, Normalization::Unitary, t, l);
    });
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double dot = 0;
        for (std::size_t r = 0; r < n; ++r) dot += m[r][i] * m[r][j];
        ASSERT_NEAR(dot, i == j ? 1.0 : 0.0, 1e-10) << n << ' ' << i << ' ' << j;
      }
    }
  }
}

TEST(Dct2New, EmbeddingIdentity) {
  for (std::size_t n : pow2_range(2, 64)) {
    const ScaleTables t(n);
    const auto x = test::random_real(n, 9 * n);
    FlopLedger l;
    const auto c = dct2_new(x, Normalization::TwoSided, t, l);
    const auto big = naive_dft(embed_4n(x));
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_NEAR(c[k], big[k].real(), 1e-10) << n << ' ' << k;
      EXPECT_NEAR(big[k].imag(), 0.0, 1e-10);
    }
  }
}

TEST(Dct2Scaled, SavesEightAtEight) {
  const ScaleTables t(8);
  FlopLedger s, w;
  const auto x = test::random_real(8, 8);
  dct2_scaled(x, t, s);
  dct2_new(x, Normalization::TwoSided, t, w);
  EXPECT_EQ(s.total(), formula::new_dct2(8) - 8);
  EXPECT_EQ(w.mults - s.mults, 8);
}

TEST(Dct2Scaled, SavesNMultsEverywhere) {
  for (std::size_t n : pow2_range(8, 4096)) {
    const ScaleTables t(n);
    const auto x = test::random_real(n, n);
    FlopLedger s, w;
    dct2_scaled(x, t, s);
    dct2_new(x, Normalization::TwoSided, t, w);
    EXPECT_EQ(s.adds, w.adds) << n;
    EXPECT_EQ(w.mults - s.mults, static_cast<std::int64_t>(n)) << n;
  }
}

TEST(Dct2Scaled, ProductMatchesOracle) {
  for (std::size_t n : pow2_range(2, 512)) {
    const ScaleTables t(n);
    const auto x = test::random_real(n, 4 * n);
    FlopLedger l;
    auto out = dct2_scaled(x, t, l);
    for (std::size_t k = 0; k < n; ++k) out.values[k] *= out.scales[k];
    EXPECT_LT(rel_err(out.values, naive_dct2(x)), 1e-12) << n;
  }
}

TEST(Dct2Scaled, ZeroInputPositiveScales) {
  const ScaleTables t(64);
  FlopLedger l;
  const auto out = dct2_scaled(RealSignal(64, 0.0), t, l);
  for (std::size_t k = 0; k < 64; ++k) {
    EXPECT_EQ(out.values[k], 0.0);
    EXPECT_GT(out.scales[k], 0.0);
  }
}

}  // namespace
}  // namespace srdct
