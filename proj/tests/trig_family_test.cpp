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
constexpr TrigKind kKinds[] = {TrigKind::DCT2, TrigKind::DCT3, TrigKind::DST2, TrigKind::DST3};

TEST(Dct3New, LedgerAtSixteen) {
  const ScaleTables t(16);
  FlopLedger l;
  dct3_new(test::random_real(16, 1), Normalization::TwoSided, t, l);
  EXPECT_EQ(l.total(), 112);
}

TEST(Family, FlopParityAllKinds) {
  for (std::size_t n : pow2_range(2, 4096)) {
    const ScaleTables t(n);
    const auto x = test::random_real(n, n);
    for (auto algo : {DctAlgorithm::Classic, DctAlgorithm::New}) {
      for (auto norm : kNorms) {
        FlopLedger ref;
        trig_transform(TrigKind::DCT2, algo, x, norm, t, ref);
        for (auto kind : kKinds) {
          FlopLedger l;
          trig_transform(kind, algo, x, norm, t, l);
          EXPECT_EQ(l, ref) << to_string(kind) << " N=" << n;
        }
      }
    }
  }
}

TEST(Family, MatchesOracles) {
  for (std::size_t n : pow2_range(2, 512)) {
    const ScaleTables t(n);
    const auto x = test::random_real(n, 3 * n);
    for (auto kind : kKinds) {
      for (auto norm : kNorms) {
        const auto ref = naive_trig(kind, x, {Summation::Compensated, norm});
        for (auto algo : {DctAlgorithm::Classic, DctAlgorithm::New}) {
          FlopLedger l;
          EXPECT_LT(rel_err(trig_transform(kind, algo, x, norm, t, l), ref), 1e-11)
              << to_string(kind) << " N=" << n;
        }
      }
    }
  }
}

TEST(Family, ZeroInput) {
  const ScaleTables t(16);
  for (auto kind : kKinds) {
    FlopLedger l;
    for (double v : trig_transform(kind, DctAlgorithm::New, RealSignal(16, 0.0),
                                   Normalization::TwoSided, t, l)) {
      EXPECT_EQ(v, 0.0);
    }
  }
}

TEST(Family, UnitaryRoundTrips) {
  for (std::size_t n : pow2_range(2, 1024)) {
    const ScaleTables t(n);
    const auto x = test::random_real(n, 7 * n);
    FlopLedger l;
    const auto c = dct3_new(dct2_new(x, Normalization::Unitary, t, l), Normalization::Unitary, t, l);
    const auto s = dst3_new(dst2_new(x, Normalization::Unitary, t, l), Normalization::Unitary, t, l);
    EXPECT_LT(test::abs_err(c, x), 1e-10) << n;
    EXPECT_LT(test::abs_err(s, x), 1e-10) << n;
  }
}

TEST(Family, Dct3MatrixIsTranspose) {
  for (std::size_t n : pow2_range(2, 64)) {
    const ScaleTables t(n);
    auto run = [&](TrigKind k) {
      return test::matrix_of(n, [&](const RealSignal& e) {
        FlopLedger l;
        return trig_transform(k, DctAlgorithm::New, e, Normalization::TwoSided, t, l);
      });
    };
    const auto c2 = run(TrigKind::DCT2), c3 = run(TrigKind::DCT3);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) ASSERT_NEAR(c3[i][j], c2[j][i], 1e-12);
    }
  }
}

// DST-II matrix = row reversal of DCT-II matrix times diag((-1)^n).
TEST(Family, Dst2MatrixMapping) {
  for (std::size_t n : pow2_range(2, 64)) {
    const ScaleTables t(n);
    auto run = [&](TrigKind k) {
      return test::matrix_of(n, [&](const RealSignal& e) {
        FlopLedger l;
        return trig_transform(k, DctAlgorithm::New, e, Normalization::TwoSided, t, l);
      });
    };
    const auto c2 = run(TrigKind::DCT2), s2 = run(TrigKind::DST2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_NEAR(s2[i][j], (j % 2 ? -1.0 : 1.0) * c2[n - 1 - i][j], 1e-12);
      }
    }
  }
}

// Definition with the leading factor 2: S^T_k = 2 sum_{n=1..N} x_n sin(pi n (k + 1/2) / N).
TEST(Family, Dst3KeepsFactorTwo) {
  const std::size_t n = 8;
  const ScaleTables t(n);
  const auto x = test::random_real(n, 12);
  FlopLedger l;
  const auto y = dst3_new(x, t, l);
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0;
    for (std::size_t j = 1; j <= n; ++j) s += x[j - 1] * std::sin(std::numbers::pi * j * (k + 0.5) / n);
    EXPECT_NEAR(y[k], 2 * s, 1e-12);
  }
}

TEST(Family, Kind2SlotConvention) {
  const std::size_t n = 4;
  const ScaleTables t(n);
  FlopLedger l;
  const auto y = dst2_new(test::impulse(n, 0), t, l);
  for (std::size_t j = 0; j < n; ++j) {
    EXPECT_NEAR(y[j], 2 * std::sin(std::numbers::pi * 0.5 * (j + 1) / n), 1e-14);
  }
}

}  // namespace
}  // namespace srdct
