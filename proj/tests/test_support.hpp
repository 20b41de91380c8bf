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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "srdct/srdct.hpp"

namespace srdct::test {

inline std::vector<std::size_t> pow2_range(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> v;
  for (std::size_t n = lo; n <= hi; n *= 2) v.push_back(n);
  return v;
}

inline RealSignal random_real(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  RealSignal x(n);
  for (auto& v : x) v = d(rng);
  return x;
}

inline ComplexSignal random_complex(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  ComplexSignal x(n);
  for (auto& v : x) {
    const double re = d(rng);
    v = {re, d(rng)};
  }
  return x;
}

inline RealSignal impulse(std::size_t n, std::size_t at) {
  RealSignal x(n, 0.0);
  x[at] = 1.0;
  return x;
}

/// max |a - b| / max |b|
template <class A, class B>
double rel_err(const A& a, const B& b) {
  double d = 0, r = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    d = std::max(d, static_cast<double>(std::abs(a[i] - b[i])));
    r = std::max(r, static_cast<double>(std::abs(b[i])));
  }
  return r > 0 ? d / r : d;
}

inline double abs_err(const RealSignal& a, const RealSignal& b) {
  double d = 0;
  for (std::size_t i = 0; i < b.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

/// Columns from unit impulses: M[row][col].
template <class F>
std::vector<RealSignal> matrix_of(std::size_t n, F&& f) {
  std::vector<RealSignal> m(n, RealSignal(n));
  for (std::size_t c = 0; c < n; ++c) {
    const auto col = f(impulse(n, c));
    for (std::size_t r = 0; r < n; ++r) m[r][c] = col[r];
  }
  return m;
}

}  // namespace srdct::test
