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

#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <utility>
#include <vector>

#include "srdct/common.hpp"
#include "srdct/dct2.hpp"
#include "srdct/fft_real.hpp"
#include "srdct/flops.hpp"
#include "srdct/scale_factors.hpp"
#include "srdct/transpose_net.hpp"

namespace srdct {

enum class TrigKind { DCT2, DCT3, DST2, DST3 };

inline const char* to_string(TrigKind kind) {
  switch (kind) {
    case TrigKind::DCT2: return "dct2";
    case TrigKind::DCT3: return "dct3";
    case TrigKind::DST2: return "dst2";
    case TrigKind::DST3: return "dst3";
  }
  return "?";
}

/// The real-input FFT underneath a DCT-II (rfft_scaled with l = 1 for the new
/// algorithm, rfft_conjpair for the classic one) recorded as a network from N
/// real inputs to the N half-spectrum lanes of pack_half_spectrum.
inline LinearNetwork record_real_fft(std::size_t n, DctAlgorithm algo, const ScaleTables& tables) {
  return record(
      [&](TraceOps& ops, std::span<const Sym> x) {
        kernels::RealSplitRadix<TraceOps> fft(ops, tables, x);
        return pack_half_spectrum(algo == DctAlgorithm::New ? fft.scaled(1) : fft.conjpair(), n);
      },
      n);
}

/// Transposed (real-output, scaled-input) FFT for a DCT-III of size n, built
/// once per (n, algorithm) and shared.
inline std::shared_ptr<const CompiledNetwork> transposed_real_fft(std::size_t n, DctAlgorithm algo) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, DctAlgorithm>, std::shared_ptr<const CompiledNetwork>>
      cache;
  const std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, algo}];
  if (!slot) {
    const ScaleTables tables(n);
    const auto net = collapse_unit_vertices(transpose(record_real_fft(n, algo, tables)));
    slot = std::make_shared<const CompiledNetwork>(net);
  }
  return slot;
}

namespace kernels {

/// DCT-III as the transpose of the DCT-II pipeline: transposed output stage,
/// transposed real FFT, then the inverse of the even/odd reordering.
template <class Ops, class T = typename Ops::value_type>
std::vector<T> dct3(Ops& ops, std::span<const T> x, Normalization norm, const ScaleTables& tables,
                    DctAlgorithm algo, const CompiledNetwork& transposed_fft) {
  const std::size_t n = x.size();
  require_power_of_two(n, "dct3", 2);
  check_tables(tables, n, "dct3");
  const DctOutputStage stage(tables, n, norm, algo);

  std::vector<T> lanes(n);
  lanes[0] = stage.c0_unit ? x[0] : ops.mul(x[0], stage.c0);
  lanes[n - 1] = stage.c0_unit ? x[n / 2] : ops.mul(x[n / 2], stage.c_half);
  for (std::size_t k = 1; k < n / 2; ++k) {
    const Complex w = stage.twiddle[k];
    lanes[2 * k - 1] = ops.sub(ops.mul(x[k], w.real()), ops.mul(x[n - k], w.imag()));
    lanes[2 * k] = ops.sub(ops.mul(x[k], -w.imag()), ops.mul(x[n - k], w.real()));
  }
  const auto y = transposed_fft.run(ops, std::span<const T>(lanes));
  return deinterleave_even_odd<T>(y);
}

/// S_{j+1} in slot j: DCT-II of the alternating-sign input, read backwards.
template <class Ops, class T = typename Ops::value_type>
std::vector<T> dst2(Ops& ops, std::span<const T> x, Normalization norm, const ScaleTables& tables,
                    DctAlgorithm algo) {
  const std::size_t n = x.size();
  std::vector<T> flipped(x.begin(), x.end());
  for (std::size_t i = 1; i < n; i += 2) flipped[i] = ops.neg(flipped[i]);
  const auto c = dct2(ops, std::span<const T>(flipped), norm, tables, algo);
  return {c.rbegin(), c.rend()};
}

/// Input slot j holds x_{j+1}. DCT-III of the reversed input with every other
/// output negated.
template <class Ops, class T = typename Ops::value_type>
std::vector<T> dst3(Ops& ops, std::span<const T> x, Normalization norm, const ScaleTables& tables,
                    DctAlgorithm algo, const CompiledNetwork& transposed_fft) {
  const std::vector<T> reversed(x.rbegin(), x.rend());
  auto c = dct3(ops, std::span<const T>(reversed), norm, tables, algo, transposed_fft);
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = ops.neg(c[k]);
  return c;
}

}  // namespace kernels

inline RealSignal dct3_new(std::span<const double> x, Normalization norm, const ScaleTables& tables,
                           FlopLedger& ledger) {
  require_power_of_two(x.size(), "dct3_new", 2);
  CountingOps ops(ledger);
  const auto net = transposed_real_fft(x.size(), DctAlgorithm::New);
  return kernels::dct3(ops, x, norm, tables, DctAlgorithm::New, *net);
}

inline RealSignal dct3_classic(std::span<const double> x, Normalization norm,
                               const ScaleTables& tables, FlopLedger& ledger) {
  require_power_of_two(x.size(), "dct3_classic", 2);
  CountingOps ops(ledger);
  const auto net = transposed_real_fft(x.size(), DctAlgorithm::Classic);
  return kernels::dct3(ops, x, norm, tables, DctAlgorithm::Classic, *net);
}

inline RealSignal dst2_new(std::span<const double> x, Normalization norm, const ScaleTables& tables,
                           FlopLedger& ledger) {
  CountingOps ops(ledger);
  return kernels::dst2(ops, x, norm, tables, DctAlgorithm::New);
}

inline RealSignal dst2_new(std::span<const double> x, const ScaleTables& tables, FlopLedger& ledger) {
  return dst2_new(x, Normalization::TwoSided, tables, ledger);
}

inline RealSignal dst2_classic(std::span<const double> x, Normalization norm,
                               const ScaleTables& tables, FlopLedger& ledger) {
  CountingOps ops(ledger);
  return kernels::dst2(ops, x, norm, tables, DctAlgorithm::Classic);
}

inline RealSignal dst3_new(std::span<const double> x, Normalization norm, const ScaleTables& tables,
                           FlopLedger& ledger) {
  require_power_of_two(x.size(), "dst3_new", 2);
  CountingOps ops(ledger);
  const auto net = transposed_real_fft(x.size(), DctAlgorithm::New);
  return kernels::dst3(ops, x, norm, tables, DctAlgorithm::New, *net);
}

inline RealSignal dst3_new(std::span<const double> x, const ScaleTables& tables, FlopLedger& ledger) {
  return dst3_new(x, Normalization::TwoSided, tables, ledger);
}

inline RealSignal dst3_classic(std::span<const double> x, Normalization norm,
                               const ScaleTables& tables, FlopLedger& ledger) {
  require_power_of_two(x.size(), "dst3_classic", 2);
  CountingOps ops(ledger);
  const auto net = transposed_real_fft(x.size(), DctAlgorithm::Classic);
  return kernels::dst3(ops, x, norm, tables, DctAlgorithm::Classic, *net);
}

/// Dispatch on kind and algorithm (Classic or New).
inline RealSignal trig_transform(TrigKind kind, DctAlgorithm algo, std::span<const double> x,
                                 Normalization norm, const ScaleTables& tables, FlopLedger& ledger) {
  const bool nw = algo == DctAlgorithm::New;
  switch (kind) {
    case TrigKind::DCT2:
      return nw ? dct2_new(x, norm, tables, ledger) : dct2_classic(x, norm, tables, ledger);
    case TrigKind::DCT3:
      return nw ? dct3_new(x, norm, tables, ledger) : dct3_classic(x, norm, tables, ledger);
    case TrigKind::DST2:
      return nw ? dst2_new(x, norm, tables, ledger) : dst2_classic(x, norm, tables, ledger);
    case TrigKind::DST3:
      return nw ? dst3_new(x, norm, tables, ledger) : dst3_classic(x, norm, tables, ledger);
  }
  return {};
}

}  // namespace srdct
