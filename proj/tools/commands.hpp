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

// Command implementations for the srdct tool. Kept header-only so the test
// suite can drive them without spawning processes.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "srdct/srdct.hpp"

namespace srdct::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Algo { Classic, New, Scaled, Naive };

inline Algo parse_algo(const std::string& s) {
  if (s == "classic") return Algo::Classic;
  if (s == "new") return Algo::New;
  if (s == "scaled") return Algo::Scaled;
  if (s == "naive") return Algo::Naive;
  throw usage_error("unknown algorithm '" + s + "' (expected classic, new, scaled or naive)");
}

inline const char* to_string(Algo a) {
  switch (a) {
    case Algo::Classic: return "classic";
    case Algo::New: return "new";
    case Algo::Scaled: return "scaled";
    case Algo::Naive: return "naive";
  }
  return "?";
}

inline TrigKind parse_kind(const std::string& s) {
  if (s == "dct2") return TrigKind::DCT2;
  if (s == "dct3") return TrigKind::DCT3;
  if (s == "dst2") return TrigKind::DST2;
  if (s == "dst3") return TrigKind::DST3;
  throw usage_error("unknown kind '" + s + "' (expected dct2, dct3, dst2 or dst3)");
}

inline Normalization parse_norm(const std::string& s) {
  try {
    return parse_normalization(s);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
}

// ---------------------------------------------------------------------------
// Signal files: one decimal real per line, '#' comments and blank lines skipped.

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline RealSignal read_signal(std::istream& in, const std::string& name) {
  RealSignal x;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || !std::isfinite(v)) {
      throw usage_error(name + ":" + std::to_string(lineno) + ": not a finite decimal number: '" +
                        t + "'");
    }
    x.push_back(v);
  }
  return x;
}

inline void write_signal(std::ostream& out, std::span<const double> x) {
  char buf[40];
  for (double v : x) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    out << buf;
  }
}

// ---------------------------------------------------------------------------
// Error metrics, normwise relative to the reference. A zero reference
// falls back to the absolute norm so that zero in gives zero error.

struct ErrorPair {
  double max_rel = 0.0;
  double rms_rel = 0.0;
};

inline ErrorPair relative_error(std::span<const double> y, std::span<const double> ref) {
  double dmax = 0, rmax = 0, d2 = 0, r2 = 0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double d = y[i] - ref[i];
    dmax = std::max(dmax, std::abs(d));
    rmax = std::max(rmax, std::abs(ref[i]));
    d2 += d * d;
    r2 += ref[i] * ref[i];
  }
  return {rmax > 0 ? dmax / rmax : dmax, r2 > 0 ? std::sqrt(d2 / r2) : std::sqrt(d2)};
}

inline ErrorPair relative_error(std::span<const Complex> y, std::span<const Complex> ref) {
  double dmax = 0, rmax = 0, d2 = 0, r2 = 0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    const double d = std::abs(y[i] - ref[i]);
    dmax = std::max(dmax, d);
    rmax = std::max(rmax, std::abs(ref[i]));
    d2 += d * d;
    r2 += std::norm(ref[i]);
  }
  return {rmax > 0 ? dmax / rmax : dmax, r2 > 0 ? std::sqrt(d2 / r2) : std::sqrt(d2)};
}

inline RealSignal random_signal(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  RealSignal x(n);
  for (auto& v : x) v = dist(rng);
  return x;
}

inline ComplexSignal random_complex(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> dist(0.0, 1.0);
  ComplexSignal x(n);
  for (auto& v : x) {
    const double re = dist(rng);
    v = {re, dist(rng)};
  }
  return x;
}

// ---------------------------------------------------------------------------
// transform

struct TransformOptions {
  TrigKind kind = TrigKind::DCT2;
  Algo algo = Algo::New;
  Normalization norm = Normalization::TwoSided;
  std::string input;
  std::string output;          // empty: standard output
  std::string scales_output;   // required for Algo::Scaled
};

struct TransformResult {
  RealSignal values;
  RealSignal scales;  // Algo::Scaled only
  FlopLedger ledger;
};

/// `tables`, when given, must cover x.size(); otherwise fresh tables are built.
inline TransformResult run_transform(TrigKind kind, Algo algo, Normalization norm,
                                     std::span<const double> x,
                                     const ScaleTables* tables = nullptr) {
  TransformResult r;
  if (x.empty()) throw usage_error("input signal is empty");
  if (algo == Algo::Naive) {
    r.values = naive_trig(kind, x, {Summation::Compensated, norm});
    return r;
  }
  if (!is_power_of_two(x.size()) || x.size() < 2) {
    throw usage_error("fast algorithms need a power-of-two length >= 2, got " +
                      std::to_string(x.size()));
  }
  std::optional<ScaleTables> own;
  if (!tables) tables = &own.emplace(x.size());
  if (algo == Algo::Scaled) {
    if (kind != TrigKind::DCT2) throw usage_error("--algo scaled is only available for dct2");
    auto s = dct2_scaled(x, *tables, r.ledger);
    const std::size_t n = x.size();
    // Fold the requested normalization into the sidecar scales.
    for (std::size_t k = 0; k < n; ++k) {
      s.scales[k] *= detail::unitary_factor(norm, n, k == 0) / 2.0;
    }
    r.values = std::move(s.values);
    r.scales = std::move(s.scales);
    return r;
  }
  const auto a = algo == Algo::New ? DctAlgorithm::New : DctAlgorithm::Classic;
  r.values = trig_transform(kind, a, x, norm, *tables, r.ledger);
  return r;
}

inline int cmd_transform(const TransformOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    if (opt.algo == Algo::Scaled && opt.scales_output.empty()) {
      throw usage_error("--algo scaled needs --scales-output");
    }
    std::ifstream in(opt.input);
    if (!in) throw usage_error("cannot open input file '" + opt.input + "'");
    const RealSignal x = read_signal(in, opt.input);
    const auto r = run_transform(opt.kind, opt.algo, opt.norm, x);

    auto emit = [&](const std::string& path, const RealSignal& v) {
      if (path.empty()) {
        write_signal(out, v);
        return;
      }
      std::ofstream f(path);
      if (!f) throw usage_error("cannot open output file '" + path + "'");
      write_signal(f, v);
      if (!f) throw usage_error("write failed for '" + path + "'");
    };
    emit(opt.output, r.values);
    if (opt.algo == Algo::Scaled) emit(opt.scales_output, r.scales);
    return kOk;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

// ---------------------------------------------------------------------------
// flops

struct FlopRow {
  std::size_t n = 0;
  std::int64_t classic = 0, fresh = 0, formula_classic = 0, formula_new = 0;
  bool match() const { return classic == formula_classic && fresh == formula_new; }
};

inline std::vector<FlopRow> flop_table(std::size_t max_size, std::size_t min_size = 16) {
  if (!is_power_of_two(max_size) || max_size > (std::size_t{1} << 20) || max_size < 2) {
    throw usage_error("--max-size must be a power of two in [2, 2^20]");
  }
  std::vector<FlopRow> rows;
  for (std::size_t n = std::min(min_size, max_size); n <= max_size; n *= 2) {
    const ScaleTables tables(n);
    const RealSignal x(n, 0.0);
    FlopLedger lc, ln;
    dct2_classic(x, Normalization::TwoSided, tables, lc);
    dct2_new(x, Normalization::TwoSided, tables, ln);
    rows.push_back({n, lc.total(), ln.total(), formula::classic_dct2(n), formula::new_dct2(n)});
  }
  return rows;
}

inline int cmd_flops(std::size_t max_size, const std::string& format, std::ostream& out,
                     std::ostream& err) {
  try {
    if (format != "csv" && format != "markdown") {
      throw usage_error("--format must be csv or markdown");
    }
    const auto rows = flop_table(max_size);
    const bool md = format == "markdown";
    if (md) {
      out << "| N | classic | new | formula classic | formula new | match |\n"
          << "|---:|---:|---:|---:|---:|:---:|\n";
    } else {
      out << "size,classic,new,formula_classic,formula_new,match\n";
    }
    bool all = true;
    for (const auto& r : rows) {
      all = all && r.match();
      const char* m = r.match() ? "true" : "false";
      if (md) {
        out << "| " << r.n << " | " << r.classic << " | " << r.fresh << " | " << r.formula_classic
            << " | " << r.formula_new << " | " << m << " |\n";
      } else {
        out << r.n << ',' << r.classic << ',' << r.fresh << ',' << r.formula_classic << ','
            << r.formula_new << ',' << m << '\n';
      }
    }
    if (!all) {
      err << "error: ledger does not match formula\n";
      return kVerifyFailed;
    }
    return kOk;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

// ---------------------------------------------------------------------------
// verify

struct RunReport {
  std::size_t size = 0;
  std::string kind, algorithm, normalization;
  std::int64_t adds = 0, mults = 0, total = 0;
  double max_rel_error = 0.0;
  double rms_rel_error = 0.0;
};

inline constexpr const char* kReportHeader =
    "size,kind,algorithm,normalization,adds,mults,total,max_rel_error,rms_rel_error";

inline void write_report(std::ostream& out, const RunReport& r) {
  char buf[64];
  out << r.size << ',' << r.kind << ',' << r.algorithm << ',' << r.normalization << ',' << r.adds
      << ',' << r.mults << ',' << r.total << ',';
  std::snprintf(buf, sizeof buf, "%.3e,%.3e", r.max_rel_error, r.rms_rel_error);
  out << buf << '\n';
}

struct VerifyOptions {
  std::size_t max_size = 1024;
  int trials = 5;
  std::uint64_t seed = 1;
  bool corrupt_dct_twiddle = false;  // fault injection for tests
};

inline constexpr double kVerifyTolerance = 1e-10;

/// Expected flop total for a trig kernel of size n.
inline std::int64_t expected_flops(Algo algo, Normalization norm, std::size_t n) {
  std::int64_t f = 0;
  switch (algo) {
    case Algo::Classic: f = formula::classic_dct2(n); break;
    case Algo::New: f = formula::new_dct2(n); break;
    case Algo::Scaled: return formula::new_dct2(n) - static_cast<std::int64_t>(n);
    case Algo::Naive: return 0;
  }
  return norm == Normalization::UnitaryTimesSqrtN ? f - 2 : f;
}

inline std::vector<RunReport> verify_reports(const VerifyOptions& opt, std::string* failure) {
  if (!is_power_of_two(opt.max_size) || opt.max_size < 2 || opt.max_size > 4096) {
    throw usage_error("--max-size must be a power of two in [2, 4096]");
  }
  if (opt.trials < 1) throw usage_error("--trials must be positive");
  const TrigKind kinds[] = {TrigKind::DCT2, TrigKind::DCT3, TrigKind::DST2, TrigKind::DST3};
  const Normalization norms[] = {Normalization::TwoSided, Normalization::Unitary,
                                 Normalization::UnitaryTimesSqrtN};
  std::vector<RunReport> reports;
  std::mt19937_64 rng(opt.seed);
  for (std::size_t n = 2; n <= opt.max_size; n *= 2) {
    ScaleTables tables(n);
    if (opt.corrupt_dct_twiddle) {
      tables = testing::with_corrupted_dct_twiddle(std::move(tables), n > 2 ? 1 : 0, 1e-3);
    }
    std::vector<RealSignal> inputs;
    for (int t = 0; t < opt.trials; ++t) inputs.push_back(random_signal(rng, n));

    for (auto kind : kinds) {
      for (auto norm : norms) {
        std::vector<RealSignal> refs;
        for (const auto& x : inputs) refs.push_back(naive_trig(kind, x, {Summation::Compensated, norm}));
        std::vector<Algo> algos = {Algo::Classic, Algo::New};
        if (kind == TrigKind::DCT2) algos.push_back(Algo::Scaled);
        for (auto algo : algos) {
          RunReport r{n, to_string(kind), to_string(algo), to_string(norm)};
          double sum2 = 0.0;
          bool ledger_ok = true;
          for (int t = 0; t < opt.trials; ++t) {
            const auto out = run_transform(kind, algo, norm, inputs[t], &tables);
            RealSignal y = out.values;
            for (std::size_t k = 0; k < out.scales.size(); ++k) y[k] *= out.scales[k];
            const auto e = relative_error(y, refs[t]);
            r.max_rel_error = std::max(r.max_rel_error, e.max_rel);
            sum2 += e.rms_rel * e.rms_rel;
            r.adds = out.ledger.adds;
            r.mults = out.ledger.mults;
            r.total = out.ledger.total();
            ledger_ok = ledger_ok && r.total == expected_flops(algo, norm, n);
          }
          r.rms_rel_error = std::sqrt(sum2 / opt.trials);
          reports.push_back(r);
          if (failure && failure->empty()) {
            std::ostringstream why;
            if (!(r.max_rel_error < kVerifyTolerance)) {
              why << "error " << r.max_rel_error << " exceeds " << kVerifyTolerance;
            } else if (!ledger_ok) {
              why << "ledger " << r.total << " != expected " << expected_flops(algo, norm, n);
            }
            if (!why.str().empty()) {
              *failure = r.kind + "/" + r.algorithm + "/" + r.normalization + " N=" +
                         std::to_string(n) + ": " + why.str();
            }
          }
        }
      }
    }
  }
  return reports;
}

inline int cmd_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    std::string failure;
    const auto reports = verify_reports(opt, &failure);
    out << kReportHeader << '\n';
    for (const auto& r : reports) write_report(out, r);
    if (!failure.empty()) {
      err << "FAIL " << failure << '\n';
      return kVerifyFailed;
    }
    return kOk;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

// ---------------------------------------------------------------------------
// accuracy

struct AccuracyRow {
  std::size_t n = 0;
  double dct2_classic = 0, dct2_new = 0, fft_conjpair = 0, fft_new = 0;
  double bound = 0;  // 2 c sqrt(lg N), filled by fit_growth
  bool flagged = false;
};

struct AccuracyReport {
  std::vector<AccuracyRow> rows;
  double c = 0.0;  // least-squares fit of dct2_new rms ~ c sqrt(lg N)
  bool ok() const {
    for (const auto& r : rows) {
      if (r.flagged) return false;
    }
    return true;
  }
};

/// rms relative error over `trials` random inputs per size. With zero_input
/// every signal is zero.
inline AccuracyReport accuracy_sweep(std::size_t max_size, int trials, std::uint64_t seed,
                                     bool zero_input = false) {
  if (!is_power_of_two(max_size) || max_size < 16 || max_size > 4096) {
    throw usage_error("--max-size must be a power of two in [16, 4096]");
  }
  if (trials < 1) throw usage_error("--trials must be positive");
  AccuracyReport rep;
  std::mt19937_64 rng(seed);
  for (std::size_t n = 16; n <= max_size; n *= 2) {
    const ScaleTables tables(n);
    double sc = 0, sn = 0, fc = 0, fn = 0;
    for (int t = 0; t < trials; ++t) {
      RealSignal x = random_signal(rng, n);
      ComplexSignal z = random_complex(rng, n);
      if (zero_input) {
        std::fill(x.begin(), x.end(), 0.0);
        std::fill(z.begin(), z.end(), Complex{});
      }
      const auto ref = naive_dct2(x);
      const auto zref = naive_dft(z);
      FlopLedger l;
      auto sq = [](double v) { return v * v; };
      sc += sq(relative_error(dct2_classic(x, Normalization::TwoSided, tables, l), ref).rms_rel);
      sn += sq(relative_error(dct2_new(x, Normalization::TwoSided, tables, l), ref).rms_rel);
      fc += sq(relative_error(fft_conjpair(z, tables, l), zref).rms_rel);
      fn += sq(relative_error(fft_scaled(z, 0, tables, l), zref).rms_rel);
    }
    rep.rows.push_back({n, std::sqrt(sc / trials), std::sqrt(sn / trials),
                        std::sqrt(fc / trials), std::sqrt(fn / trials)});
  }
  double num = 0, den = 0;
  for (const auto& r : rep.rows) {
    const double lg = log2_exact(r.n);
    num += r.dct2_new * std::sqrt(lg);
    den += lg;
  }
  rep.c = num / den;
  for (auto& r : rep.rows) {
    r.bound = 2.0 * rep.c * std::sqrt(static_cast<double>(log2_exact(r.n)));
    r.flagged = r.dct2_new > r.bound || r.dct2_new > 2.0 * r.dct2_classic;
  }
  return rep;
}

inline int cmd_accuracy(std::size_t max_size, int trials, std::uint64_t seed, std::ostream& out,
                        std::ostream& err) {
  try {
    const auto rep = accuracy_sweep(max_size, trials, seed);
    out << "size,dct2_classic,dct2_new,fft_conjpair,fft_new,bound,flag\n";
    char buf[160];
    for (const auto& r : rep.rows) {
      std::snprintf(buf, sizeof buf, "%zu,%.3e,%.3e,%.3e,%.3e,%.3e,%s\n", r.n, r.dct2_classic,
                    r.dct2_new, r.fft_conjpair, r.fft_new, r.bound, r.flagged ? "true" : "false");
      out << buf;
    }
    std::snprintf(buf, sizeof buf, "# fitted c = %.4e (rms ~ c sqrt(lg N))\n", rep.c);
    out << buf;
    if (!rep.ok()) {
      err << "FAIL accuracy: some size exceeds its bound\n";
      return kVerifyFailed;
    }
    return kOk;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace srdct::cli
