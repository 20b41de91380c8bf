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

#include "CLI11.hpp"

#include "commands.hpp"

namespace cli = srdct::cli;

int main(int argc, char** argv) {
  CLI::App app{"Split-radix DCT toolkit"};
  app.require_subcommand(1);

  std::string kind = "dct2", algo = "new", norm = "two-sided";
  cli::TransformOptions topt;
  auto* transform = app.add_subcommand("transform", "Transform a signal file");
  transform->add_option("--kind", kind, "dct2 | dct3 | dst2 | dst3")->capture_default_str();
  transform->add_option("--algo", algo, "classic | new | scaled | naive")->capture_default_str();
  transform->add_option("--norm", norm, "two-sided | unitary | unitary-sqrtn")
      ->capture_default_str();
  transform->add_option("--input", topt.input, "Input file, one value per line")->required();
  transform->add_option("--output", topt.output, "Output file (default: stdout)");
  transform->add_option("--scales-output", topt.scales_output, "Scale sidecar for --algo scaled");

  std::size_t flops_max = 4096;
  std::string format = "csv";
  auto* flops = app.add_subcommand("flops", "Flop counts of classic and new DCT-II");
  flops->add_option("--max-size,--n", flops_max, "Largest N")->capture_default_str();
  flops->add_option("--format", format, "csv | markdown")->capture_default_str();

  cli::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Check every kernel against its oracle");
  verify->add_option("--max-size,--n", vopt.max_size, "Largest N")->capture_default_str();
  verify->add_option("--trials", vopt.trials, "Random inputs per size")->capture_default_str();
  verify->add_option("--seed", vopt.seed, "RNG seed")->capture_default_str();
  verify->add_flag("--corrupt-twiddle", vopt.corrupt_dct_twiddle)->group("");

  std::size_t acc_max = 4096;
  int acc_trials = 5;
  std::uint64_t acc_seed = 1;
  auto* accuracy = app.add_subcommand("accuracy", "rms error growth of dct2 and fft kernels");
  accuracy->add_option("--max-size,--n", acc_max, "Largest N")->capture_default_str();
  accuracy->add_option("--trials", acc_trials, "Random inputs per size")->capture_default_str();
  accuracy->add_option("--seed", acc_seed, "RNG seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? cli::kOk : cli::kUsage;
  }

  try {
    if (*transform) {
      topt.kind = cli::parse_kind(kind);
      topt.algo = cli::parse_algo(algo);
      topt.norm = cli::parse_norm(norm);
      return cli::cmd_transform(topt, std::cout, std::cerr);
    }
    if (*flops) return cli::cmd_flops(flops_max, format, std::cout, std::cerr);
    if (*verify) return cli::cmd_verify(vopt, std::cout, std::cerr);
    if (*accuracy) return cli::cmd_accuracy(acc_max, acc_trials, acc_seed, std::cout, std::cerr);
  } catch (const cli::usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsage;
  }
  return cli::kUsage;
}
