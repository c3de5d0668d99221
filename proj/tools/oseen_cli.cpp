// Copyright 2026 The oseen-ns Authors
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

// Command-line driver: oseen <subcommand> [--config PATH] [--out DIR] [--threads N] [--seed N]

#include <iostream>
#include <string>
#include <utility>

#include <CLI11.hpp>

#include "oseen/config.hpp"
#include "oseen/error.hpp"
#include "oseen/parallel.hpp"
#include "oseen/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Stationary Navier-Stokes perturbation of a uniform stream: solver and diagnostics"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_dir = "out";
  unsigned threads = 0;
  std::uint64_t seed = 0;
  bool print_config = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key = value configuration file (defaults when omitted)");
    sub->add_option("--out", out_dir, "output directory")->capture_default_str();
    sub->add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();
    sub->add_option("--seed", seed, "seed for randomized lemma samples")->capture_default_str();
    sub->add_flag("--print-config", print_config, "print the effective configuration and exit");
  };
  const std::pair<const char*, const char*> subcommands[] = {
      {"solve", "Picard iteration for the nonlinear problem"},
      {"oseen", "linear Oseen solve"},
      {"compare", "nonlinear vs linear profile comparison at two amplitudes"},
      {"verify-lemmas", "quadrature sweeps of the integral lemmas"},
      {"decay", "downstream decay and wake width fits"},
  };
  for (const auto& [name, help] : subcommands) {
    add_common(app.add_subcommand(name, help));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : oseen::kExitValidation;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const oseen::Subcommand cmd = oseen::parse_subcommand(sub->get_name());
  oseen::set_thread_count(threads);

  oseen::RunConfig cfg;
  try {
    cfg = config_path.empty() ? oseen::parse_config("") : oseen::load_config(config_path);
  } catch (const oseen::ConfigError& e) {
    return oseen::report_failure(out_dir, oseen::kExitValidation,
                                 (config_path.empty() ? std::string{} : config_path + ": ") + e.what(), std::cerr);
  }
  cfg.seed = seed;
  if (print_config) {
    std::cout << oseen::to_config_text(cfg);
    return oseen::kExitOk;
  }
  return oseen::run(cmd, cfg, out_dir, std::cout);
}
