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

#ifndef OSEEN_CONFIG_HPP
#define OSEEN_CONFIG_HPP

/**
 * \file
 * \brief Run configuration: `key = value` lines, `#` comments.
 *
 * Keys and defaults:
 *
 *   beta = 0.375            exponent, 1/4 < beta < 1/2
 *   u_inf = 4.0             free-stream speed, > 0
 *   tol = 1e-10             Picard stopping threshold on the X_beta increment
 *   max_iter = 50
 *   weight_mode = convective   (or unit)
 *   T = 200                 t range is [-T, T]
 *   N_t = 4096              even, >= 16
 *   L2 = 400                x2 period
 *   N2 = 1024               power of two, >= 16
 *   force = gauss-dipole    (or shear-bump)
 *   amplitude = 1.0
 *   sigma = 1.0
 *   c1 = 0.0, c2 = 0.0, phi = 0.0
 *   target_ratio = 0        > 0 rescales the force so N_F / u_inf^{2 beta - 1/2} equals it
 *   decay_x1_min = 20       downstream window of the decay subcommand
 *   decay_x1_max = 0        0 selects 0.8 T
 */

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "oseen/field_equations.hpp"
#include "oseen/solver.hpp"

namespace oseen {

struct RunConfig {
  SolverConfig solver;
  double T{200.0};
  std::size_t nt{4096};
  double L2{400.0};
  std::size_t n2{1024};
  ForceFamily family{ForceFamily::kGaussDipole};
  ForceParams force;
  double target_ratio{0.0};
  double decay_x1_min{20.0};
  double decay_x1_max{0.0};

  // Set from the command line, not from the file.
  std::uint64_t seed{0};

  /// Line on which each key was set (absent keys hold defaults).
  std::map<std::string, int> lines;

  /// u_inf^{2 beta - 1/2}.
  [[nodiscard]] double threshold() const;
  [[nodiscard]] double decay_window_max() const { return decay_x1_max > 0.0 ? decay_x1_max : 0.8 * T; }
  [[nodiscard]] GridPtr grid() const;
  /// The configured force, rescaled when target_ratio > 0.
  [[nodiscard]] ForceSpec make_force(const GridPtr& grid) const;
};

/// Parses and validates. Throws ConfigError naming the offending line.
[[nodiscard]] RunConfig parse_config(std::string_view text);

/// Reads a file and parses it; I/O failures throw ConfigError with line 0.
[[nodiscard]] RunConfig load_config(const std::string& path);

/// Every key with its current value, in parse_config syntax.
[[nodiscard]] std::string to_config_text(const RunConfig& cfg);

}  // namespace oseen

#endif
