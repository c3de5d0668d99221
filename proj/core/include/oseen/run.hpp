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

#ifndef OSEEN_RUN_HPP
#define OSEEN_RUN_HPP

/**
 * \file
 * \brief Subcommands of the command-line driver.
 *
 * Every subcommand writes into one output directory:
 *   solve, oseen   fields.bin, report.csv, summary.txt
 *   compare        ns/fields.bin, oseen/fields.bin, report.csv, summary.txt
 *   verify-lemmas  lemma_<id>.csv per report, summary.txt
 *   decay          decay.csv, wake.csv, summary.txt
 * Failures write error.txt with the exit status and message.
 */

#include <iosfwd>
#include <string>
#include <string_view>

#include "oseen/config.hpp"

namespace oseen {

enum class Subcommand { kSolve, kOseen, kCompare, kVerifyLemmas, kDecay };

[[nodiscard]] Subcommand parse_subcommand(std::string_view name);
[[nodiscard]] std::string_view to_string(Subcommand s) noexcept;

inline constexpr int kExitOk = 0;
inline constexpr int kExitIoError = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNoConvergence = 3;

/// Runs one subcommand; never throws. Progress lines go to `log`.
int run(Subcommand cmd, const RunConfig& cfg, const std::string& out_dir, std::ostream& log);

/// Writes error.txt into out_dir (best effort) and returns `status`.
int report_failure(const std::string& out_dir, int status, const std::string& message, std::ostream& log);

}  // namespace oseen

#endif
