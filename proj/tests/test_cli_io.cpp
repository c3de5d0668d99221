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

#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>

#include "oseen/config.hpp"
#include "oseen/error.hpp"
#include "oseen/io.hpp"
#include "oseen/run.hpp"
#include "test_support.hpp"

using namespace oseen;
namespace fs = std::filesystem;

namespace {

const char* kSmall =
    "beta = 0.375\n"
    "u_inf = 4\n"
    "T = 40\n"
    "N_t = 512\n"
    "L2 = 40\n"
    "N2 = 64\n"
    "force = gauss-dipole\n"
    "target_ratio = 0.1\n"
    "decay_x1_min = 4\n"
    "decay_x1_max = 32\n";

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("oseen_cli_io_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in{p, std::ios::binary};
  return {std::istreambuf_iterator<char>(in), {}};
}

std::map<std::string, std::string> summary(const fs::path& p) {
  std::map<std::string, std::string> m;
  std::istringstream in{slurp(p)};
  for (std::string line; std::getline(in, line);) {
    const auto eq = line.find(" = ");
    if (eq != std::string::npos) {
      m.emplace(line.substr(0, eq), line.substr(eq + 3));
    }
  }
  return m;
}

int line_of(const std::string& text) {
  try {
    (void)parse_config(text);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("config parsing") {
  const auto c = parse_config("# comment\n\nbeta = 0.3\nu_inf=2.5  \nforce = shear-bump\nN_t = 64\n");
  CHECK(c.solver.beta == 0.3);
  CHECK(c.solver.u_inf == 2.5);
  CHECK(c.family == ForceFamily::kShearBump);
  CHECK(c.nt == 64);
  CHECK(c.n2 == 1024);
  CHECK(c.threshold() == doctest::Approx(std::pow(2.5, 0.1)));
  CHECK(c.lines.at("u_inf") == 4);
}

TEST_CASE("config defaults and examples") {
  const auto d = parse_config("");
  CHECK(d.solver.beta == 0.375);
  CHECK(d.solver.u_inf == 4.0);
  CHECK(d.T == 200.0);
  CHECK(d.nt == 4096);
  CHECK(d.L2 == 400.0);
  CHECK(d.n2 == 1024);
  CHECK(d.solver.tol == 1e-10);
  CHECK(d.solver.max_iter == 50);
  CHECK(d.solver.weight_mode == WeightMode::kConvective);
  CHECK_THROWS_AS((void)parse_config("beta = 0.6"), ConfigError);
  CHECK(parse_config("u_inf = 4.0\nbeta = 0.375").threshold() == doctest::Approx(1.41421356).epsilon(1e-8));
}

TEST_CASE("config errors carry line numbers") {
  CHECK(line_of("beta = 0.3\nwidth = 2\n") == 2);
  CHECK(line_of("beta = 0.3\nbeta = 0.4\n") == 2);
  CHECK(line_of("beta\n") == 1);
  CHECK(line_of("tol = 1e-8\nbeta =\n") == 2);
  CHECK(line_of("N_t = 12.5\n") == 1);
  CHECK(line_of("\n\nN_t = 100\nbeta = 0.6\n") == 4);
  CHECK(line_of("N2 = 100\n") == 1);
  CHECK(line_of("force = vortex\n") == 1);
  CHECK(line_of("beta = 0.3\n") == -1);
}

TEST_CASE("config text round trip") {
  auto c = parse_config(kSmall);
  c.force.phi = 0.25;
  c.solver.weight_mode = WeightMode::kUnit;
  const auto d = parse_config(to_config_text(c));
  CHECK(to_config_text(d) == to_config_text(c));
  CHECK(d.force.phi == 0.25);
  CHECK(d.solver.weight_mode == WeightMode::kUnit);
}

TEST_CASE("fields file round trip and header") {
  const auto g = oseen::testing::small_grid(32);
  const auto a = oseen::testing::random_field(g, 3);
  const auto b = oseen::testing::random_field(g, 4);
  const auto dir = scratch("fields");
  const auto path = (dir / "fields.bin").string();
  write_fields(path, {&a, &b});
  const std::string bytes = slurp(path);
  REQUIRE(bytes.size() == 16 + 2 * 16 * g->nt() * g->n2());
  CHECK(bytes.substr(0, 4) == "OSNF");
  CHECK(static_cast<unsigned char>(bytes[4]) == 1);
  CHECK(static_cast<unsigned char>(bytes[8]) == 32);
  CHECK(static_cast<unsigned char>(bytes[12]) == 64);
  const auto f = read_fields(path);
  CHECK(f.version == kFieldsVersion);
  REQUIRE(f.fields.size() == 2);
  CHECK(oseen::testing::max_diff(load_field(f, 1, g), b) == 0.0);
  CHECK_THROWS((void)load_field(f, 2, g));
  CHECK_THROWS((void)read_fields((dir / "missing.bin").string()));
}

TEST_CASE("subcommand names") {
  for (auto s : {Subcommand::kSolve, Subcommand::kOseen, Subcommand::kCompare, Subcommand::kVerifyLemmas,
                 Subcommand::kDecay}) {
    CHECK(parse_subcommand(to_string(s)) == s);
  }
  CHECK(to_string(Subcommand::kVerifyLemmas) == "verify-lemmas");
  CHECK_THROWS((void)parse_subcommand("plot"));
}

TEST_CASE("solve writes fields, report and summary") {
  const auto dir = scratch("solve");
  std::ostringstream log;
  REQUIRE(run(Subcommand::kSolve, parse_config(kSmall), dir.string(), log) == kExitOk);
  CHECK(fs::exists(dir / "fields.bin"));
  const auto s = summary(dir / "summary.txt");
  CHECK(s.at("converged") == "yes");
  CHECK(std::stod(s.at("admissibility_ratio")) == doctest::Approx(0.1));
  const std::string csv = slurp(dir / "report.csv");
  CHECK(csv.rfind("iteration,increment,gamma\n", 0) == 0);

  // Deterministic output.
  const auto again = scratch("solve_again");
  REQUIRE(run(Subcommand::kSolve, parse_config(kSmall), again.string(), log) == kExitOk);
  CHECK(slurp(dir / "fields.bin") == slurp(again / "fields.bin"));
}

TEST_CASE("zero force solves to zero in one iteration") {
  const auto dir = scratch("zero");
  std::ostringstream log;
  auto c = parse_config(kSmall);
  c.target_ratio = 0.0;
  c.force.amplitude = 0.0;
  REQUIRE(run(Subcommand::kSolve, c, dir.string(), log) == kExitOk);
  const auto s = summary(dir / "summary.txt");
  CHECK(s.at("iterations") == "1");
  CHECK(std::stod(s.at("x_beta_v")) == 0.0);
}

TEST_CASE("oseen and compare subcommands") {
  const auto dir = scratch("compare");
  std::ostringstream log;
  REQUIRE(run(Subcommand::kOseen, parse_config(kSmall), (dir / "oseen_only").string(), log) == kExitOk);
  CHECK(read_fields((dir / "oseen_only" / "fields.bin").string()).fields.size() == 3);
  REQUIRE(run(Subcommand::kCompare, parse_config(kSmall), dir.string(), log) == kExitOk);
  CHECK(fs::exists(dir / "ns" / "fields.bin"));
  CHECK(fs::exists(dir / "oseen" / "fields.bin"));
  const auto s = summary(dir / "summary.txt");
  CHECK(std::stod(s.at("amplitude_scaling_ratio")) == doctest::Approx(4.0).epsilon(0.1));
  CHECK(s.count("tail_exponent_ns") == 1);
}

TEST_CASE("decay subcommand") {
  const auto dir = scratch("decay");
  std::ostringstream log;
  REQUIRE(run(Subcommand::kDecay, parse_config(kSmall), dir.string(), log) == kExitOk);
  CHECK(fs::exists(dir / "decay.csv"));
  CHECK(fs::exists(dir / "wake.csv"));
  const auto s = summary(dir / "summary.txt");
  CHECK(std::stod(s.at("decay_exponent_ns")) < 0.0);
}

TEST_CASE("verify-lemmas writes one table per lemma") {
  const auto dir = scratch("lemmas");
  std::ostringstream log;
  REQUIRE(run(Subcommand::kVerifyLemmas, parse_config(kSmall), dir.string(), log) == kExitOk);
  int tables = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    const auto name = e.path().filename().string();
    tables += name.rfind("lemma_", 0) == 0 && e.path().extension() == ".csv";
  }
  CHECK(tables == 5);
  CHECK(fs::exists(dir / "summary.txt"));
}

TEST_CASE("exit codes") {
  std::ostringstream log;
  SUBCASE("validation") {
    const auto dir = scratch("exit_validation");
    auto c = parse_config(kSmall);
    c.solver.beta = 0.7;
    CHECK(run(Subcommand::kSolve, c, dir.string(), log) == kExitValidation);
    CHECK(fs::exists(dir / "error.txt"));
  }
  SUBCASE("zero force cannot be rescaled") {
    const auto dir = scratch("exit_zero");
    auto c = parse_config(kSmall);
    c.force.amplitude = 0.0;
    CHECK(run(Subcommand::kSolve, c, dir.string(), log) == kExitValidation);
  }
  SUBCASE("no convergence") {
    const auto dir = scratch("exit_diverge");
    auto c = parse_config(kSmall);
    c.target_ratio = 100.0;
    CHECK(run(Subcommand::kSolve, c, dir.string(), log) == kExitNoConvergence);
    CHECK(summary(dir / "summary.txt").at("diverged") == "yes");
  }
  SUBCASE("unwritable output") {
    const auto dir = scratch("exit_io");
    std::ofstream{dir / "blocker"} << "x";
    CHECK(run(Subcommand::kSolve, parse_config(kSmall), (dir / "blocker" / "sub").string(), log) == kExitIoError);
  }
}
