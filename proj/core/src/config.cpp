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

#include "oseen/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "oseen/error.hpp"

namespace oseen {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) {
    return {};
  }
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(std::string_view v, int line, const std::string& key) {
  double x = 0.0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || p != v.data() + v.size() || !std::isfinite(x)) {
    throw ConfigError(line, key + ": expected a number, got '" + std::string(v) + "'");
  }
  return x;
}

long long to_integer(std::string_view v, int line, const std::string& key) {
  long long x = 0;
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    throw ConfigError(line, key + ": expected an integer, got '" + std::string(v) + "'");
  }
  return x;
}

std::size_t to_size(std::string_view v, int line, const std::string& key) {
  const long long x = to_integer(v, line, key);
  if (x < 0) {
    throw ConfigError(line, key + ": must be non-negative");
  }
  return static_cast<std::size_t>(x);
}

using Setter = std::function<void(RunConfig&, std::string_view, int)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"beta", [](RunConfig& c, std::string_view v, int l) { c.solver.beta = to_double(v, l, "beta"); }},
      {"u_inf", [](RunConfig& c, std::string_view v, int l) { c.solver.u_inf = to_double(v, l, "u_inf"); }},
      {"tol", [](RunConfig& c, std::string_view v, int l) { c.solver.tol = to_double(v, l, "tol"); }},
      {"max_iter",
       [](RunConfig& c, std::string_view v, int l) {
         const long long n = to_integer(v, l, "max_iter");
         if (n < 1 || n > 100000) {
           throw ConfigError(l, "max_iter: must lie in [1, 100000]");
         }
         c.solver.max_iter = static_cast<int>(n);
       }},
      {"weight_mode",
       [](RunConfig& c, std::string_view v, int l) {
         try {
           c.solver.weight_mode = parse_weight_mode(v);
         } catch (const InvalidArgument& e) {
           throw ConfigError(l, e.what());
         }
       }},
      {"T", [](RunConfig& c, std::string_view v, int l) { c.T = to_double(v, l, "T"); }},
      {"N_t", [](RunConfig& c, std::string_view v, int l) { c.nt = to_size(v, l, "N_t"); }},
      {"L2", [](RunConfig& c, std::string_view v, int l) { c.L2 = to_double(v, l, "L2"); }},
      {"N2", [](RunConfig& c, std::string_view v, int l) { c.n2 = to_size(v, l, "N2"); }},
      {"force",
       [](RunConfig& c, std::string_view v, int l) {
         try {
           c.family = parse_force_family(v);
         } catch (const InvalidArgument& e) {
           throw ConfigError(l, e.what());
         }
       }},
      {"amplitude", [](RunConfig& c, std::string_view v, int l) { c.force.amplitude = to_double(v, l, "amplitude"); }},
      {"sigma", [](RunConfig& c, std::string_view v, int l) { c.force.sigma = to_double(v, l, "sigma"); }},
      {"c1", [](RunConfig& c, std::string_view v, int l) { c.force.c1 = to_double(v, l, "c1"); }},
      {"c2", [](RunConfig& c, std::string_view v, int l) { c.force.c2 = to_double(v, l, "c2"); }},
      {"phi", [](RunConfig& c, std::string_view v, int l) { c.force.phi = to_double(v, l, "phi"); }},
      {"target_ratio",
       [](RunConfig& c, std::string_view v, int l) { c.target_ratio = to_double(v, l, "target_ratio"); }},
      {"decay_x1_min",
       [](RunConfig& c, std::string_view v, int l) { c.decay_x1_min = to_double(v, l, "decay_x1_min"); }},
      {"decay_x1_max",
       [](RunConfig& c, std::string_view v, int l) { c.decay_x1_max = to_double(v, l, "decay_x1_max"); }},
  };
  return table;
}

bool power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void validate(const RunConfig& c) {
  auto line = [&](const char* key) {
    const auto it = c.lines.find(key);
    return it == c.lines.end() ? 0 : it->second;
  };
  auto check = [&](bool ok, const char* key, const std::string& msg) {
    if (!ok) {
      throw ConfigError(line(key), std::string(key) + ": " + msg);
    }
  };
  check(c.solver.beta > 0.25 && c.solver.beta < 0.5, "beta", "must lie in (1/4, 1/2)");
  check(c.solver.u_inf > 0.0, "u_inf", "must be positive");
  check(c.solver.tol > 0.0, "tol", "must be positive");
  check(c.T > 0.0, "T", "must be positive");
  check(c.nt >= 16 && c.nt % 2 == 0, "N_t", "must be even and at least 16");
  check(c.nt <= (1u << 22), "N_t", "too large");
  check(c.L2 > 0.0, "L2", "must be positive");
  check(power_of_two(c.n2) && c.n2 >= 16, "N2", "must be a power of two, at least 16");
  check(c.n2 <= (1u << 20), "N2", "too large");
  check(c.force.sigma > 0.0, "sigma", "must be positive");
  check(c.target_ratio >= 0.0, "target_ratio", "must be non-negative");
  check(c.decay_x1_min > 0.0, "decay_x1_min", "must be positive");
  check(c.decay_x1_max >= 0.0, "decay_x1_max", "must be non-negative");
  const double interior = (1.0 - kBoundaryBufferFraction) * c.T;
  check(c.decay_window_max() <= interior, c.lines.count("decay_x1_max") ? "decay_x1_max" : "T",
        "decay window must end inside the interior |x1| <= 0.9 T");
  check(c.decay_window_max() > c.decay_x1_min, "decay_x1_min", "must be below the window end");
}

}  // namespace

double RunConfig::threshold() const { return std::pow(solver.u_inf, 2.0 * solver.beta - 0.5); }

GridPtr RunConfig::grid() const { return make_grid(T, nt, L2, n2); }

ForceSpec RunConfig::make_force(const GridPtr& g) const {
  ForceSpec F = force_family(family, force, g);
  if (target_ratio > 0.0) {
    const double ratio = admissibility(F, solver.beta, solver.u_inf).ratio;
    if (!(ratio > 0.0)) {
      throw InvalidArgument("target_ratio: the configured force is zero and cannot be rescaled");
    }
    F = scaled(std::move(F), target_ratio / ratio);
  }
  return F;
}

RunConfig parse_config(std::string_view text) {
  RunConfig cfg;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(line_no, "expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ConfigError(line_no, "unknown key '" + key + "'");
    }
    if (cfg.lines.count(key) != 0) {
      throw ConfigError(line_no, "duplicate key '" + key + "' (first set on line " +
                                     std::to_string(cfg.lines.at(key)) + ")");
    }
    if (value.empty()) {
      throw ConfigError(line_no, key + ": missing value");
    }
    it->second(cfg, value, line_no);
    cfg.lines[key] = line_no;
  }
  validate(cfg);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in{path, std::ios::binary};
  if (!in) {
    throw ConfigError(0, "cannot open config file '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string to_config_text(const RunConfig& c) {
  std::ostringstream os;
  os.precision(17);
  os << "beta = " << c.solver.beta << '\n'
     << "u_inf = " << c.solver.u_inf << '\n'
     << "tol = " << c.solver.tol << '\n'
     << "max_iter = " << c.solver.max_iter << '\n'
     << "weight_mode = " << to_string(c.solver.weight_mode) << '\n'
     << "T = " << c.T << '\n'
     << "N_t = " << c.nt << '\n'
     << "L2 = " << c.L2 << '\n'
     << "N2 = " << c.n2 << '\n'
     << "force = " << to_string(c.family) << '\n'
     << "amplitude = " << c.force.amplitude << '\n'
     << "sigma = " << c.force.sigma << '\n'
     << "c1 = " << c.force.c1 << '\n'
     << "c2 = " << c.force.c2 << '\n'
     << "phi = " << c.force.phi << '\n'
     << "target_ratio = " << c.target_ratio << '\n'
     << "decay_x1_min = " << c.decay_x1_min << '\n'
     << "decay_x1_max = " << c.decay_x1_max << '\n';
  return os.str();
}

}  // namespace oseen
