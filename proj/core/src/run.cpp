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

#include "oseen/run.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "oseen/error.hpp"
#include "oseen/io.hpp"
#include "oseen/lemma_lab.hpp"
#include "oseen/spectral.hpp"

namespace oseen {

namespace fs = std::filesystem;

namespace {

class Summary {
 public:
  template <typename T>
  void add(const std::string& key, const T& value) {
    os_ << key << " = " << value << '\n';
  }
  void raw(const std::string& text) { os_ << text; }
  void save(const fs::path& path) const {
    std::ofstream out{path, std::ios::trunc};
    if (!out) {
      throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << os_.str();
  }

  Summary() { os_.precision(10); }

 private:
  std::ostringstream os_;
};

void add_force(Summary& s, const RunConfig& cfg, const ForceSpec& F, const AdmissibilityReport& adm) {
  s.add("force", to_string(F.family));
  s.add("amplitude", F.params.amplitude);
  s.add("sigma", F.params.sigma);
  s.add("N_F", adm.N_F);
  s.add("threshold", adm.threshold);
  s.add("admissibility_ratio", adm.ratio);
  s.add("force_boundary_mass", adm.boundary_mass);
  s.add("beta", cfg.solver.beta);
  s.add("u_inf", cfg.solver.u_inf);
}

void add_solve(Summary& s, const std::string& prefix, const SolveReport& r) {
  s.add(prefix + "iterations", r.iterations);
  s.add(prefix + "converged", r.converged ? "yes" : "no");
  s.add(prefix + "diverged", r.diverged ? "yes" : "no");
  if (!r.increments.empty()) {
    s.add(prefix + "final_increment", r.increments.back());
  }
  if (!r.gammas.empty()) {
    s.add(prefix + "max_gamma", *std::max_element(r.gammas.begin(), r.gammas.end()));
  }
  s.add(prefix + "x_beta_v", r.norms.x_beta_v);
  s.add(prefix + "y_p", r.norms.y_p);
  s.add(prefix + "momentum_rel_1", r.residual.momentum_rel[0]);
  s.add(prefix + "momentum_rel_2", r.residual.momentum_rel[1]);
  s.add(prefix + "divergence_rel", r.residual.divergence_rel);
  s.add(prefix + "pressure_rel", r.residual.pressure_rel);
  s.add(prefix + "interior_region", r.residual.interior_region);
  s.add(prefix + "velocity_boundary_mass", r.boundary_mass);
  for (const auto& w : r.warnings) {
    s.add(prefix + "warning", w);
  }
}

void save_fields(const fs::path& path, const SolveReport& r) {
  write_fields(path.string(), {&r.v1_hat, &r.v2_hat, &r.p_hat});
}

int exit_for(const SolveReport& r) { return r.converged ? kExitOk : kExitNoConvergence; }

int run_single(bool linear, const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const GridPtr g = cfg.grid();
  const ForceSpec F = cfg.make_force(g);
  const AdmissibilityReport adm = admissibility(F, cfg.solver.beta, cfg.solver.u_inf);
  log << "force ratio N_F/threshold = " << adm.ratio << '\n';
  const SolveReport r = linear ? oseen_solve(F, cfg.solver) : picard_solve(F, cfg.solver);
  log << (linear ? "linear solve done" : "picard iterations: ") << (linear ? "" : std::to_string(r.iterations))
      << '\n';
  save_fields(out / "fields.bin", r);
  write_iteration_csv((out / "report.csv").string(), r);
  Summary s;
  s.add("subcommand", linear ? "oseen" : "solve");
  add_force(s, cfg, F, adm);
  add_solve(s, "", r);
  s.save(out / "summary.txt");
  return exit_for(r);
}

int run_compare(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const GridPtr g = cfg.grid();
  const ForceSpec F = cfg.make_force(g);
  const AdmissibilityReport adm = admissibility(F, cfg.solver.beta, cfg.solver.u_inf);
  const NormWeight w = cfg.solver.weight();

  const SolveReport ns = picard_solve(F, cfg.solver);
  const SolveReport os = oseen_solve(F, cfg.solver);
  log << "nonlinear run: " << ns.iterations << " iterations\n";
  fs::create_directories(out / "ns");
  fs::create_directories(out / "oseen");
  save_fields(out / "ns" / "fields.bin", ns);
  save_fields(out / "oseen" / "fields.bin", os);
  write_iteration_csv((out / "report.csv").string(), ns);
  const ProfileReport prof = profile_compare(ns, os, w);
  const double diff_full = x_beta_norm(ns.v1_hat - os.v1_hat, ns.v2_hat - os.v2_hat, w);

  // Same force at half amplitude: the nonlinear correction should shrink 4x.
  const ForceSpec Fh = scaled(F, 0.5);
  const SolveReport ns_h = picard_solve(Fh, cfg.solver);
  const SolveReport os_h = oseen_solve(Fh, cfg.solver);
  const double diff_half = x_beta_norm(ns_h.v1_hat - os_h.v1_hat, ns_h.v2_hat - os_h.v2_hat, w);

  Summary s;
  s.add("subcommand", "compare");
  add_force(s, cfg, F, adm);
  add_solve(s, "ns_", ns);
  add_solve(s, "oseen_", os);
  s.add("x_beta_ns", prof.x_beta_ns);
  s.add("x_beta_oseen", prof.x_beta_oseen);
  s.add("x_2beta_diff", prof.x_2beta_diff);
  s.add("tail_exponent_ns", prof.tail_ns.slope);
  s.add("tail_exponent_ns_half_width", prof.tail_ns.half_width);
  s.add("tail_exponent_oseen", prof.tail_oseen.slope);
  s.add("tail_exponent_oseen_half_width", prof.tail_oseen.half_width);
  s.add("tail_exponent_diff", prof.tail_diff.slope);
  s.add("tail_exponent_diff_half_width", prof.tail_diff.half_width);
  s.add("x_beta_diff", diff_full);
  s.add("x_beta_diff_half_amplitude", diff_half);
  s.add("amplitude_scaling_ratio", diff_half > 0.0 ? diff_full / diff_half : 0.0);
  s.add("half_amplitude_converged", ns_h.converged ? "yes" : "no");
  s.save(out / "summary.txt");
  return ns.converged && ns_h.converged ? kExitOk : kExitNoConvergence;
}

int run_lemmas(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const auto reports = verify_lemmas(cfg.seed);
  Summary s;
  s.add("subcommand", "verify-lemmas");
  s.add("seed", cfg.seed);
  for (const auto& r : reports) {
    std::ofstream csv{out / ("lemma_" + r.lemma_id + ".csv"), std::ios::trunc};
    if (!csv) {
      throw std::runtime_error("cannot write lemma CSV for " + r.lemma_id);
    }
    r.write_csv(csv);
    std::ostringstream block;
    block << '\n';
    r.write_summary(block);
    s.raw(block.str());
    log << r.lemma_id << ": sup_ratio = " << r.sup_ratio << '\n';
  }
  s.save(out / "summary.txt");
  return kExitOk;
}

int run_decay(const RunConfig& cfg, const fs::path& out, std::ostream& log) {
  const GridPtr g = cfg.grid();
  const ForceSpec F = cfg.make_force(g);
  const SolveReport ns = picard_solve(F, cfg.solver);
  const SolveReport os = oseen_solve(F, cfg.solver);
  const PhysicalField speed_ns = magnitude(to_physical(ns.v1_hat), to_physical(ns.v2_hat));
  const PhysicalField speed_os = magnitude(to_physical(os.v1_hat), to_physical(os.v2_hat));
  const double lo = cfg.decay_x1_min;
  const double hi = cfg.decay_window_max();
  const DecayFit down = decay_fit(speed_ns, Direction::kDownstream, lo, hi);
  const DecayFit down_os = decay_fit(speed_os, Direction::kDownstream, lo, hi);
  const DecayFit up = decay_fit(speed_ns, Direction::kUpstream, lo, hi);
  const WakeFit wake = wake_width(speed_ns, down.stations);
  log << "downstream decay exponent = " << down.exponent << " +- " << down.half_width << '\n';

  {
    std::ofstream csv{out / "decay.csv", std::ios::trunc};
    csv.precision(17);
    csv << "x1,sup_v_ns,sup_v_oseen,sup_v_ns_upstream\n";
    for (std::size_t k = 0; k < down.stations.size(); ++k) {
      csv << down.stations[k] << ',' << down.values[k] << ',' << down_os.values[k] << ',' << up.values[k] << '\n';
    }
  }
  {
    std::ofstream csv{out / "wake.csv", std::ios::trunc};
    csv.precision(17);
    csv << "x1,width\n";
    for (std::size_t k = 0; k < wake.stations.size(); ++k) {
      csv << wake.stations[k] << ',' << wake.widths[k] << '\n';
    }
  }
  Summary s;
  s.add("subcommand", "decay");
  s.add("window_min", lo);
  s.add("window_max", hi);
  s.add("decay_exponent_ns", down.exponent);
  s.add("decay_exponent_ns_half_width", down.half_width);
  s.add("decay_exponent_oseen", down_os.exponent);
  s.add("decay_exponent_oseen_half_width", down_os.half_width);
  s.add("decay_exponent_upstream", up.exponent);
  s.add("wake_prefactor", wake.prefactor);
  s.add("wake_exponent", wake.exponent);
  s.add("wake_exponent_half_width", wake.half_width);
  s.add("wake_excluded_stations", wake.excluded.size());
  add_solve(s, "ns_", ns);
  s.save(out / "summary.txt");
  return exit_for(ns);
}

}  // namespace

Subcommand parse_subcommand(std::string_view name) {
  if (name == "solve") {
    return Subcommand::kSolve;
  }
  if (name == "oseen") {
    return Subcommand::kOseen;
  }
  if (name == "compare") {
    return Subcommand::kCompare;
  }
  if (name == "verify-lemmas") {
    return Subcommand::kVerifyLemmas;
  }
  if (name == "decay") {
    return Subcommand::kDecay;
  }
  throw InvalidArgument("unknown subcommand '" + std::string(name) + "'");
}

std::string_view to_string(Subcommand s) noexcept {
  switch (s) {
    case Subcommand::kSolve:
      return "solve";
    case Subcommand::kOseen:
      return "oseen";
    case Subcommand::kCompare:
      return "compare";
    case Subcommand::kVerifyLemmas:
      return "verify-lemmas";
    case Subcommand::kDecay:
      return "decay";
  }
  return "unknown";
}

int report_failure(const std::string& out_dir, int status, const std::string& message, std::ostream& log) {
  log << "error: " << message << '\n';
  try {
    fs::create_directories(out_dir);
    std::ofstream err{fs::path(out_dir) / "error.txt", std::ios::trunc};
    err << "status = " << status << '\n' << "error = " << message << '\n';
  } catch (...) {
    // The message has already gone to the log.
  }
  return status;
}

int run(Subcommand cmd, const RunConfig& cfg, const std::string& out_dir, std::ostream& log) {
  try {
    const fs::path out{out_dir};
    fs::create_directories(out);
    switch (cmd) {
      case Subcommand::kSolve:
        return run_single(false, cfg, out, log);
      case Subcommand::kOseen:
        return run_single(true, cfg, out, log);
      case Subcommand::kCompare:
        return run_compare(cfg, out, log);
      case Subcommand::kVerifyLemmas:
        return run_lemmas(cfg, out, log);
      case Subcommand::kDecay:
        return run_decay(cfg, out, log);
    }
    return report_failure(out_dir, kExitValidation, "unknown subcommand", log);
  } catch (const ConfigError& e) {
    return report_failure(out_dir, kExitValidation, e.what(), log);
  } catch (const std::invalid_argument& e) {
    return report_failure(out_dir, kExitValidation, e.what(), log);
  } catch (const std::exception& e) {
    return report_failure(out_dir, kExitIoError, e.what(), log);
  }
}

}  // namespace oseen
