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

#ifndef OSEEN_SOLVER_HPP
#define OSEEN_SOLVER_HPP

/**
 * \file
 * \brief Linear Oseen solve, Picard iteration for the stationary
 * Navier-Stokes perturbation, and the finite-difference PDE residual.
 *
 * Sign convention: u v_{,1} + v.grad v - lap v + grad p = F, div v = 0.
 */

#include <array>
#include <string>
#include <vector>

#include "oseen/field_equations.hpp"
#include "oseen/norms.hpp"

namespace oseen {

struct SolverConfig {
  double beta{0.375};
  double u_inf{4.0};
  double tol{1e-10};
  int max_iter{50};
  WeightMode weight_mode{WeightMode::kConvective};

  /// Throws InvalidArgument unless 1/4 < beta < 1/2, u_inf > 0, tol > 0 and
  /// max_iter >= 1.
  void validate() const;
  [[nodiscard]] NormWeight weight() const { return NormWeight{beta, u_inf, weight_mode}; }
};

struct ResidualReport {
  std::array<double, 2> momentum_rel{0.0, 0.0};
  double divergence_rel{0.0};
  double pressure_rel{0.0};
  double interior_region{0.0};  ///< fraction of t rows evaluated
};

struct SolveNorms {
  double x_beta_v{0.0};  ///< ||(v1, v2)|| in X_beta with the configured weight
  double y_p{0.0};       ///< ||p|| in Y
};

struct SolveReport {
  SpectralField v1_hat;
  SpectralField v2_hat;
  SpectralField p_hat;
  int iterations{0};
  std::vector<double> increments;  ///< X_beta norm of v^{n+1} - v^n
  std::vector<double> gammas;      ///< increments[n] / increments[n-1]
  SolveNorms norms;
  bool converged{false};
  bool diverged{false};
  /// Largest |v| in the t boundary buffer relative to the overall largest |v|.
  double boundary_mass{0.0};
  ResidualReport residual;
  std::vector<std::string> warnings;
};

/// Pressure and velocity of the linear Oseen system (q = 0), one pass.
[[nodiscard]] SolveReport oseen_solve(const ForceSpec& F, const SolverConfig& cfg);

/// One application of the fixed-point map: v -> velocity(pressure(q(v), F), q(v), F).
/// The pressure of the step is written to p_out when given.
[[nodiscard]] Velocity picard_step(const Velocity& v, const ForceSpec& F, double u_inf,
                                   SpectralField* p_out = nullptr);

/// Picard iteration from v^0 = 0 (or from `initial`). Stops when the
/// increment drops below cfg.tol or after cfg.max_iter steps; three
/// consecutive increment increases end the run with diverged = true.
[[nodiscard]] SolveReport picard_solve(const ForceSpec& F, const SolverConfig& cfg,
                                       const Velocity* initial = nullptr);

/// Momentum, divergence and pressure-Poisson residuals, with t derivatives by
/// 4th-order differences, sup over the interior rows. With nonlinear = false
/// the residual is that of the linear Oseen system (no v.grad v term).
[[nodiscard]] ResidualReport residual(const SpectralField& v1_hat, const SpectralField& v2_hat,
                                      const SpectralField& p_hat, const ForceSpec& F, const SolverConfig& cfg,
                                      bool nonlinear = true);

/// profile_compare on two solve reports (nonlinear first).
[[nodiscard]] ProfileReport profile_compare(const SolveReport& ns, const SolveReport& oseen, const NormWeight& w);

}  // namespace oseen

#endif
