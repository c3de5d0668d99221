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

#ifndef OSEEN_FIELD_EQUATIONS_HPP
#define OSEEN_FIELD_EQUATIONS_HPP

/**
 * \file
 * \brief Pressure and velocity representation operators of the stationary
 * Navier-Stokes system u_inf v_{,1} + v.grad v - Lap v + grad p = F,
 * div v = 0, written per frequency xi with t = x1.
 *
 * Sign convention: +grad p in the momentum equation, so that
 *   Lap p = div F - div div(v (x) v),
 *   H     = F - grad p - div(v (x) v),   v = V * H,
 * with V the positive fundamental solution of u_inf d/dt - d^2/dt^2 + xi^2.
 * Every t-derivative of the data is moved onto the kernels by integration by
 * parts; nothing here differentiates numerically.
 */

#include <string>
#include <string_view>

#include "oseen/grid.hpp"
#include "oseen/kernels.hpp"

namespace oseen {

/// Transforms of v1^2, v1 v2, v2^2. Default-constructed (empty) means q = 0.
struct QuadraticProducts {
  SpectralField q11;
  SpectralField q12;
  SpectralField q22;

  [[nodiscard]] bool empty() const noexcept { return q11.rows() == 0; }
};

/// Pair of velocity components in spectral form.
struct Velocity {
  SpectralField v1;
  SpectralField v2;
};

enum class ForceFamily { kGaussDipole, kShearBump };

[[nodiscard]] ForceFamily parse_force_family(std::string_view name);
[[nodiscard]] std::string_view to_string(ForceFamily f) noexcept;

struct ForceParams {
  double amplitude{1.0};
  double sigma{1.0};
  double c1{0.0};
  double c2{0.0};
  double phi{0.0};
};

struct ForceSpec {
  SpectralField F1_hat;
  SpectralField F2_hat;
  ForceFamily family{ForceFamily::kGaussDipole};
  ForceParams params;
};

/// Builds one of the forcing families on `grid`:
///  - gauss-dipole: F = A d/dx2[exp(-|x - c|^2 / sigma^2)] (cos phi, sin phi),
///    transformed in closed form;
///  - shear-bump: F = A (d/dx2 psi, 0), psi = exp(-(x1-c1)^2/sigma^2 - ((x2-c2)/sigma)^4),
///    transformed numerically with to_spectral.
/// Both have an identically zero xi = 0 column and a zero Nyquist column.
/// Throws InvalidArgument on sigma <= 0 or an unknown family name.
[[nodiscard]] ForceSpec force_family(std::string_view name, const ForceParams& params, const GridPtr& grid);
[[nodiscard]] ForceSpec force_family(ForceFamily family, const ForceParams& params, const GridPtr& grid);

/// Multiplies both components and the recorded amplitude by s.
[[nodiscard]] ForceSpec scaled(ForceSpec f, double s);

/// Zero force on `grid` (family tag gauss-dipole, amplitude 0).
[[nodiscard]] ForceSpec zero_force(const GridPtr& grid);

/// q_ij = spectral_product(v_i, v_j), dealiased.
[[nodiscard]] QuadraticProducts quadratic_products(const SpectralField& v1, const SpectralField& v2);
[[nodiscard]] inline QuadraticProducts quadratic_products(const Velocity& v) { return quadratic_products(v.v1, v.v2); }

/// Pressure from the Poisson equation p'' - xi^2 p = G per column:
///   p = 1/2 S(F1) - i sgn(xi)/2 E(F2) + |xi|/2 E(q11) - q11 - i xi S(q12) - |xi|/2 E(q22)
/// with E = laplace_even, S = laplace_signed at k = |xi| and sgn(0) = 0.
/// Throws GridMismatch, or InvalidArgument if F has a non-zero xi = 0 column.
[[nodiscard]] SpectralField pressure_apply(const QuadraticProducts& q, const ForceSpec& F);

/// Velocity from the kernel representation, per column with the symbols of xi:
///   v1 = K(F1 - i xi q12)/D - (l1/D) C(p + q11) - (l2/D) A(p + q11)
///   v2 = K(F2 - i xi (p + q22))/D - (l1/D) C(q12) - (l2/D) A(q12)
/// where C = causal_scan at rate -l1, A = anticausal_scan at rate l2 and
/// K = C + A. Throws InvalidArgument if u_inf <= 0.
[[nodiscard]] Velocity velocity_apply(const SpectralField& p_hat, const QuadraticProducts& q, const ForceSpec& F,
                                      double u_inf);

/// Convolution with the fundamental solution for one column:
/// returns (1/D)[C(H) + A(H)], the decaying solution of u v' - v'' + xi^2 v = H.
[[nodiscard]] std::vector<cplx> fundamental_solve(std::span<const cplx> H, double xi, double u_inf, double h);

struct AdmissibilityReport {
  double N_F{0.0};        ///< sup |t|^{1/2} |F_hat| / |xi| over xi != 0.
  double threshold{0.0};  ///< u_inf^{2 beta - 1/2}.
  double ratio{0.0};      ///< N_F / threshold.
  double boundary_mass{0.0};
};

/// Throws InvalidArgument unless 1/4 < beta < 1/2, u_inf > 0 and F has a
/// zero xi = 0 column. |F_hat| is the Euclidean norm of (F1_hat, F2_hat).
[[nodiscard]] AdmissibilityReport admissibility(const ForceSpec& F, double beta, double u_inf);

}  // namespace oseen

#endif
