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

#include "oseen/solver.hpp"

#include <algorithm>
#include <cmath>

#include "oseen/error.hpp"
#include "oseen/spectral.hpp"

namespace oseen {

namespace {

constexpr cplx kI{0.0, 1.0};

// Consecutive increment increases that count as divergence.
constexpr int kDivergenceRun = 3;

double ratio_or_value(double num, double scale) { return scale > 0.0 ? num / scale : num; }

void finish(SolveReport& r, const ForceSpec& F, const SolverConfig& cfg, bool nonlinear) {
  r.norms.x_beta_v = x_beta_norm(r.v1_hat, r.v2_hat, cfg.weight());
  r.norms.y_p = y_norm(r.p_hat);
  r.residual = residual(r.v1_hat, r.v2_hat, r.p_hat, F, cfg, nonlinear);
  r.boundary_mass = std::max(boundary_mass(r.v1_hat), boundary_mass(r.v2_hat));
}

}  // namespace

void SolverConfig::validate() const {
  if (!(beta > 0.25 && beta < 0.5)) {
    throw InvalidArgument("beta must lie in (1/4, 1/2)");
  }
  if (!(u_inf > 0.0) || !std::isfinite(u_inf)) {
    throw InvalidArgument("u_inf must be positive");
  }
  if (!(tol > 0.0)) {
    throw InvalidArgument("tol must be positive");
  }
  if (max_iter < 1) {
    throw InvalidArgument("max_iter must be at least 1");
  }
}

SolveReport oseen_solve(const ForceSpec& F, const SolverConfig& cfg) {
  cfg.validate();
  SolveReport r;
  const QuadraticProducts none;
  r.p_hat = pressure_apply(none, F);
  Velocity v = velocity_apply(r.p_hat, none, F, cfg.u_inf);
  r.v1_hat = std::move(v.v1);
  r.v2_hat = std::move(v.v2);
  r.iterations = 1;
  r.converged = true;
  finish(r, F, cfg, false);
  return r;
}

Velocity picard_step(const Velocity& v, const ForceSpec& F, double u_inf, SpectralField* p_out) {
  const QuadraticProducts q = quadratic_products(v);
  SpectralField p = pressure_apply(q, F);
  Velocity next = velocity_apply(p, q, F, u_inf);
  if (p_out != nullptr) {
    *p_out = std::move(p);
  }
  return next;
}

SolveReport picard_solve(const ForceSpec& F, const SolverConfig& cfg, const Velocity* initial) {
  cfg.validate();
  const NormWeight w = cfg.weight();
  Velocity v{SpectralField{F.F1_hat.grid_ptr(), "v1_hat"}, SpectralField{F.F1_hat.grid_ptr(), "v2_hat"}};
  if (initial != nullptr) {
    require_same_grid(F.F1_hat, initial->v1, "picard_solve");
    require_same_grid(F.F1_hat, initial->v2, "picard_solve");
    v = *initial;
  }

  SolveReport r;
  SpectralField p;
  int rising = 0;
  for (int n = 1; n <= cfg.max_iter; ++n) {
    Velocity next = picard_step(v, F, cfg.u_inf, &p);
    const double inc = x_beta_norm(next.v1 - v.v1, next.v2 - v.v2, w);
    v = std::move(next);
    r.iterations = n;
    if (!r.increments.empty()) {
      const double prev = r.increments.back();
      r.gammas.push_back(prev > 0.0 ? inc / prev : 0.0);
      rising = inc > prev ? rising + 1 : 0;
    }
    r.increments.push_back(inc);
    if (!std::isfinite(inc)) {
      r.diverged = true;
      r.warnings.push_back("non-finite increment at iteration " + std::to_string(n));
      break;
    }
    if (inc < cfg.tol) {
      r.converged = true;
      break;
    }
    if (rising >= kDivergenceRun) {
      r.diverged = true;
      r.warnings.push_back("increment grew for " + std::to_string(kDivergenceRun) +
                           " consecutive iterations; the force is too large for contraction");
      break;
    }
  }
  if (!r.converged && !r.diverged) {
    r.warnings.push_back("no convergence within max_iter = " + std::to_string(cfg.max_iter));
  }
  r.v1_hat = std::move(v.v1);
  r.v2_hat = std::move(v.v2);
  r.p_hat = std::move(p);
  r.v1_hat.set_label("v1_hat");
  r.v2_hat.set_label("v2_hat");
  r.p_hat.set_label("p_hat");
  if (r.v1_hat.all_finite() && r.v2_hat.all_finite() && r.p_hat.all_finite()) {
    finish(r, F, cfg, true);
  }
  return r;
}

ResidualReport residual(const SpectralField& v1, const SpectralField& v2, const SpectralField& p,
                        const ForceSpec& F, const SolverConfig& cfg, bool nonlinear) {
  require_same_grid(v1, v2, "residual");
  require_same_grid(v1, p, "residual");
  require_same_grid(v1, F.F1_hat, "residual");
  require_same_grid(v1, F.F2_hat, "residual");
  const Grid& g = v1.grid();
  const std::size_t n2 = g.n2();
  const double u = cfg.u_inf;

  QuadraticProducts q;
  if (nonlinear) {
    q = quadratic_products(v1, v2);
  } else {
    q = QuadraticProducts{SpectralField{v1.grid_ptr()}, SpectralField{v1.grid_ptr()}, SpectralField{v1.grid_ptr()}};
  }
  const SpectralField dv1 = t_derivative(v1, 1);
  const SpectralField dv2 = t_derivative(v2, 1);
  const SpectralField ddv1 = t_derivative(v1, 2);
  const SpectralField ddv2 = t_derivative(v2, 2);
  const SpectralField dp = t_derivative(p, 1);
  const SpectralField ddp = t_derivative(p, 2);
  const SpectralField dq11 = t_derivative(q.q11, 1);
  const SpectralField dq12 = t_derivative(q.q12, 1);
  const SpectralField ddq11 = t_derivative(q.q11, 2);
  const SpectralField dF1 = t_derivative(F.F1_hat, 1);

  double fmax = 0.0;
  double vmax = 0.0;
  double m1 = 0.0;
  double m2 = 0.0;
  double div = 0.0;
  double pres = 0.0;
  double gmax = 0.0;
  for (std::size_t i = g.interior_begin(); i < g.interior_end(); ++i) {
    for (std::size_t c = 0; c < n2; ++c) {
      const double xi = g.xi(c);
      const cplx ixi = kI * xi;
      const double xi2 = xi * xi;
      fmax = std::max({fmax, std::abs(F.F1_hat(i, c)), std::abs(F.F2_hat(i, c))});
      vmax = std::max({vmax, std::abs(v1(i, c)), std::abs(v2(i, c))});

      const cplx r1 = u * dv1(i, c) + dq11(i, c) + ixi * q.q12(i, c) - (ddv1(i, c) - xi2 * v1(i, c)) + dp(i, c) -
                      F.F1_hat(i, c);
      const cplx r2 = u * dv2(i, c) + dq12(i, c) + ixi * q.q22(i, c) - (ddv2(i, c) - xi2 * v2(i, c)) +
                      ixi * p(i, c) - F.F2_hat(i, c);
      m1 = std::max(m1, std::abs(r1));
      m2 = std::max(m2, std::abs(r2));
      div = std::max(div, std::abs(dv1(i, c) + ixi * v2(i, c)));

      const cplx G = dF1(i, c) + ixi * F.F2_hat(i, c) - ddq11(i, c) - 2.0 * ixi * dq12(i, c) + xi2 * q.q22(i, c);
      gmax = std::max(gmax, std::abs(G));
      pres = std::max(pres, std::abs(ddp(i, c) - xi2 * p(i, c) - G));
    }
  }
  const double scale = std::max(fmax, u * vmax / g.T());
  ResidualReport r;
  r.momentum_rel = {ratio_or_value(m1, scale), ratio_or_value(m2, scale)};
  r.divergence_rel = ratio_or_value(div, scale);
  r.pressure_rel = ratio_or_value(pres, gmax);
  r.interior_region = static_cast<double>(g.interior_end() - g.interior_begin()) / static_cast<double>(g.nt());
  return r;
}

ProfileReport profile_compare(const SolveReport& ns, const SolveReport& oseen, const NormWeight& w) {
  return profile_compare(ns.v1_hat, ns.v2_hat, oseen.v1_hat, oseen.v2_hat, w);
}

}  // namespace oseen
