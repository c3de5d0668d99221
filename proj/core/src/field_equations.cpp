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

#include "oseen/field_equations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "oseen/error.hpp"
#include "oseen/parallel.hpp"
#include "oseen/spectral.hpp"

namespace oseen {

namespace {

constexpr cplx kI{0.0, 1.0};

// Mean-zero tolerance on the xi = 0 column, relative to max |F|.
constexpr double kMeanZeroTolerance = 1e-12;

void require_mean_zero(const ForceSpec& F, const char* where) {
  const Grid& g = F.F1_hat.grid();
  const std::size_t c0 = g.zero_column();
  const double scale = std::max(F.F1_hat.max_abs(), F.F2_hat.max_abs());
  double mean = 0.0;
  for (std::size_t i = 0; i < g.nt(); ++i) {
    mean = std::max({mean, std::abs(F.F1_hat(i, c0)), std::abs(F.F2_hat(i, c0))});
  }
  if (mean > kMeanZeroTolerance * scale) {
    throw InvalidArgument(std::string(where) + ": force has a non-zero x2-mean (xi = 0 column)");
  }
}

// Runs fn(c, xi) over the columns with k >= 0 and fills each k < 0 column with
// the conjugate of its mirror. Operators built this way are real in physical
// space by construction; the Nyquist column of every output is zero.
template <typename Fn>
void for_half_columns(const Grid& g, Fn&& fn) {
  const std::size_t first = g.zero_column();
  parallel_for(first, g.n2(), [&](std::size_t c) { fn(c, g.xi(c)); });
}

void mirror_columns(SpectralField& a) {
  const Grid& g = a.grid();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    r[0] = cplx{0.0, 0.0};
    for (std::size_t c = g.zero_column() + 1; c < g.n2(); ++c) {
      r[g.mirror_column(c)] = std::conj(r[c]);
    }
  }
}

void column_or_zero(const SpectralField& f, bool present, std::size_t c, std::span<cplx> out) {
  if (present) {
    f.get_column(c, out);
  } else {
    std::fill(out.begin(), out.end(), cplx{0.0, 0.0});
  }
}

}  // namespace

ForceFamily parse_force_family(std::string_view name) {
  if (name == "gauss-dipole") {
    return ForceFamily::kGaussDipole;
  }
  if (name == "shear-bump") {
    return ForceFamily::kShearBump;
  }
  throw InvalidArgument("unknown force family '" + std::string(name) + "' (expected gauss-dipole or shear-bump)");
}

std::string_view to_string(ForceFamily f) noexcept {
  switch (f) {
    case ForceFamily::kGaussDipole:
      return "gauss-dipole";
    case ForceFamily::kShearBump:
      return "shear-bump";
  }
  return "unknown";
}

ForceSpec force_family(std::string_view name, const ForceParams& params, const GridPtr& grid) {
  return force_family(parse_force_family(name), params, grid);
}

ForceSpec force_family(ForceFamily family, const ForceParams& params, const GridPtr& grid) {
  if (!(params.sigma > 0.0) || !std::isfinite(params.sigma)) {
    throw InvalidArgument("force_family: sigma must be positive");
  }
  if (!grid) {
    throw InvalidArgument("force_family: null grid");
  }
  const Grid& g = *grid;
  const double A = params.amplitude;
  const double s = params.sigma;
  ForceSpec F{SpectralField{grid, "F1_hat"}, SpectralField{grid, "F2_hat"}, family, params};

  if (family == ForceFamily::kGaussDipole) {
    // d/dx2 of the Gaussian transforms to i xi sqrt(pi) sigma exp(-sigma^2 xi^2/4 - i xi c2).
    const double c = std::cos(params.phi);
    const double sn = std::sin(params.phi);
    std::vector<cplx> profile(g.n2());
    for (std::size_t k = 1; k < g.n2(); ++k) {
      const double xi = g.xi(k);
      profile[k] = kI * xi * std::sqrt(std::numbers::pi) * s * std::exp(-0.25 * s * s * xi * xi) *
                   std::exp(-kI * xi * params.c2);
    }
    profile[g.zero_column()] = cplx{0.0, 0.0};
    for (std::size_t i = 0; i < g.nt(); ++i) {
      const double dt = (g.t(i) - params.c1) / s;
      const double envelope = A * std::exp(-dt * dt);
      auto r1 = F.F1_hat.row(i);
      auto r2 = F.F2_hat.row(i);
      for (std::size_t k = 1; k < g.n2(); ++k) {
        r1[k] = envelope * c * profile[k];
        r2[k] = envelope * sn * profile[k];
      }
    }
    mirror_columns(F.F1_hat);
    mirror_columns(F.F2_hat);
    return F;
  }

  PhysicalField f1{grid, "F1"};
  for (std::size_t i = 0; i < g.nt(); ++i) {
    const double dt = (g.t(i) - params.c1) / s;
    const double envelope = A * std::exp(-dt * dt);
    auto r = f1.row(i);
    for (std::size_t m = 0; m < g.n2(); ++m) {
      const double y = (g.x2_nodes()[m] - params.c2) / s;
      const double y2 = y * y;
      r[m] = envelope * (-4.0 * y2 * y / s) * std::exp(-y2 * y2);
    }
  }
  F.F1_hat = to_spectral(f1);
  F.F1_hat.set_label("F1_hat");
  // The sampled derivative has a round-off mean; the continuum one is zero.
  for (std::size_t i = 0; i < g.nt(); ++i) {
    F.F1_hat(i, g.zero_column()) = cplx{0.0, 0.0};
    F.F1_hat(i, 0) = cplx{0.0, 0.0};
  }
  return F;
}

ForceSpec scaled(ForceSpec f, double s) {
  f.F1_hat *= s;
  f.F2_hat *= s;
  f.params.amplitude *= s;
  return f;
}

ForceSpec zero_force(const GridPtr& grid) {
  ForceParams p;
  p.amplitude = 0.0;
  return ForceSpec{SpectralField{grid, "F1_hat"}, SpectralField{grid, "F2_hat"}, ForceFamily::kGaussDipole, p};
}

QuadraticProducts quadratic_products(const SpectralField& v1, const SpectralField& v2) {
  auto t = spectral_products(v1, v2);
  t.aa.set_label("q11");
  t.ab.set_label("q12");
  t.bb.set_label("q22");
  return QuadraticProducts{std::move(t.aa), std::move(t.ab), std::move(t.bb)};
}

SpectralField pressure_apply(const QuadraticProducts& q, const ForceSpec& F) {
  require_same_grid(F.F1_hat, F.F2_hat, "pressure_apply");
  const bool has_q = !q.empty();
  if (has_q) {
    require_same_grid(F.F1_hat, q.q11, "pressure_apply");
    require_same_grid(F.F1_hat, q.q12, "pressure_apply");
    require_same_grid(F.F1_hat, q.q22, "pressure_apply");
  }
  require_mean_zero(F, "pressure_apply");

  const Grid& g = F.F1_hat.grid();
  const std::size_t nt = g.nt();
  const double h = g.ht();
  SpectralField p{F.F1_hat.grid_ptr(), "p_hat"};

  for_half_columns(g, [&](std::size_t c, double xi) {
    std::vector<cplx> f1(nt), f2(nt), q11(nt), q12(nt), q22(nt), fwd(nt), bwd(nt), out(nt);
    F.F1_hat.get_column(c, f1);
    F.F2_hat.get_column(c, f2);
    column_or_zero(q.q11, has_q, c, q11);
    column_or_zero(q.q12, has_q, c, q12);
    column_or_zero(q.q22, has_q, c, q22);

    const double k = std::abs(xi);
    const double sg = xi > 0.0 ? 1.0 : 0.0;  // only k >= 0 columns are visited
    // E = C + A and S = C - A, so each term splits into a causal part (fwd)
    // and an anticausal part (bwd).
    for (std::size_t j = 0; j < nt; ++j) {
      const cplx even = -0.5 * kI * sg * f2[j] + 0.5 * k * (q11[j] - q22[j]);
      const cplx odd = 0.5 * f1[j] - kI * xi * q12[j];
      fwd[j] = even + odd;
      bwd[j] = even - odd;
    }
    causal_scan(fwd, k, h, out);
    anticausal_scan(bwd, k, h, fwd);
    for (std::size_t j = 0; j < nt; ++j) {
      out[j] += fwd[j] - q11[j];
    }
    p.set_column(c, out);
  });
  mirror_columns(p);
  return p;
}

Velocity velocity_apply(const SpectralField& p_hat, const QuadraticProducts& q, const ForceSpec& F, double u_inf) {
  if (!(u_inf > 0.0)) {
    throw InvalidArgument("velocity_apply: u_inf must be positive");
  }
  require_same_grid(p_hat, F.F1_hat, "velocity_apply");
  require_same_grid(p_hat, F.F2_hat, "velocity_apply");
  const bool has_q = !q.empty();
  if (has_q) {
    require_same_grid(p_hat, q.q11, "velocity_apply");
    require_same_grid(p_hat, q.q12, "velocity_apply");
    require_same_grid(p_hat, q.q22, "velocity_apply");
  }

  const Grid& g = p_hat.grid();
  const std::size_t nt = g.nt();
  const double h = g.ht();
  Velocity v{SpectralField{p_hat.grid_ptr(), "v1_hat"}, SpectralField{p_hat.grid_ptr(), "v2_hat"}};

  for_half_columns(g, [&](std::size_t c, double xi) {
    std::vector<cplx> p(nt), f1(nt), f2(nt), q11(nt), q12(nt), q22(nt), fwd(nt), bwd(nt), out(nt);
    p_hat.get_column(c, p);
    F.F1_hat.get_column(c, f1);
    F.F2_hat.get_column(c, f2);
    column_or_zero(q.q11, has_q, c, q11);
    column_or_zero(q.q12, has_q, c, q12);
    column_or_zero(q.q22, has_q, c, q22);

    const OseenSymbols s = symbols(xi, u_inf);
    const double inv_d = 1.0 / s.delta;
    const double rate_fwd = -s.lambda1;
    const double rate_bwd = s.lambda2;
    const cplx ixi = kI * xi;

    // v1: K(F1 - i xi q12)/D plus the integrated-by-parts d/dt (p + q11) term.
    for (std::size_t j = 0; j < nt; ++j) {
      const cplx base = f1[j] - ixi * q12[j];
      const cplx grad = p[j] + q11[j];
      fwd[j] = inv_d * (base - s.lambda1 * grad);
      bwd[j] = inv_d * (base - s.lambda2 * grad);
    }
    causal_scan(fwd, rate_fwd, h, out);
    anticausal_scan(bwd, rate_bwd, h, fwd);
    for (std::size_t j = 0; j < nt; ++j) {
      out[j] += fwd[j];
    }
    v.v1.set_column(c, out);

    // v2: K(F2 - i xi (p + q22))/D plus the d/dt q12 term.
    for (std::size_t j = 0; j < nt; ++j) {
      const cplx base = f2[j] - ixi * (p[j] + q22[j]);
      fwd[j] = inv_d * (base - s.lambda1 * q12[j]);
      bwd[j] = inv_d * (base - s.lambda2 * q12[j]);
    }
    causal_scan(fwd, rate_fwd, h, out);
    anticausal_scan(bwd, rate_bwd, h, fwd);
    for (std::size_t j = 0; j < nt; ++j) {
      out[j] += fwd[j];
    }
    v.v2.set_column(c, out);
  });
  mirror_columns(v.v1);
  mirror_columns(v.v2);
  return v;
}

std::vector<cplx> fundamental_solve(std::span<const cplx> H, double xi, double u_inf, double h) {
  const OseenSymbols s = symbols(xi, u_inf);
  auto out = causal_scan(H, -s.lambda1, h);
  const auto back = anticausal_scan(H, s.lambda2, h);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = (out[j] + back[j]) / s.delta;
  }
  return out;
}

AdmissibilityReport admissibility(const ForceSpec& F, double beta, double u_inf) {
  if (!(beta > 0.25 && beta < 0.5)) {
    throw InvalidArgument("admissibility: beta must lie in (1/4, 1/2)");
  }
  if (!(u_inf > 0.0)) {
    throw InvalidArgument("admissibility: u_inf must be positive");
  }
  require_same_grid(F.F1_hat, F.F2_hat, "admissibility");
  require_mean_zero(F, "admissibility");

  const Grid& g = F.F1_hat.grid();
  double sup = 0.0;
  for (std::size_t i = 0; i < g.nt(); ++i) {
    const double w = std::sqrt(std::abs(g.t(i)));
    for (std::size_t c = 0; c < g.n2(); ++c) {
      if (c == g.zero_column()) {
        continue;
      }
      const double mag = std::hypot(std::abs(F.F1_hat(i, c)), std::abs(F.F2_hat(i, c)));
      sup = std::max(sup, w * mag / std::abs(g.xi(c)));
    }
  }
  AdmissibilityReport r;
  r.N_F = sup;
  r.threshold = std::pow(u_inf, 2.0 * beta - 0.5);
  r.ratio = r.N_F / r.threshold;
  r.boundary_mass = std::max(boundary_mass(F.F1_hat), boundary_mass(F.F2_hat));
  return r;
}

}  // namespace oseen
