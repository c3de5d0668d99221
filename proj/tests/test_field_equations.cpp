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

#include <cmath>
#include <numbers>

#include "oseen/error.hpp"
#include "oseen/field_equations.hpp"
#include "oseen/spectral.hpp"
#include "test_support.hpp"

using namespace oseen;
using oseen::testing::dipole;
using oseen::testing::max_diff;
using oseen::testing::random_field;
using oseen::testing::small_grid;

namespace {

// Largest |p'' - xi^2 p - G| over interior rows relative to max |G|, with
// G = dF1/dt + i xi F2 and the derivatives taken by finite differences.
double poisson_defect(const ForceSpec& F, const SpectralField& p) {
  const Grid& g = p.grid();
  const auto p2 = t_derivative(p, 2);
  const auto f1 = t_derivative(F.F1_hat, 1);
  double defect = 0.0;
  double scale = 0.0;
  for (std::size_t i = g.interior_begin(); i < g.interior_end(); ++i) {
    for (std::size_t c = 1; c < g.n2(); ++c) {
      const double xi = g.xi(c);
      const cplx G = f1(i, c) + cplx{0.0, xi} * F.F2_hat(i, c);
      defect = std::max(defect, std::abs(p2(i, c) - xi * xi * p(i, c) - G));
      scale = std::max(scale, std::abs(G));
    }
  }
  return defect / scale;
}

}  // namespace

TEST_CASE("force family names") {
  CHECK(parse_force_family("gauss-dipole") == ForceFamily::kGaussDipole);
  CHECK(parse_force_family("shear-bump") == ForceFamily::kShearBump);
  CHECK(to_string(ForceFamily::kShearBump) == "shear-bump");
  CHECK_THROWS_AS((void)parse_force_family("vortex"), InvalidArgument);
  ForceParams bad;
  bad.sigma = 0.0;
  CHECK_THROWS_AS((void)force_family(ForceFamily::kGaussDipole, bad, small_grid()), InvalidArgument);
}

TEST_CASE("dipole closed form agrees with the numerical transform") {
  auto g = make_grid(8.0, 64, 40.0, 256);
  ForceParams p;
  p.amplitude = 1.3;
  p.sigma = 1.2;
  p.c1 = 0.4;
  p.c2 = -0.7;
  p.phi = 0.6;
  const auto F = force_family(ForceFamily::kGaussDipole, p, g);
  PhysicalField f1{g};
  PhysicalField f2{g};
  for (std::size_t i = 0; i < g->nt(); ++i) {
    for (std::size_t m = 0; m < g->n2(); ++m) {
      const double y = g->x2_nodes()[m] - p.c2;
      const double r2 = (g->t(i) - p.c1) * (g->t(i) - p.c1) + y * y;
      const double d = p.amplitude * (-2.0 * y / (p.sigma * p.sigma)) * std::exp(-r2 / (p.sigma * p.sigma));
      f1(i, m) = d * std::cos(p.phi);
      f2(i, m) = d * std::sin(p.phi);
    }
  }
  CHECK(max_diff(F.F1_hat, to_spectral(f1)) < 1e-10);
  CHECK(max_diff(F.F2_hat, to_spectral(f2)) < 1e-10);
}

TEST_CASE("forces have zero mean and Nyquist columns") {
  const auto g = small_grid();
  for (auto fam : {ForceFamily::kGaussDipole, ForceFamily::kShearBump}) {
    const auto F = force_family(fam, ForceParams{}, g);
    CHECK(F.F1_hat.max_abs() > 0.0);
    for (std::size_t i = 0; i < g->nt(); ++i) {
      CHECK(F.F1_hat(i, g->zero_column()) == cplx{});
      CHECK(F.F2_hat(i, g->zero_column()) == cplx{});
      CHECK(F.F1_hat(i, 0) == cplx{});
    }
    CHECK(F.F1_hat.hermitian_defect() == 0.0);
  }
}

TEST_CASE("shear bump is a pure x2-derivative in the first component") {
  const auto g = small_grid();
  const auto F = force_family(ForceFamily::kShearBump, ForceParams{}, g);
  CHECK(F.F2_hat.max_abs() == 0.0);
  const auto f1 = to_physical(F.F1_hat);
  // Odd in x2 about c2 = 0 up to the grid offset.
  double odd = 0.0;
  for (std::size_t m = 1; m < g->n2(); ++m) {
    odd = std::max(odd, std::abs(f1(g->nt() / 2, m) + f1(g->nt() / 2, g->n2() - m)));
  }
  CHECK(odd < 1e-12 * f1.max_abs());
}

TEST_CASE("admissibility is homogeneous of degree one") {
  const auto g = small_grid();
  const auto F = dipole(g);
  const auto a = admissibility(F, 0.375, 4.0);
  const auto b = admissibility(scaled(F, 3.0), 0.375, 4.0);
  CHECK(b.N_F == doctest::Approx(3.0 * a.N_F).epsilon(1e-14));
  CHECK(a.threshold == doctest::Approx(std::pow(4.0, 0.25)));
  CHECK(a.ratio == doctest::Approx(a.N_F / a.threshold));
  CHECK(a.boundary_mass < 1e-12);
  CHECK_THROWS_AS((void)admissibility(F, 0.25, 4.0), InvalidArgument);
  CHECK_THROWS_AS((void)admissibility(F, 0.5, 4.0), InvalidArgument);
  CHECK_THROWS_AS((void)admissibility(F, 0.375, 0.0), InvalidArgument);
}

TEST_CASE("pressure solves the Poisson equation with second-order error") {
  ForceParams p;
  p.sigma = 2.0;
  const auto coarse = force_family(ForceFamily::kGaussDipole, p, make_grid(40.0, 512, 40.0, 64));
  const auto fine = force_family(ForceFamily::kGaussDipole, p, make_grid(40.0, 1024, 40.0, 64));
  const double e1 = poisson_defect(coarse, pressure_apply({}, coarse));
  const double e2 = poisson_defect(fine, pressure_apply({}, fine));
  CHECK(e2 < 2e-3);
  CHECK(std::log2(e1 / e2) > 1.8);
}

TEST_CASE("pressure and velocity are Hermitian and linear in the force") {
  const auto g = small_grid();
  ForceParams pa;
  pa.phi = 0.4;
  ForceParams pb;
  pb.c1 = 2.0;
  pb.sigma = 1.5;
  const auto Fa = force_family(ForceFamily::kGaussDipole, pa, g);
  const auto Fb = force_family(ForceFamily::kShearBump, pb, g);
  ForceSpec Fs = Fa;
  Fs.F1_hat += Fb.F1_hat;
  Fs.F2_hat += Fb.F2_hat;

  const auto pA = pressure_apply({}, Fa);
  const auto pB = pressure_apply({}, Fb);
  const auto pS = pressure_apply({}, Fs);
  CHECK(max_diff(pS, pA + pB) < 1e-13 * pS.max_abs());
  CHECK(pS.hermitian_defect() < 1e-14 * pS.max_abs());

  const auto vA = velocity_apply(pA, {}, Fa, 4.0);
  const auto vB = velocity_apply(pB, {}, Fb, 4.0);
  const auto vS = velocity_apply(pS, {}, Fs, 4.0);
  CHECK(max_diff(vS.v1, vA.v1 + vB.v1) < 1e-13 * vS.v1.max_abs());
  CHECK(max_diff(vS.v2, vA.v2 + vB.v2) < 1e-13 * vS.v2.max_abs());
  CHECK(vS.v1.hermitian_defect() < 1e-14 * vS.v1.max_abs());
  CHECK(vS.v2.hermitian_defect() < 1e-14 * vS.v2.max_abs());
}

TEST_CASE("fundamental solution reproduces a manufactured profile") {
  const double u = 4.0;
  const double w = 3.0;
  auto err_at = [&](std::size_t nt, double xi) {
    auto g = make_grid(40.0, nt, 40.0, 16);
    std::vector<cplx> H(nt);
    std::vector<double> v(nt);
    for (std::size_t i = 0; i < nt; ++i) {
      const double s = g->t(i) / w;
      const double e = std::exp(-s * s);
      v[i] = e * (1.0 + s);
      const double d1 = e * (1.0 - 2.0 * s - 2.0 * s * s) / w;
      const double d2 = e * (-6.0 * s - 2.0 + 4.0 * s * s * s + 4.0 * s * s) / (w * w);
      H[i] = u * d1 - d2 + xi * xi * v[i];
    }
    const auto r = fundamental_solve(H, xi, u, g->ht());
    double e = 0.0;
    for (std::size_t i = 0; i < nt; ++i) {
      e = std::max(e, std::abs(r[i] - v[i]));
    }
    return e;
  };
  for (double xi : {0.0, 0.5, 3.0}) {
    const double e1 = err_at(1024, xi);
    const double e2 = err_at(2048, xi);
    CHECK(e2 < 1e-3);
    CHECK(std::log2(e1 / e2) == doctest::Approx(2.0).epsilon(0.1));
  }
}

TEST_CASE("nonlinear terms enter pressure and velocity") {
  const auto g = small_grid();
  const auto F = dipole(g);
  const auto v0 = velocity_apply(pressure_apply({}, F), {}, F, 4.0);
  const auto q = quadratic_products(v0);
  CHECK(q.q11.max_abs() > 0.0);
  CHECK(max_diff(q.q12, spectral_product(v0.v1, v0.v2)) == 0.0);
  const auto p = pressure_apply(q, F);
  const auto v = velocity_apply(p, q, F, 4.0);
  CHECK(max_diff(v.v1, v0.v1) > 0.0);
  CHECK(v.v1.all_finite());
  CHECK(v.v2.hermitian_defect() < 1e-14 * v.v2.max_abs());
}

TEST_CASE("operators validate their inputs") {
  const auto g = small_grid();
  auto F = dipole(g);
  F.F1_hat(10, g->zero_column()) = 1.0;
  CHECK_THROWS_AS((void)pressure_apply({}, F), InvalidArgument);
  const auto G = dipole(make_grid(40.0, 256, 40.0, 64));
  const auto pG = pressure_apply({}, G);
  CHECK_THROWS_AS((void)velocity_apply(pG, {}, dipole(g), 4.0), GridMismatch);
  CHECK_THROWS_AS((void)velocity_apply(pG, {}, G, 0.0), InvalidArgument);
}

TEST_CASE("random dealiased products stay real") {
  const auto g = small_grid(128);
  const auto a = random_field(g, 11);
  const auto b = random_field(g, 12);
  const auto q = quadratic_products(a, b);
  CHECK(q.q12.hermitian_defect() == 0.0);
}
