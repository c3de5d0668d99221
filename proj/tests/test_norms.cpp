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
#include "oseen/norms.hpp"
#include "oseen/spectral.hpp"

using namespace oseen;

TEST_CASE("weight modes") {
  CHECK(parse_weight_mode("unit") == WeightMode::kUnit);
  CHECK(parse_weight_mode("convective") == WeightMode::kConvective);
  CHECK_THROWS_AS((void)parse_weight_mode("other"), InvalidArgument);
  NormWeight unit{0.375, 4.0, WeightMode::kUnit};
  NormWeight conv{0.375, 4.0, WeightMode::kConvective};
  CHECK(unit(2.0, 3.0) == doctest::Approx(std::pow(1.0 + 18.0, 0.375)));
  CHECK(conv(2.0, 3.0) == doctest::Approx(std::pow(4.0 + 18.0, 0.375)));
  CHECK(conv(-2.0, 3.0) == conv(2.0, 3.0));
  NormWeight bad{0.0, 4.0, WeightMode::kUnit};
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
}

TEST_CASE("X_beta norm of a single spike") {
  auto g = make_grid(10.0, 20, 2.0 * std::numbers::pi, 16);
  SpectralField a{g};
  const std::size_t i = 12;
  const std::size_t c = g->zero_column() + 2;
  a(i, c) = cplx{3.0, 4.0};
  NormWeight w{0.375, 4.0, WeightMode::kConvective};
  const double t = g->t(i);
  const double xi = g->xi(c);
  CHECK(x_beta_norm(a, w) == doctest::Approx(5.0 * w(t, xi)));
  SpectralField b{g};
  b(i, c) = 12.0;
  CHECK(x_beta_norm(a, b, w) == doctest::Approx(13.0 * w(t, xi)));
}

TEST_CASE("Y norm carries the square-root weight") {
  auto g = make_grid(10.0, 20, 2.0 * std::numbers::pi, 16);
  SpectralField b{g};
  b(4, 3) = 2.0;
  CHECK(y_norm(b) == doctest::Approx(2.0 * std::sqrt(std::abs(g->t(4)))));
}

TEST_CASE("straight line fit") {
  std::vector<double> x{0, 1, 2, 3, 4, 5};
  std::vector<double> y;
  for (double v : x) {
    y.push_back(2.0 - 0.5 * v);
  }
  const auto f = fit_line(x, y);
  CHECK(f.slope == doctest::Approx(-0.5));
  CHECK(f.intercept == doctest::Approx(2.0));
  CHECK(f.half_width < 1e-12);
  CHECK(f.samples == 6);
  y[2] += 0.1;
  const auto n = fit_line(x, y);
  CHECK(n.half_width > 0.0);
  CHECK(n.residual_rms > 0.0);
}

namespace {

PhysicalField power_law(double p_down, double p_up) {
  auto g = make_grid(200.0, 2048, 40.0, 32);
  PhysicalField v{g};
  for (std::size_t i = 0; i < g->nt(); ++i) {
    const double t = g->t(i);
    const double amp = t > 0 ? std::pow(1.0 + t, p_down) : std::pow(1.0 - t, p_up);
    for (std::size_t m = 0; m < g->n2(); ++m) {
      const double x = g->x2_nodes()[m];
      v(i, m) = amp * std::exp(-x * x / 10.0);
    }
  }
  return v;
}

}  // namespace

TEST_CASE("decay exponents of synthetic power laws") {
  const auto v = power_law(-0.5, -1.0);
  const auto down = decay_fit(v, Direction::kDownstream, 20.0, 160.0);
  const auto up = decay_fit(v, Direction::kUpstream, 20.0, 160.0);
  CHECK(down.exponent == doctest::Approx(-0.5).epsilon(0.02));
  CHECK(up.exponent == doctest::Approx(-1.0).epsilon(0.01));
  CHECK(down.stations.size() >= kMinDecayStations);
  CHECK(down.stations.size() == down.values.size());
  CHECK_THROWS_AS((void)decay_fit(v, Direction::kDownstream, 20.0, 195.0), InvalidArgument);
  CHECK_THROWS_AS((void)decay_fit(v, Direction::kDownstream, 20.0, 30.0), InvalidArgument);
}

TEST_CASE("wake width of a parabolic wake") {
  auto g = make_grid(200.0, 1024, 200.0, 256);
  PhysicalField v{g};
  PhysicalField flat{g};
  for (std::size_t i = 0; i < g->nt(); ++i) {
    const double t = std::abs(g->t(i));
    for (std::size_t m = 0; m < g->n2(); ++m) {
      const double x = g->x2_nodes()[m];
      v(i, m) = std::exp(-x * x / (1.0 + t));
      flat(i, m) = std::exp(-x * x / 4.0);
    }
  }
  std::vector<double> st{20, 30, 45, 70, 100, 150};
  const auto w = wake_width(v, st);
  CHECK(w.exponent == doctest::Approx(0.5).epsilon(0.04));
  const auto f = wake_width(flat, st);
  CHECK(std::abs(f.exponent) < 0.02);
}

TEST_CASE("tail exponent of an algebraic profile") {
  auto g = make_grid(50.0, 512, 100.0, 256);
  SpectralField a{g};
  SpectralField zero{g};
  const double u = 1.0;
  for (std::size_t i = 0; i < g->nt(); ++i) {
    for (std::size_t c = 0; c < g->n2(); ++c) {
      const double s = u + std::abs(g->t(i)) * g->xi(c) * g->xi(c);
      a(i, c) = std::pow(s, -1.5);
    }
  }
  const auto f = tail_exponent(a, zero, u);
  CHECK(f.samples >= 3);
  CHECK(f.slope == doctest::Approx(-1.5).epsilon(0.02));
}

TEST_CASE("magnitude combines components") {
  auto g = make_grid(10.0, 16, 10.0, 16);
  PhysicalField a{g};
  PhysicalField b{g};
  a(3, 4) = 3.0;
  b(3, 4) = -4.0;
  CHECK(magnitude(a, b)(3, 4) == doctest::Approx(5.0));
}
