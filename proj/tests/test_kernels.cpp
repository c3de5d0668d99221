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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "oseen/error.hpp"
#include "oseen/kernels.hpp"

using namespace oseen;

namespace {

std::vector<double> nodes(double T, std::size_t n) {
  const double h = 2.0 * T / static_cast<double>(n);
  std::vector<double> t(n);
  for (std::size_t j = 0; j < n; ++j) {
    t[j] = (static_cast<double>(j) + 0.5 - static_cast<double>(n) / 2.0) * h;
  }
  return t;
}

// \int_{-inf}^t exp(-mu (t - s)) exp(-s^2) ds
double causal_gauss(double t, double mu) {
  return 0.5 * std::sqrt(std::numbers::pi) * std::exp(mu * mu / 4.0 - mu * t) * std::erfc(mu / 2.0 - t);
}

double causal_gauss_error(std::size_t n, double mu) {
  const double T = 10.0;
  const auto t = nodes(T, n);
  std::vector<cplx> f(n);
  for (std::size_t j = 0; j < n; ++j) {
    f[j] = std::exp(-t[j] * t[j]);
  }
  const auto g = causal_scan(f, mu, 2.0 * T / static_cast<double>(n));
  double e = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    e = std::max(e, std::abs(g[j].real() - causal_gauss(t[j], mu)));
  }
  return e;
}

// Composite 20-point Gauss-Legendre applied to the piecewise-linear interpolant.
std::vector<cplx> direct_causal(const std::vector<cplx>& f, double mu, double h) {
  static const double x[] = {-0.9931285991850949, -0.9639719272779138, -0.9122344282513259, -0.8391169718222188,
                             -0.7463319064601508, -0.6360536807265150, -0.5108670019508271, -0.3737060887154195,
                             -0.2277858511416451, -0.0765265211334973, 0.0765265211334973,  0.2277858511416451,
                             0.3737060887154195,  0.5108670019508271,  0.6360536807265150,  0.7463319064601508,
                             0.8391169718222188,  0.9122344282513259,  0.9639719272779138,  0.9931285991850949};
  static const double w[] = {0.0176140071391521, 0.0406014298003869, 0.0626720483341091, 0.0832767415767048,
                             0.1019301198172404, 0.1181945319615184, 0.1316886384491766, 0.1420961093183820,
                             0.1491729864726037, 0.1527533871307258, 0.1527533871307258, 0.1491729864726037,
                             0.1420961093183820, 0.1316886384491766, 0.1181945319615184, 0.1019301198172404,
                             0.0832767415767048, 0.0626720483341091, 0.0406014298003869, 0.0176140071391521};
  const std::size_t n = f.size();
  // Node j sits at (j + 1/2) h; ghost zeros at -h/2 and (n + 1/2) h.
  auto value = [&](long j) { return (j < 0 || j >= static_cast<long>(n)) ? cplx{} : f[static_cast<std::size_t>(j)]; };
  std::vector<cplx> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double ti = (static_cast<double>(i) + 0.5) * h;
    cplx acc{};
    for (long j = -1; j < static_cast<long>(i); ++j) {
      const double a = (static_cast<double>(j) + 0.5) * h;
      for (int q = 0; q < 20; ++q) {
        const double s = 0.5 * h * (x[q] + 1.0);
        const cplx fs = value(j) * (1.0 - s / h) + value(j + 1) * (s / h);
        acc += 0.5 * h * w[q] * std::exp(-mu * (ti - a - s)) * fs;
      }
    }
    out[i] = acc;
  }
  return out;
}

}  // namespace

TEST_CASE("symbol identities") {
  for (double u : {0.5, 4.0, 30.0}) {
    for (double xi : {0.0, 1e-6, 0.3, 2.0, 50.0}) {
      const auto s = symbols(xi, u);
      const double scale = std::max({s.lambda2, u, xi * xi});
      CHECK(std::abs(s.lambda1 + s.lambda2 - u) <= 4.0 * 2.2e-16 * scale);
      CHECK(std::abs(s.lambda1 * s.lambda2 + xi * xi) <= 4.0 * 2.2e-16 * scale * scale);
      CHECK(std::abs(s.lambda2 - s.lambda1 - s.delta) <= 4.0 * 2.2e-16 * scale);
      CHECK(s.lambda1 <= 0.0);
      CHECK(s.lambda2 >= u);
    }
  }
  // No cancellation for tiny xi: lambda1 ~ -xi^2 / u.
  const auto s = symbols(1e-9, 2.0);
  CHECK(s.lambda1 == doctest::Approx(-0.5e-18).epsilon(1e-12));
  CHECK_THROWS_AS((void)symbols(1.0, 0.0), InvalidArgument);
}

TEST_CASE("scan weights integrate linear data exactly") {
  const double h = 0.5;
  for (double mu : {0.0, 1e-12, 1e-7, 0.3, 2.0, 40.0}) {
    const auto w = scan_weights(mu, h);
    const double x = mu * h;
    CHECK(w.decay == doctest::Approx(std::exp(-x)));
    // \int_0^h exp(-mu (h - s)) ds and \int_0^h exp(-mu (h - s)) s / h ds
    const double one = x == 0.0 ? h : -std::expm1(-x) / mu;
    const double ramp = x < 1e-3 ? h * (0.5 - x / 6.0 + x * x / 24.0) : (x - 1.0 + std::exp(-x)) / (mu * x);
    CHECK(w.w_prev + w.w_curr == doctest::Approx(one).epsilon(1e-14));
    CHECK(w.w_curr == doctest::Approx(ramp).epsilon(1e-12));
  }
}

TEST_CASE("causal scan matches direct quadrature") {
  const std::size_t n = 64;
  const double h = 0.25;
  std::vector<cplx> f(n);
  for (std::size_t j = 0; j < n; ++j) {
    f[j] = cplx{std::sin(0.3 * static_cast<double>(j)), std::cos(0.11 * static_cast<double>(j * j))};
  }
  for (double mu : {0.0, 0.05, 1.0, 4.0, 30.0}) {
    const auto g = causal_scan(f, mu, h);
    const auto d = direct_causal(f, mu, h);
    double err = 0.0;
    double ref = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      err = std::max(err, std::abs(g[j] - d[j]));
      ref = std::max(ref, std::abs(d[j]));
    }
    CHECK(err <= 1e-12 * ref);
  }
}

TEST_CASE("anticausal scan is the mirrored causal scan") {
  const std::size_t n = 40;
  std::vector<cplx> f(n);
  for (std::size_t j = 0; j < n; ++j) {
    f[j] = cplx{std::exp(-0.01 * static_cast<double>(j * j)), 0.2 * static_cast<double>(j % 3)};
  }
  std::vector<cplx> r(f.rbegin(), f.rend());
  const auto a = anticausal_scan(f, 1.7, 0.3);
  const auto c = causal_scan(r, 1.7, 0.3);
  for (std::size_t j = 0; j < n; ++j) {
    CHECK(std::abs(a[j] - c[n - 1 - j]) < 1e-15);
  }
}

TEST_CASE("even and signed Laplace kernels") {
  const std::size_t n = 32;
  const double h = 0.2;
  std::vector<cplx> f(n);
  cplx total{};
  for (std::size_t j = 0; j < n; ++j) {
    f[j] = cplx{1.0 + 0.1 * static_cast<double>(j), -0.5};
    total += f[j];
  }
  const auto e0 = laplace_even(f, 0.0, h);
  for (const auto& z : e0) {
    CHECK(std::abs(z - h * total) < 1e-13);
  }
  const double k = 0.8;
  const auto e = laplace_even(f, k, h);
  const auto s = laplace_signed(f, k, h);
  const auto c = causal_scan(f, k, h);
  const auto a = anticausal_scan(f, k, h);
  for (std::size_t j = 0; j < n; ++j) {
    CHECK(std::abs(e[j] - (c[j] + a[j])) < 1e-14);
    CHECK(std::abs(s[j] - (c[j] - a[j])) < 1e-14);
  }
}

TEST_CASE("causal scan of a gaussian converges at second order") {
  for (double mu : {0.1, 1.0, 4.0}) {
    const double e1 = causal_gauss_error(512, mu);
    const double e2 = causal_gauss_error(1024, mu);
    const double order = std::log2(e1 / e2);
    CHECK(e2 < 1e-4);
    CHECK(order == doctest::Approx(2.0).epsilon(0.1));
  }
}

TEST_CASE("large mu h stays bounded") {
  const std::size_t n = 16;
  std::vector<cplx> f(n, cplx{1.0, 0.0});
  const double mu = 1e8;
  const auto g = causal_scan(f, mu, 0.5);
  for (std::size_t j = 1; j < n; ++j) {
    CHECK(std::isfinite(g[j].real()));
    CHECK(g[j].real() == doctest::Approx(1.0 / mu).epsilon(1e-6));
  }
}

TEST_CASE("negative rates are rejected") {
  std::vector<cplx> f(8, cplx{1.0, 0.0});
  CHECK_THROWS_AS((void)causal_scan(f, -1.0, 0.1), InvalidArgument);
  CHECK_THROWS_AS((void)anticausal_scan(f, -1.0, 0.1), InvalidArgument);
}
