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

#include "oseen/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "oseen/error.hpp"

namespace oseen::quad {

namespace {

constexpr unsigned kMaxDepth = 20;

}  // namespace

double integrate(const Fn& f, double a, double b, double rel_tol) {
  if (!(b > a)) {
    return 0.0;
  }
  // Mapped onto [0, 1]: the library's subdivision misjudges its error on very
  // short intervals.
  const double len = b - a;
  auto mapped = [&](double s) { return len * f(a + len * s); };
  double error = 0.0;
  double l1 = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(mapped, 0.0, 1.0, kMaxDepth, rel_tol, &error, &l1);
  if (!std::isfinite(value) || error > 100.0 * rel_tol * l1 + 1e-300) {
    throw QuadratureError("adaptive quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                          "] stalled: error estimate " + std::to_string(error) + " vs L1 " + std::to_string(l1));
  }
  return value;
}

double exp_singular(const Fn& g, double theta, double rel_tol) {
  const double W = std::sqrt(kExpCutoff);
  if (theta <= 0.0) {
    // x + |theta| = w^2 with w = sqrt|theta| + z, so x = z (2 sqrt|theta| + z) without cancellation.
    const double r = std::sqrt(-theta);
    const double zmax = std::sqrt(-theta + kExpCutoff) - r;
    return integrate(
        [&](double z) {
          const double x = z * (2.0 * r + z);
          return 2.0 * std::exp(-x) * g(x);
        },
        0.0, zmax, rel_tol);
  }
  // Above the singularity: x = theta + w^2.
  const double scale = std::exp(-theta);
  double total = 0.0;
  if (scale > 0.0) {
    total += scale * integrate([&](double w) { return 2.0 * std::exp(-w * w) * g(theta + w * w); }, 0.0, W, rel_tol);
  }
  if (theta > 2.0 * kExpCutoff) {
    // Everything near the singularity sits under exp(-theta/2).
    return total + integrate([&](double x) { return std::exp(-x) / std::sqrt(theta - x) * g(x); }, 0.0, kExpCutoff,
                             rel_tol);
  }
  // Away from the singularity directly, next to it with x = theta - w^2.
  const double half = 0.5 * theta;
  total += integrate([&](double x) { return std::exp(-x) / std::sqrt(theta - x) * g(x); }, 0.0, half, rel_tol);
  total += integrate([&](double w) { return 2.0 * std::exp(w * w - theta) * g(theta - w * w); }, 0.0,
                     std::sqrt(half), rel_tol);
  return total;
}

double exp_origin(const Fn& g, double theta, double rel_tol) {
  if (theta <= 0.0) {
    // exp(-|theta|) \int exp(-x) x^{-1/2} g, with x = w^2.
    const double inner = integrate([&](double w) { return 2.0 * std::exp(-w * w) * g(w * w); }, 0.0,
                                   std::sqrt(kExpCutoff), rel_tol);
    return std::exp(theta) * inner;
  }
  // x = w^2 throughout; the kink of exp(-|theta - x|) sits at w = sqrt(theta).
  // Offsets z from the kink keep theta - w^2 = -+z (2 sqrt(theta) -+ z) exact.
  const double root = std::sqrt(theta);
  const double zlo = root - std::sqrt(std::max(0.0, theta - kExpCutoff));
  const double zhi = std::sqrt(theta + kExpCutoff) - root;
  const double below = integrate(
      [&](double z) {
        const double w = root - z;
        return 2.0 * std::exp(-z * (2.0 * root - z)) * g(w * w);
      },
      0.0, zlo, rel_tol);
  const double above = integrate(
      [&](double z) {
        const double w = root + z;
        return 2.0 * std::exp(-z * (2.0 * root + z)) * g(w * w);
      },
      0.0, zhi, rel_tol);
  return below + above;
}

double algebraic_tail(const Fn& f, double R, double p, double rel_tol) {
  if (!(R > 0.0) || !(p > 0.0)) {
    throw InvalidArgument("algebraic_tail: needs R > 0 and p > 0");
  }
  const double q = 1.0 / p;
  // The integrand tends to a constant as s -> 0; below s_min z would overflow.
  const double s_min = std::pow(R / 1e300, p);
  return integrate(
      [&](double s) {
        s = std::max(s, s_min);
        const double z = R * std::pow(s, -q);
        return f(z) * z * q / s;
      },
      0.0, 1.0, rel_tol);
}

}  // namespace oseen::quad
