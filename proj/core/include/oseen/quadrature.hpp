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

#ifndef OSEEN_QUADRATURE_HPP
#define OSEEN_QUADRATURE_HPP

/**
 * \file
 * \brief Adaptive quadrature for the singular and slowly decaying integrals
 * behind the lemma checks.
 *
 * Endpoint singularities |x - theta|^{-1/2} are removed by x = theta +- w^2.
 * Exponentially weighted ranges are cut where the weight drops below
 * exp(-kExpCutoff); the discarded part is below 1e-19 of the weight's peak
 * times sup|g|.
 */

#include <functional>

namespace oseen::quad {

using Fn = std::function<double(double)>;

/// Exponent at which exp(-x) weighted ranges are truncated.
inline constexpr double kExpCutoff = 45.0;

/// Adaptive 61-point Gauss-Kronrod on a finite [a, b]. Throws QuadratureError
/// when the error estimate stays above 100 rel_tol times the L1 norm.
[[nodiscard]] double integrate(const Fn& f, double a, double b, double rel_tol);

/// \int_0^inf exp(-x) |x - theta|^{-1/2} g(x) dx for bounded smooth g.
[[nodiscard]] double exp_singular(const Fn& g, double theta, double rel_tol);

/// \int_0^inf exp(-|theta - x|) x^{-1/2} g(x) dx for bounded smooth g.
[[nodiscard]] double exp_origin(const Fn& g, double theta, double rel_tol);

/// \int_R^inf f(z) dz for f(z) ~ z^{-1-p}, p > 0, through z = R s^{-1/p},
/// which maps the tail onto s in (0, 1] with a bounded integrand.
[[nodiscard]] double algebraic_tail(const Fn& f, double R, double p, double rel_tol);

}  // namespace oseen::quad

#endif
