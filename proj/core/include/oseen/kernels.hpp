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

#ifndef OSEEN_KERNELS_HPP
#define OSEEN_KERNELS_HPP

/**
 * \file
 * \brief Oseen symbols and O(N) exponential-kernel convolutions along t.
 *
 * All scans act on one column sampled at the staggered t nodes with spacing h.
 * The input is extended by its piecewise-linear interpolant between nodes,
 * ramps linearly to zero over one cell beyond each end node, and vanishes
 * outside that. Every scan is the exact integral of that extension, computed
 * by a two-term recurrence, so it is unconditionally stable for any mu*h.
 */

#include <span>
#include <vector>

#include "oseen/grid.hpp"

namespace oseen {

/// Roots of lambda^2 - u lambda - xi^2 = 0 for one frequency.
struct OseenSymbols {
  double lambda1;  ///< <= 0; forward (t > 0) decay rate of the fundamental solution.
  double lambda2;  ///< >= u_inf; backward (t < 0) decay rate.
  double delta;    ///< sqrt(u_inf^2 + 4 xi^2) = lambda2 - lambda1.
  double xi;
  double u_inf;
};

/// Throws InvalidArgument if u_inf <= 0. lambda1 is formed as -xi^2/lambda2,
/// which has no cancellation for |xi| << u_inf.
[[nodiscard]] OseenSymbols symbols(double xi, double u_inf);

/// Local weights of the piecewise-linear exponential quadrature on one cell:
/// \int_0^h exp(-mu (h - s)) [f0 (1 - s/h) + f1 s/h] ds = w_prev f0 + w_curr f1,
/// together with the decay factor exp(-mu h).
struct ScanWeights {
  double decay;
  double w_prev;
  double w_curr;
};

[[nodiscard]] ScanWeights scan_weights(double mu, double h);

/// g(t) = \int_{-inf}^t exp(-mu (t - s)) f(s) ds. Throws on mu < 0.
[[nodiscard]] std::vector<cplx> causal_scan(std::span<const cplx> f, double mu, double h);
void causal_scan(std::span<const cplx> f, double mu, double h, std::span<cplx> out);

/// g(t) = \int_t^inf exp(-mu (s - t)) f(s) ds. Throws on mu < 0.
[[nodiscard]] std::vector<cplx> anticausal_scan(std::span<const cplx> f, double mu, double h);
void anticausal_scan(std::span<const cplx> f, double mu, double h, std::span<cplx> out);

/// \int_R exp(-k |t - s|) f(s) ds. At k = 0 every entry is the total integral.
[[nodiscard]] std::vector<cplx> laplace_even(std::span<const cplx> f, double k, double h);

/// \int_R sgn(t - s) exp(-k |t - s|) f(s) ds.
[[nodiscard]] std::vector<cplx> laplace_signed(std::span<const cplx> f, double k, double h);

}  // namespace oseen

#endif
