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

#include "oseen/kernels.hpp"

#include <cmath>

#include "oseen/error.hpp"

namespace oseen {

OseenSymbols symbols(double xi, double u_inf) {
  if (!(u_inf > 0.0)) {
    throw InvalidArgument("symbols: u_inf must be positive");
  }
  const double delta = std::hypot(u_inf, 2.0 * xi);
  const double lambda2 = 0.5 * (u_inf + delta);
  const double lambda1 = -(xi * xi) / lambda2;
  return {lambda1, lambda2, delta, xi, u_inf};
}

namespace {

// phi2(x) = (x - 1 + e^{-x}) / x^2, the weight of the newer node (over h).
// The closed form loses ~log10(1/x) digits to cancellation, so below
// x = 0.5 the alternating Taylor series sum_{n>=0} (-x)^n / (n+2)! is used.
double phi2(double x) {
  if (x < 0.5) {
    double term = 0.5;
    double sum = 0.0;
    for (int n = 0; n < 30; ++n) {
      sum += term;
      term *= -x / static_cast<double>(n + 3);
      if (std::abs(term) < 1e-18 * std::abs(sum)) {
        break;
      }
    }
    return sum;
  }
  return (x + std::expm1(-x)) / (x * x);
}

// phi1(x) = (1 - e^{-x}) / x; expm1 keeps it accurate down to x = 0.
double phi1(double x) { return x == 0.0 ? 1.0 : -std::expm1(-x) / x; }

void check_rate(double mu, const char* where) {
  if (!(mu >= 0.0) || !std::isfinite(mu)) {
    throw InvalidArgument(std::string(where) + ": decay rate must be finite and >= 0");
  }
}

}  // namespace

ScanWeights scan_weights(double mu, double h) {
  const double x = mu * h;
  const double w_curr = h * phi2(x);
  const double w_prev = h * phi1(x) - w_curr;
  return {std::exp(-x), w_prev, w_curr};
}

void causal_scan(std::span<const cplx> f, double mu, double h, std::span<cplx> out) {
  check_rate(mu, "causal_scan");
  const std::size_t n = f.size();
  if (n == 0) {
    return;
  }
  const ScanWeights w = scan_weights(mu, h);
  // The cell before the first node ramps from zero.
  cplx g = w.w_curr * f[0];
  out[0] = g;
  for (std::size_t j = 1; j < n; ++j) {
    g = w.decay * g + w.w_prev * f[j - 1] + w.w_curr * f[j];
    out[j] = g;
  }
}

std::vector<cplx> causal_scan(std::span<const cplx> f, double mu, double h) {
  std::vector<cplx> out(f.size());
  causal_scan(f, mu, h, out);
  return out;
}

void anticausal_scan(std::span<const cplx> f, double mu, double h, std::span<cplx> out) {
  check_rate(mu, "anticausal_scan");
  const std::size_t n = f.size();
  if (n == 0) {
    return;
  }
  const ScanWeights w = scan_weights(mu, h);
  cplx g = w.w_curr * f[n - 1];
  out[n - 1] = g;
  for (std::size_t j = n - 1; j-- > 0;) {
    g = w.decay * g + w.w_prev * f[j + 1] + w.w_curr * f[j];
    out[j] = g;
  }
}

std::vector<cplx> anticausal_scan(std::span<const cplx> f, double mu, double h) {
  std::vector<cplx> out(f.size());
  anticausal_scan(f, mu, h, out);
  return out;
}

std::vector<cplx> laplace_even(std::span<const cplx> f, double k, double h) {
  check_rate(k, "laplace_even");
  if (k == 0.0) {
    // Integral of the extension: the ramps add h/2 at each end, which makes it
    // the plain sum h * sum_j f_j.
    cplx total{0.0, 0.0};
    for (const auto& v : f) {
      total += v;
    }
    return std::vector<cplx>(f.size(), h * total);
  }
  auto out = causal_scan(f, k, h);
  const auto back = anticausal_scan(f, k, h);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] += back[j];
  }
  return out;
}

std::vector<cplx> laplace_signed(std::span<const cplx> f, double k, double h) {
  check_rate(k, "laplace_signed");
  auto out = causal_scan(f, k, h);
  const auto back = anticausal_scan(f, k, h);
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] -= back[j];
  }
  return out;
}

}  // namespace oseen
