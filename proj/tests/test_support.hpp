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

#ifndef OSEEN_TEST_SUPPORT_HPP
#define OSEEN_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <random>

#include "oseen/field_equations.hpp"
#include "oseen/grid.hpp"
#include "oseen/spectral.hpp"

namespace oseen::testing {

// Small grid used by most operator tests.
inline GridPtr small_grid(std::size_t nt = 512) { return make_grid(40.0, nt, 40.0, 64); }

inline double max_diff(const SpectralField& a, const SpectralField& b) {
  double m = 0.0;
  const auto x = a.data();
  const auto y = b.data();
  for (std::size_t k = 0; k < x.size(); ++k) {
    m = std::max(m, std::abs(x[k] - y[k]));
  }
  return m;
}

// Transform of a smooth random real field, dealiased so products stay exact.
inline SpectralField random_field(const GridPtr& g, unsigned seed) {
  std::mt19937 rng{seed};
  std::normal_distribution<double> n{0.0, 1.0};
  PhysicalField f{g};
  const double a = n(rng);
  const double b = n(rng);
  const double c = n(rng);
  for (std::size_t i = 0; i < g->nt(); ++i) {
    const double t = g->t(i);
    const double env = std::exp(-t * t / 50.0);
    for (std::size_t m = 0; m < g->n2(); ++m) {
      const double x = g->x2_nodes()[m];
      const double w = 2.0 * 3.141592653589793 / g->L2();
      f(i, m) = env * (a * std::cos(w * x) + b * std::sin(3.0 * w * x) + c * std::cos(5.0 * w * x + 0.3));
    }
  }
  return dealiased(to_spectral(f));
}

inline ForceSpec dipole(const GridPtr& g, double amplitude = 1.0) {
  ForceParams p;
  p.amplitude = amplitude;
  return force_family(ForceFamily::kGaussDipole, p, g);
}

}  // namespace oseen::testing

#endif
