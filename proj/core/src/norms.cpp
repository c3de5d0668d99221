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

#include "oseen/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/distributions/students_t.hpp>

#include "oseen/error.hpp"
#include "oseen/spectral.hpp"

namespace oseen {

namespace {

// Station spacing factor for decay fits.
const double kStationRatio = std::pow(2.0, 0.25);

// Bins per decade for the tail envelope.
constexpr double kTailBinsPerDecade = 8.0;

// Envelope sup_{x2} |v| at row i.
double row_sup(const PhysicalField& v, std::size_t i) {
  double m = 0.0;
  for (double x : v.row(i)) {
    m = std::max(m, std::abs(x));
  }
  return m;
}

// Row index bracket for t: returns i with t(i) <= t < t(i+1).
std::size_t bracket(const Grid& g, double t) {
  const double pos = t / g.ht() + 0.5 * static_cast<double>(g.nt()) - 0.5;
  return static_cast<std::size_t>(std::floor(pos));
}

void require_interior(const Grid& g, double t, const char* where) {
  const double limit = (1.0 - kBoundaryBufferFraction) * g.T();
  if (!(std::abs(t) <= limit)) {
    throw InvalidArgument(std::string(where) + ": station |x1| = " + std::to_string(std::abs(t)) +
                          " lies outside the interior |x1| <= " + std::to_string(limit));
  }
}

double sum_pairwise(const double* x, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s += x[i];
    }
    return s;
  }
  const std::size_t h = n / 2;
  return sum_pairwise(x, h) + sum_pairwise(x + h, n - h);
}

double mean(const std::vector<double>& x) { return sum_pairwise(x.data(), x.size()) / static_cast<double>(x.size()); }

}  // namespace

WeightMode parse_weight_mode(std::string_view name) {
  if (name == "unit") {
    return WeightMode::kUnit;
  }
  if (name == "convective") {
    return WeightMode::kConvective;
  }
  throw InvalidArgument("unknown weight mode '" + std::string(name) + "' (expected unit or convective)");
}

std::string_view to_string(WeightMode m) noexcept { return m == WeightMode::kUnit ? "unit" : "convective"; }

void NormWeight::validate() const {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw InvalidArgument("norm weight: beta must lie in (0, 1]");
  }
  if (!(u_inf > 0.0)) {
    throw InvalidArgument("norm weight: u_inf must be positive");
  }
}

double NormWeight::operator()(double t, double xi) const {
  const double base = mode == WeightMode::kUnit ? 1.0 : u_inf;
  return std::pow(base + std::abs(t * xi * xi), beta);
}

double x_beta_norm(const SpectralField& a, const NormWeight& w) {
  w.validate();
  const Grid& g = a.grid();
  double sup = 0.0;
  for (std::size_t i = g.interior_begin(); i < g.interior_end(); ++i) {
    const auto r = a.row(i);
    for (std::size_t c = 0; c < g.n2(); ++c) {
      sup = std::max(sup, w(g.t(i), g.xi(c)) * std::abs(r[c]));
    }
  }
  return sup;
}

double x_beta_norm(const SpectralField& a1, const SpectralField& a2, const NormWeight& w) {
  w.validate();
  require_same_grid(a1, a2, "x_beta_norm");
  const Grid& g = a1.grid();
  double sup = 0.0;
  for (std::size_t i = g.interior_begin(); i < g.interior_end(); ++i) {
    const auto r1 = a1.row(i);
    const auto r2 = a2.row(i);
    for (std::size_t c = 0; c < g.n2(); ++c) {
      sup = std::max(sup, w(g.t(i), g.xi(c)) * std::hypot(std::abs(r1[c]), std::abs(r2[c])));
    }
  }
  return sup;
}

double y_norm(const SpectralField& b) {
  const Grid& g = b.grid();
  double sup = 0.0;
  for (std::size_t i = g.interior_begin(); i < g.interior_end(); ++i) {
    const double w = std::sqrt(std::abs(g.t(i)));
    for (const cplx& z : b.row(i)) {
      sup = std::max(sup, w * std::abs(z));
    }
  }
  return sup;
}

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 3) {
    throw InvalidArgument("fit_line: need at least 3 paired samples");
  }
  const double mx = mean(x);
  const double my = mean(y);
  std::vector<double> sxx(n), sxy(n);
  for (std::size_t i = 0; i < n; ++i) {
    sxx[i] = (x[i] - mx) * (x[i] - mx);
    sxy[i] = (x[i] - mx) * (y[i] - my);
  }
  const double Sxx = sum_pairwise(sxx.data(), n);
  if (!(Sxx > 0.0)) {
    throw InvalidArgument("fit_line: abscissae are all equal");
  }
  LinearFit f;
  f.samples = n;
  f.slope = sum_pairwise(sxy.data(), n) / Sxx;
  f.intercept = my - f.slope * mx;
  std::vector<double> r2(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double r = y[i] - f.intercept - f.slope * x[i];
    r2[i] = r * r;
  }
  const double sse = sum_pairwise(r2.data(), n);
  f.residual_rms = std::sqrt(sse / static_cast<double>(n));
  const double dof = static_cast<double>(n - 2);
  const double se = std::sqrt(sse / dof / Sxx);
  const boost::math::students_t dist(dof);
  f.half_width = boost::math::quantile(boost::math::complement(dist, 0.025)) * se;
  return f;
}

DecayFit decay_fit(const PhysicalField& v, Direction direction, double x1_min, double x1_max) {
  if (!(x1_min > 0.0) || !(x1_max > x1_min)) {
    throw InvalidArgument("decay_fit: window must satisfy 0 < x1_min < x1_max");
  }
  const Grid& g = v.grid();
  const double sign = direction == Direction::kDownstream ? 1.0 : -1.0;
  require_interior(g, x1_max, "decay_fit");

  DecayFit out;
  for (double s = x1_min; s <= x1_max * (1.0 + 1e-12); s *= kStationRatio) {
    out.stations.push_back(s);
  }
  if (out.stations.size() < kMinDecayStations) {
    throw InvalidArgument("decay_fit: window [" + std::to_string(x1_min) + ", " + std::to_string(x1_max) +
                          "] gives fewer than 8 stations (needs x1_max/x1_min >= 2^{7/4})");
  }
  std::vector<double> lx, ly;
  for (double s : out.stations) {
    const double t = sign * s;
    const std::size_t i = bracket(g, t);
    const double frac = (t - g.t(i)) / g.ht();
    const double val = (1.0 - frac) * row_sup(v, i) + frac * row_sup(v, i + 1);
    out.values.push_back(val);
    if (val > 0.0) {
      lx.push_back(std::log(s));
      ly.push_back(std::log(val));
    }
  }
  if (lx.size() < kMinDecayStations) {
    throw InvalidArgument("decay_fit: field vanishes at too many stations");
  }
  const LinearFit f = fit_line(lx, ly);
  out.exponent = f.slope;
  out.half_width = f.half_width;
  out.residual_rms = f.residual_rms;
  return out;
}

PhysicalField magnitude(const PhysicalField& v1, const PhysicalField& v2) {
  if (!v1.grid().same_as(v2.grid())) {
    throw GridMismatch("magnitude: fields live on different grids");
  }
  PhysicalField m{v1.grid_ptr(), "|v|"};
  auto out = m.data();
  const auto a = v1.data();
  const auto b = v2.data();
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = std::hypot(a[k], b[k]);
  }
  return m;
}

WakeFit wake_width(const PhysicalField& v, const std::vector<double>& stations) {
  const Grid& g = v.grid();
  const auto x2 = g.x2_nodes();
  const std::size_t n = g.n2();
  WakeFit out;
  std::vector<double> lx, ly;
  for (double s : stations) {
    require_interior(g, s, "wake_width");
    if (!(s > 0.0)) {
      throw InvalidArgument("wake_width: stations must be downstream (x1 > 0)");
    }
    const std::size_t i = bracket(g, s);
    const double frac = (s - g.t(i)) / g.ht();
    std::vector<double> prof(n);
    for (std::size_t m = 0; m < n; ++m) {
      prof[m] = std::abs((1.0 - frac) * v(i, m) + frac * v(i + 1, m));
    }
    const double peak = *std::max_element(prof.begin(), prof.end());
    const double half = 0.5 * peak;
    std::size_t lo = n;
    std::size_t hi = 0;
    for (std::size_t m = 0; m < n; ++m) {
      if (prof[m] >= half) {
        lo = std::min(lo, m);
        hi = std::max(hi, m);
      }
    }
    if (!(peak > 0.0) || lo == 0 || hi + 1 == n) {
      out.excluded.push_back(s);
      continue;
    }
    // Interpolated half-maximum crossings on either side.
    const double left = x2[lo - 1] + (half - prof[lo - 1]) / (prof[lo] - prof[lo - 1]) * g.h2();
    const double right = x2[hi] + (prof[hi] - half) / (prof[hi] - prof[hi + 1]) * g.h2();
    const double width = right - left;
    out.stations.push_back(s);
    out.widths.push_back(width);
    lx.push_back(std::log(s));
    ly.push_back(std::log(width));
  }
  if (lx.size() < 3) {
    throw InvalidArgument("wake_width: fewer than 3 usable stations");
  }
  const LinearFit f = fit_line(lx, ly);
  out.exponent = f.slope;
  out.half_width = f.half_width;
  out.prefactor = std::exp(f.intercept);
  return out;
}

LinearFit tail_exponent(const SpectralField& a1, const SpectralField& a2, double u_inf) {
  require_same_grid(a1, a2, "tail_exponent");
  const Grid& g = a1.grid();
  double peak = 0.0;
  for (std::size_t i = g.interior_begin(); i < g.interior_end(); ++i) {
    for (std::size_t c = 0; c < g.n2(); ++c) {
      peak = std::max(peak, std::hypot(std::abs(a1(i, c)), std::abs(a2(i, c))));
    }
  }
  if (!(peak > 0.0)) {
    return LinearFit{};
  }
  const double floor = 1e-12 * peak;
  const double s_min = 10.0 * u_inf;

  // Upper envelope of log|a| in log-spaced bins of log(u + |t xi^2|).
  const double x0 = std::log(u_inf + s_min);
  const double bin = std::log(10.0) / kTailBinsPerDecade;
  std::vector<double> env;
  for (std::size_t i = g.interior_begin(); i < g.interior_end(); ++i) {
    for (std::size_t c = 0; c < g.n2(); ++c) {
      const double s = std::abs(g.t(i)) * g.xi(c) * g.xi(c);
      if (!(s > s_min)) {
        continue;
      }
      const double mag = std::hypot(std::abs(a1(i, c)), std::abs(a2(i, c)));
      if (!(mag > floor)) {
        continue;
      }
      const auto b = static_cast<std::size_t>((std::log(u_inf + s) - x0) / bin);
      if (b >= env.size()) {
        env.resize(b + 1, -std::numeric_limits<double>::infinity());
      }
      env[b] = std::max(env[b], std::log(mag));
    }
  }
  std::vector<double> x, y;
  for (std::size_t b = 0; b < env.size(); ++b) {
    if (std::isfinite(env[b])) {
      x.push_back(x0 + (static_cast<double>(b) + 0.5) * bin);
      y.push_back(env[b]);
    }
  }
  if (x.size() < 3) {
    return LinearFit{};
  }
  return fit_line(x, y);
}

ProfileReport profile_compare(const SpectralField& ns1, const SpectralField& ns2, const SpectralField& os1,
                              const SpectralField& os2, const NormWeight& w) {
  w.validate();
  require_same_grid(ns1, ns2, "profile_compare");
  require_same_grid(ns1, os1, "profile_compare");
  require_same_grid(ns1, os2, "profile_compare");
  const SpectralField d1 = ns1 - os1;
  const SpectralField d2 = ns2 - os2;
  NormWeight w2 = w;
  w2.beta = 2.0 * w.beta;

  ProfileReport r;
  r.x_beta_ns = x_beta_norm(ns1, ns2, w);
  r.x_beta_oseen = x_beta_norm(os1, os2, w);
  r.x_2beta_diff = x_beta_norm(d1, d2, w2);
  r.tail_ns = tail_exponent(ns1, ns2, w.u_inf);
  r.tail_oseen = tail_exponent(os1, os2, w.u_inf);
  r.tail_diff = tail_exponent(d1, d2, w.u_inf);
  return r;
}

}  // namespace oseen
