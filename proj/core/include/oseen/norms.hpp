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

#ifndef OSEEN_NORMS_HPP
#define OSEEN_NORMS_HPP

/**
 * \file
 * \brief Weighted sup norms on (t, xi), power-law fits in physical space and
 * the comparison between a nonlinear solution and its linear profile.
 */

#include <string_view>
#include <vector>

#include "oseen/grid.hpp"

namespace oseen {

enum class WeightMode { kUnit, kConvective };

[[nodiscard]] WeightMode parse_weight_mode(std::string_view name);
[[nodiscard]] std::string_view to_string(WeightMode m) noexcept;

/// w(t, xi) = (1 + |t xi^2|)^beta (unit) or (u_inf + |t xi^2|)^beta (convective).
struct NormWeight {
  double beta{0.375};
  double u_inf{4.0};
  WeightMode mode{WeightMode::kConvective};

  /// Throws InvalidArgument unless 0 < beta <= 1 and u_inf > 0.
  void validate() const;
  [[nodiscard]] double operator()(double t, double xi) const;
};

/// Interior sup of w |a|.
[[nodiscard]] double x_beta_norm(const SpectralField& a, const NormWeight& w);
/// Interior sup of w (|a1|^2 + |a2|^2)^{1/2}.
[[nodiscard]] double x_beta_norm(const SpectralField& a1, const SpectralField& a2, const NormWeight& w);

/// Interior sup of |t|^{1/2} |b|.
[[nodiscard]] double y_norm(const SpectralField& b);

enum class Direction { kDownstream, kUpstream };

/// Least-squares line y = intercept + slope x with a 95% half-width on slope.
struct LinearFit {
  double slope{0.0};
  double intercept{0.0};
  double half_width{0.0};
  double residual_rms{0.0};
  std::size_t samples{0};
};

/// Throws InvalidArgument for fewer than 3 points.
[[nodiscard]] LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

struct DecayFit {
  double exponent{0.0};
  double half_width{0.0};
  double residual_rms{0.0};
  std::vector<double> stations;  ///< |x1| of each station
  std::vector<double> values;    ///< sup over x2 of |v| there
};

/// Minimum number of stations accepted by decay_fit.
inline constexpr std::size_t kMinDecayStations = 8;

/// Slope of log sup_{x2}|v(x1, .)| against log|x1| over stations spaced by a
/// factor 2^{1/4} in [x1_min, x1_max] (|x1| for upstream windows). The row
/// envelope is linearly interpolated between t nodes. Throws InvalidArgument
/// when the window leaves the interior or yields fewer than 8 stations.
[[nodiscard]] DecayFit decay_fit(const PhysicalField& v, Direction direction, double x1_min, double x1_max);

/// Pointwise (v1^2 + v2^2)^{1/2}.
[[nodiscard]] PhysicalField magnitude(const PhysicalField& v1, const PhysicalField& v2);

struct WakeFit {
  double prefactor{0.0};
  double exponent{0.0};
  double half_width{0.0};
  std::vector<double> stations;
  std::vector<double> widths;
  std::vector<double> excluded;  ///< stations with a flat or zero profile
};

/// Per station, width of the x2 range where |v| >= max|v|/2 (outermost
/// half-maximum crossings, linearly interpolated), then width ~ prefactor x1^exponent.
/// Throws InvalidArgument for stations outside the interior or fewer than 3 usable ones.
[[nodiscard]] WakeFit wake_width(const PhysicalField& v, const std::vector<double>& stations);

/// Slope of the log-binned upper envelope of log|a| against log(u_inf + |t xi^2|)
/// over the interior points with |t xi^2| > 10 u_inf. Values below 1e-12 of
/// the field maximum are ignored.
[[nodiscard]] LinearFit tail_exponent(const SpectralField& a1, const SpectralField& a2, double u_inf);

struct ProfileReport {
  double x_beta_ns{0.0};     ///< ||v||, exponent beta
  double x_beta_oseen{0.0};  ///< ||vbar||, exponent beta
  double x_2beta_diff{0.0};  ///< ||v - vbar||, exponent 2 beta
  LinearFit tail_ns;
  LinearFit tail_oseen;
  LinearFit tail_diff;
};

/// Both velocity pairs must share a grid. Weight mode and u_inf come from w.
[[nodiscard]] ProfileReport profile_compare(const SpectralField& ns1, const SpectralField& ns2,
                                            const SpectralField& os1, const SpectralField& os2,
                                            const NormWeight& w);

}  // namespace oseen

#endif
