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

#ifndef OSEEN_LEMMA_LAB_HPP
#define OSEEN_LEMMA_LAB_HPP

/**
 * \file
 * \brief Empirical constants of the integral inequalities used by the
 * existence and profile estimates, by quadrature over parameter sweeps.
 *
 * Every sweep point carries lhs, rhs and ratio = lhs / rhs. The report keeps
 * the largest ratio and where it occurs. When the maximizer sits on the edge
 * of a swept range, that range is widened by a decade (at most
 * kMaxRangeExtensions times per side) and the sweep is redone.
 */

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace oseen {

inline constexpr int kMaxRangeExtensions = 2;

/// Default relative quadrature tolerance; refinement reruns at a tenth of it.
inline constexpr double kLemmaTolerance = 1e-9;

struct SweepPoint {
  std::vector<double> params;
  double lhs{0.0};
  double rhs{0.0};
  double ratio{0.0};
  std::vector<double> extra;
};

struct LemmaReport {
  std::string lemma_id;
  std::vector<std::string> param_names;
  std::vector<std::string> extra_names;
  std::vector<SweepPoint> sweep;
  double sup_ratio{0.0};
  std::vector<double> argmax;
  /// Largest relative change of lhs when the quadrature tolerance is cut 10x.
  double refinement_delta{0.0};
  int range_extensions{0};
  /// The maximizer still lies on an edge of the (possibly widened) sweep.
  bool boundary_attained{false};
  /// Named side results (limits, per-group maxima).
  std::vector<std::pair<std::string, double>> notes;

  [[nodiscard]] bool all_finite() const;
  /// Finite, refinement_delta < 1%, and interior-attained or range-extended.
  [[nodiscard]] bool acceptable() const;
  [[nodiscard]] double note(const std::string& key) const;

  /// One row per sweep point.
  void write_csv(std::ostream& os) const;
  /// lemma_id, sup_ratio, argmax, refinement_delta, flags and notes.
  void write_summary(std::ostream& os) const;
};

/// Log-spaced grid with `per_decade` points per decade over [lo, hi].
[[nodiscard]] std::vector<double> log_grid(double lo, double hi, int per_decade);

/// Closed-form lhs of the basic inequality, sqrt(pi) e^{-theta} (1 + erfi(sqrt theta)).
[[nodiscard]] double ineq_basic_exact(double theta);

/// \int_0^inf e^{-x} |x - theta|^{-1/2} dx against (1 + theta)^{-1/2}.
[[nodiscard]] double ineq_basic_lhs(double theta, double tol = kLemmaTolerance);
[[nodiscard]] LemmaReport ineq_basic(const std::vector<double>& theta_grid);

/// \int_0^inf e^{-x} |x - theta|^{-1/2} (1 + |x - theta|)^{-2 beta + 1/2} dx
/// against (1 + theta)^{-2 beta}.
[[nodiscard]] double ineq_weighted_lhs(double theta, double beta, double tol = kLemmaTolerance);
[[nodiscard]] LemmaReport ineq_weighted(const std::vector<double>& theta_grid, const std::vector<double>& betas);

/// Sample set over (t, xi, u_inf): log grids plus `random_count` seeded
/// log-uniform draws. xi = 0 is always included.
struct LemmaSamples {
  std::vector<double> t;
  std::vector<double> xi;
  std::vector<double> u_inf;
  std::size_t random_count{0};
  std::uint64_t seed{0};
  bool signed_t{false};  ///< also sample -t

  [[nodiscard]] static LemmaSamples defaults(std::uint64_t seed = 0);
};

/// I = |t|^{-1/2} \int (u + (y - a)^2)^{-beta} (u + y^2)^{-beta} dy, a = |xi| |t|^{1/2},
/// the convolution of two extremal unit X_beta profiles.
[[nodiscard]] double conv_integral(double t, double xi, double u_inf, double beta, double tol = kLemmaTolerance);
/// Ratio against |t|^{-1/2} (u + |t| xi^2)^{-2 beta + 1/2}; the Y-norm form
/// |t|^{1/2} I / u^{-2 beta + 1/2} is recorded as an extra column.
[[nodiscard]] LemmaReport conv_bound(double beta, const LemmaSamples& samples);

/// |xi| \int exp(-|xi| |t - y|) f(y) dy, f(y) = |y|^{-1/2} (u + |y| xi^2)^{-gamma}.
[[nodiscard]] double heat_integral(double t, double xi, double u_inf, double gamma, double tol = kLemmaTolerance);
/// Ratio against |t|^{-1/2} (u + |t| xi^2)^{-2 beta + 1/2} with gamma = 2 beta - 1/2;
/// the Y-norm form (f = |y|^{-1/2}) is an extra column.
[[nodiscard]] LemmaReport kernel_bound_heat(double beta, const LemmaSamples& samples);

enum class KernelVariant { kBase, kProfile };

/// |A|, |B|, |C|, |D| at one point for f = |s|^{-1/2} (base) or
/// f = |s|^{-1/2} (u + |s| xi^2)^{-2 beta + 1/2} (profile).
struct KernelTerms {
  double A{0.0};
  double B{0.0};
  double C{0.0};
  double D{0.0};
};
[[nodiscard]] KernelTerms kernel_terms(double t, double xi, double u_inf, double beta, KernelVariant variant,
                                       double tol = kLemmaTolerance);
/// Ratio of A + B + C + D against (u + |t| xi^2)^{-beta} (base) or ^{-2 beta} (profile).
[[nodiscard]] LemmaReport kernel_bounds_ABCD(double beta, const LemmaSamples& samples, KernelVariant variant);

/// The five reports at their default sweeps: ineq_basic, ineq_weighted,
/// conv_bound, kernel_bound_heat and kernel_bounds_ABCD (both variants in one
/// report, variant column 0 = base, 1 = profile).
[[nodiscard]] std::vector<LemmaReport> verify_lemmas(std::uint64_t seed);

}  // namespace oseen

#endif
