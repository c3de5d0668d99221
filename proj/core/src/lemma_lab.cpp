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

#include "oseen/lemma_lab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "oseen/error.hpp"
#include "oseen/kernels.hpp"
#include "oseen/parallel.hpp"
#include "oseen/quadrature.hpp"

namespace oseen {

namespace {

// Evaluates one sweep point at a quadrature tolerance.
using Evaluator = std::function<SweepPoint(const std::vector<double>& params, double tol)>;

struct Dim {
  std::string name;
  std::vector<double> values;
  int per_decade{0};  ///< 0: fixed, never widened
  bool mirrored{false};
};

std::vector<double> widen(const std::vector<double>& v, int per_decade, bool upward) {
  std::vector<double> out = v;
  double lo = std::numeric_limits<double>::infinity();
  double hi = 0.0;
  for (double x : v) {
    if (x > 0.0) {
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
  }
  const double step = std::pow(10.0, 1.0 / per_decade);
  for (int k = 1; k <= per_decade; ++k) {
    out.push_back(upward ? hi * std::pow(step, k) : lo / std::pow(step, k));
  }
  std::sort(out.begin(), out.end());
  return out;
}

class Sweep {
 public:
  Sweep(std::string id, std::vector<Dim> dims, std::vector<std::string> extra_names, Evaluator eval)
      : dims_{std::move(dims)}, eval_{std::move(eval)} {
    report_.lemma_id = std::move(id);
    for (const Dim& d : dims_) {
      report_.param_names.push_back(d.name);
    }
    report_.extra_names = std::move(extra_names);
  }

  void add_points(std::vector<std::vector<double>> pts) { extra_points_ = std::move(pts); }

  LemmaReport run() {
    std::vector<int> ext(2 * dims_.size(), 0);
    for (;;) {
      evaluate();
      const auto edge = boundary_side();
      if (!edge) {
        report_.boundary_attained = false;
        break;
      }
      const auto [d, upward] = *edge;
      int& used = ext[2 * d + (upward ? 1 : 0)];
      if (used >= kMaxRangeExtensions) {
        report_.boundary_attained = true;
        break;
      }
      ++used;
      ++report_.range_extensions;
      dims_[d].values = widen(dims_[d].values, dims_[d].per_decade, upward);
    }
    return std::move(report_);
  }

 private:
  std::vector<std::vector<double>> points() const {
    std::vector<std::vector<double>> out{{}};
    for (const Dim& d : dims_) {
      std::vector<double> vals = d.values;
      if (d.mirrored) {
        for (double x : d.values) {
          if (x > 0.0) {
            vals.push_back(-x);
          }
        }
      }
      std::vector<std::vector<double>> next;
      for (const auto& p : out) {
        for (double x : vals) {
          auto q = p;
          q.push_back(x);
          next.push_back(std::move(q));
        }
      }
      out = std::move(next);
    }
    out.insert(out.end(), extra_points_.begin(), extra_points_.end());
    return out;
  }

  void evaluate() {
    const auto pts = points();
    std::vector<const std::vector<double>*> todo;
    for (const auto& p : pts) {
      if (cache_.find(p) == cache_.end()) {
        todo.push_back(&p);
      }
    }
    std::vector<SweepPoint> fresh(todo.size());
    std::vector<double> delta(todo.size(), 0.0);
    parallel_for(0, todo.size(), [&](std::size_t k) {
      fresh[k] = eval_(*todo[k], kLemmaTolerance);
      const SweepPoint fine = eval_(*todo[k], 0.1 * kLemmaTolerance);
      const double scale = std::abs(fine.lhs);
      delta[k] = scale > 0.0 ? std::abs(fine.lhs - fresh[k].lhs) / scale : std::abs(fresh[k].lhs);
    });
    for (std::size_t k = 0; k < todo.size(); ++k) {
      cache_.emplace(*todo[k], std::make_pair(fresh[k], delta[k]));
    }

    report_.sweep.clear();
    report_.sup_ratio = -std::numeric_limits<double>::infinity();
    report_.refinement_delta = 0.0;
    for (const auto& p : pts) {
      const auto& [pt, d] = cache_.at(p);
      report_.sweep.push_back(pt);
      report_.refinement_delta = std::max(report_.refinement_delta, d);
      if (pt.ratio > report_.sup_ratio || !std::isfinite(pt.ratio)) {
        report_.sup_ratio = pt.ratio;
        report_.argmax = pt.params;
      }
    }
  }

  // Dimension and side where the maximizer touches a widenable edge.
  std::optional<std::pair<std::size_t, bool>> boundary_side() const {
    for (std::size_t d = 0; d < dims_.size(); ++d) {
      if (dims_[d].per_decade == 0) {
        continue;
      }
      const double x = std::abs(report_.argmax[d]);
      if (x == 0.0) {
        continue;  // domain edge, not a sweep edge
      }
      double lo = std::numeric_limits<double>::infinity();
      double hi = 0.0;
      for (double v : dims_[d].values) {
        if (v > 0.0) {
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
      }
      if (x >= hi) {
        return std::make_pair(d, true);
      }
      if (x <= lo) {
        return std::make_pair(d, false);
      }
    }
    return std::nullopt;
  }

  std::vector<Dim> dims_;
  Evaluator eval_;
  std::vector<std::vector<double>> extra_points_;
  std::map<std::vector<double>, std::pair<SweepPoint, double>> cache_;
  LemmaReport report_;
};

SweepPoint make_point(std::vector<double> params, double lhs, double rhs, std::vector<double> extra = {}) {
  SweepPoint p;
  p.params = std::move(params);
  p.lhs = lhs;
  p.rhs = rhs;
  p.ratio = rhs > 0.0 ? lhs / rhs : (lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity());
  p.extra = std::move(extra);
  return p;
}

void require_beta(double beta, bool closed_top, const char* where) {
  const bool ok = beta > 0.25 && (closed_top ? beta <= 0.5 : beta < 0.5);
  if (!ok) {
    throw InvalidArgument(std::string(where) + ": beta out of range");
  }
}

double sup_where(const LemmaReport& r, std::size_t dim, double value) {
  double s = 0.0;
  for (const auto& p : r.sweep) {
    if (p.params[dim] == value) {
      s = std::max(s, p.ratio);
    }
  }
  return s;
}

double sup_extra(const LemmaReport& r, std::size_t k) {
  double s = 0.0;
  for (const auto& p : r.sweep) {
    s = std::max(s, p.extra[k]);
  }
  return s;
}

std::vector<std::vector<double>> random_points(const LemmaSamples& s, std::size_t prefix_dims,
                                               const std::vector<double>& prefix) {
  std::vector<std::vector<double>> out;
  if (s.random_count == 0) {
    return out;
  }
  std::mt19937_64 rng{s.seed};
  auto log_uniform = [&](const std::vector<double>& v) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (double x : v) {
      if (x > 0.0) {
        lo = std::min(lo, x);
        hi = std::max(hi, x);
      }
    }
    std::uniform_real_distribution<double> d{std::log(lo), std::log(hi)};
    return std::exp(d(rng));
  };
  std::bernoulli_distribution flip{0.5};
  for (std::size_t k = 0; k < s.random_count; ++k) {
    std::vector<double> p = prefix;
    p.resize(prefix_dims);
    double t = log_uniform(s.t);
    if (s.signed_t && flip(rng)) {
      t = -t;
    }
    p.push_back(t);
    p.push_back(log_uniform(s.xi));
    p.push_back(log_uniform(s.u_inf));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Dim> sample_dims(const LemmaSamples& s) {
  std::vector<double> xi = s.xi;
  if (std::find(xi.begin(), xi.end(), 0.0) == xi.end()) {
    xi.insert(xi.begin(), 0.0);
  }
  return {Dim{"t", s.t, 4, s.signed_t}, Dim{"xi", xi, 4, false}, Dim{"u_inf", s.u_inf, 2, false}};
}

}  // namespace

bool LemmaReport::all_finite() const {
  if (!std::isfinite(sup_ratio) || !std::isfinite(refinement_delta)) {
    return false;
  }
  return std::all_of(sweep.begin(), sweep.end(), [](const SweepPoint& p) {
    return std::isfinite(p.lhs) && std::isfinite(p.ratio) &&
           std::all_of(p.extra.begin(), p.extra.end(), [](double x) { return std::isfinite(x); });
  });
}

bool LemmaReport::acceptable() const {
  return all_finite() && refinement_delta < 0.01 && (!boundary_attained || range_extensions > 0);
}

double LemmaReport::note(const std::string& key) const {
  for (const auto& [k, v] : notes) {
    if (k == key) {
      return v;
    }
  }
  throw InvalidArgument("lemma report " + lemma_id + " has no note '" + key + "'");
}

void LemmaReport::write_csv(std::ostream& os) const {
  const auto old = os.precision(17);
  for (const auto& n : param_names) {
    os << n << ',';
  }
  os << "lhs,rhs,ratio";
  for (const auto& n : extra_names) {
    os << ',' << n;
  }
  os << '\n';
  for (const auto& p : sweep) {
    for (double x : p.params) {
      os << x << ',';
    }
    os << p.lhs << ',' << p.rhs << ',' << p.ratio;
    for (double x : p.extra) {
      os << ',' << x;
    }
    os << '\n';
  }
  os.precision(old);
}

void LemmaReport::write_summary(std::ostream& os) const {
  const auto old = os.precision(10);
  os << "lemma_id = " << lemma_id << '\n';
  os << "sup_ratio = " << sup_ratio << '\n';
  os << "argmax =";
  for (std::size_t d = 0; d < argmax.size(); ++d) {
    os << ' ' << param_names[d] << '=' << argmax[d];
  }
  os << '\n';
  os << "refinement_delta = " << refinement_delta << '\n';
  os << "range_extensions = " << range_extensions << '\n';
  os << "boundary_attained = " << (boundary_attained ? "yes" : "no") << '\n';
  for (const auto& [k, v] : notes) {
    os << k << " = " << v << '\n';
  }
  os << "verdict = " << (acceptable() ? "ok" : "check") << '\n';
  os.precision(old);
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(lo > 0.0) || !(hi >= lo) || per_decade < 1) {
    throw InvalidArgument("log_grid: needs 0 < lo <= hi and per_decade >= 1");
  }
  const double decades = std::log10(hi / lo);
  const auto n = static_cast<int>(std::lround(decades * per_decade));
  std::vector<double> out;
  for (int k = 0; k <= n; ++k) {
    out.push_back(lo * std::pow(10.0, static_cast<double>(k) / per_decade));
  }
  return out;
}

double ineq_basic_exact(double theta) {
  if (!(theta >= 0.0) || theta > 700.0) {
    throw InvalidArgument("ineq_basic_exact: theta must lie in [0, 700]");
  }
  // sqrt(pi) e^{-theta} erfi(sqrt theta) = 2 e^{-theta} sum x^{2n+1} / (n! (2n+1)).
  const double x = std::sqrt(theta);
  double term = x * std::exp(-theta);
  double sum = term;
  for (int n = 1; n < 100000; ++n) {
    term *= theta / n;
    const double add = term / (2.0 * n + 1.0);
    sum += add;
    if (n > theta && add < 1e-18 * sum) {
      break;
    }
  }
  return std::sqrt(std::numbers::pi) * std::exp(-theta) + 2.0 * sum;
}

double ineq_basic_lhs(double theta, double tol) {
  return quad::exp_singular([](double) { return 1.0; }, theta, tol);
}

LemmaReport ineq_basic(const std::vector<double>& theta_grid) {
  for (double th : theta_grid) {
    if (!(th > 0.0)) {
      throw InvalidArgument("ineq_basic: theta must be positive");
    }
  }
  Sweep s{"ineq_basic", {Dim{"theta", theta_grid, 10, false}}, {}, [](const std::vector<double>& p, double tol) {
            const double th = p[0];
            return make_point(p, ineq_basic_lhs(th, tol), 1.0 / std::sqrt(1.0 + th));
          }};
  LemmaReport r = s.run();
  r.notes.emplace_back("theta_to_zero_limit", ineq_basic_lhs(1e-16));
  r.notes.emplace_back("sqrt_pi", std::sqrt(std::numbers::pi));
  r.notes.emplace_back("ratio_theta_100", ineq_basic_lhs(100.0) * std::sqrt(101.0));
  r.notes.emplace_back("ratio_theta_1000", ineq_basic_lhs(1000.0) * std::sqrt(1001.0));
  return r;
}

double ineq_weighted_lhs(double theta, double beta, double tol) {
  const double e = -2.0 * beta + 0.5;
  return quad::exp_singular([&](double x) { return std::pow(1.0 + std::abs(x - theta), e); }, theta, tol);
}

LemmaReport ineq_weighted(const std::vector<double>& theta_grid, const std::vector<double>& betas) {
  for (double b : betas) {
    require_beta(b, false, "ineq_weighted");
  }
  Sweep s{"ineq_weighted",
          {Dim{"beta", betas, 0, false}, Dim{"theta", theta_grid, 10, false}},
          {},
          [](const std::vector<double>& p, double tol) {
            const double b = p[0];
            const double th = p[1];
            return make_point(p, ineq_weighted_lhs(th, b, tol), std::pow(1.0 + th, -2.0 * b));
          }};
  LemmaReport r = s.run();
  for (double b : betas) {
    std::ostringstream key;
    key << "sup_ratio[beta=" << b << "]";
    r.notes.emplace_back(key.str(), sup_where(r, 0, b));
  }
  for (double b : betas) {
    std::ostringstream key;
    key << "theta_to_zero_limit[beta=" << b << "]";
    r.notes.emplace_back(key.str(), ineq_weighted_lhs(1e-16, b));
  }
  return r;
}

LemmaSamples LemmaSamples::defaults(std::uint64_t seed) {
  LemmaSamples s;
  s.t = log_grid(1e-2, 1e3, 4);
  s.xi = log_grid(1e-3, 1e2, 4);
  s.u_inf = {1.0, 2.0, 4.0, 8.0, 16.0};
  s.random_count = 64;
  s.seed = seed;
  s.signed_t = false;
  return s;
}

double conv_integral(double t, double xi, double u_inf, double beta, double tol) {
  if (t == 0.0) {
    throw InvalidArgument("conv_integral: t must be non-zero");
  }
  const double a = std::abs(xi) * std::sqrt(std::abs(t));
  auto f = [&](double y) { return std::pow(u_inf + (y - a) * (y - a), -beta) * std::pow(u_inf + y * y, -beta); };
  // Symmetric about y = a/2.
  const double mid = 0.5 * a;
  const double R = a + 4.0 * std::sqrt(u_inf);
  double half = quad::integrate(f, mid, a, tol) + quad::integrate(f, a, R, tol);
  half += quad::algebraic_tail(f, R, 4.0 * beta - 1.0, tol);
  return 2.0 * half / std::sqrt(std::abs(t));
}

LemmaReport conv_bound(double beta, const LemmaSamples& samples) {
  require_beta(beta, false, "conv_bound");
  const double e = -2.0 * beta + 0.5;
  Sweep s{"conv_bound", sample_dims(samples), {"alpha", "ratio_y_norm"}, [=](const std::vector<double>& p, double tol) {
            const double t = p[0];
            const double xi = p[1];
            const double u = p[2];
            const double I = conv_integral(t, xi, u, beta, tol);
            const double rhs = std::pow(std::abs(t), -0.5) * std::pow(u + std::abs(t) * xi * xi, e);
            const double alpha = std::abs(xi) * std::sqrt(std::abs(t) / u);
            return make_point(p, I, rhs, {alpha, std::sqrt(std::abs(t)) * I / std::pow(u, e)});
          }};
  s.add_points(random_points(samples, 0, {}));
  LemmaReport r = s.run();
  r.notes.emplace_back("xi_zero_closed_form", std::sqrt(std::numbers::pi) *
                                                  boost::math::tgamma(2.0 * beta - 0.5) /
                                                  boost::math::tgamma(2.0 * beta));
  r.notes.emplace_back("sup_ratio_y_norm", sup_extra(r, 1));
  return r;
}

double heat_integral(double t, double xi, double u_inf, double gamma, double tol) {
  const double k = std::abs(xi);
  if (k == 0.0) {
    return 0.0;
  }
  // y = x / k: k^{1/2} \int exp(-|k t - x|) |x|^{-1/2} (u + k |x|)^{-gamma} dx, split at x = 0.
  const double theta = k * t;
  auto g = [&](double x) { return std::pow(u_inf + k * x, -gamma); };
  return std::sqrt(k) * (quad::exp_origin(g, theta, tol) + quad::exp_origin(g, -theta, tol));
}

LemmaReport kernel_bound_heat(double beta, const LemmaSamples& samples) {
  require_beta(beta, false, "kernel_bound_heat");
  const double gamma = 2.0 * beta - 0.5;
  LemmaSamples sm = samples;
  sm.signed_t = true;
  Sweep s{"kernel_bound_heat", sample_dims(sm), {"lhs_y_norm", "ratio_y_norm"},
          [=](const std::vector<double>& p, double tol) {
            const double t = p[0];
            const double xi = p[1];
            const double u = p[2];
            const double I = heat_integral(t, xi, u, gamma, tol);
            const double rhs = std::pow(std::abs(t), -0.5) * std::pow(u + std::abs(t) * xi * xi, -gamma);
            // Extremal Y profile |y|^{-1/2}: ||f||_Y = 1.
            const double Iy = heat_integral(t, xi, u, 0.0, tol);
            return make_point(p, I, rhs, {Iy, std::sqrt(std::abs(t)) * Iy / std::pow(u, -gamma)});
          }};
  s.add_points(random_points(sm, 0, {}));
  LemmaReport r = s.run();
  r.notes.emplace_back("sup_ratio_y_norm", sup_extra(r, 1));
  return r;
}

KernelTerms kernel_terms(double t, double xi, double u_inf, double beta, KernelVariant variant, double tol) {
  const OseenSymbols sym = symbols(xi, u_inf);
  const double k = std::abs(xi);
  const double e = -2.0 * beta + 0.5;
  auto profile = [&](double s) {
    return variant == KernelVariant::kBase ? 1.0 : std::pow(u_inf + std::abs(s) * xi * xi, e);
  };
  KernelTerms out;
  // \int_{-inf}^t exp(-mu (t - s)) f(s) ds = mu^{-1/2} \int_0^inf e^{-x} |mu t - x|^{-1/2} g(t - x/mu) dx.
  const double mu1 = -sym.lambda1;
  if (mu1 > 0.0) {
    const double causal =
        quad::exp_singular([&](double x) { return profile(t - x / mu1); }, mu1 * t, tol) / std::sqrt(mu1);
    out.A = k / sym.delta * causal;
    out.B = mu1 / sym.delta * causal;
  }
  // \int_t^inf exp(-mu (s - t)) f(s) ds = mu^{-1/2} \int_0^inf e^{-x} |x + mu t|^{-1/2} g(t + x/mu) dx.
  const double mu2 = sym.lambda2;
  const double anticausal =
      quad::exp_singular([&](double x) { return profile(t + x / mu2); }, -mu2 * t, tol) / std::sqrt(mu2);
  out.C = k / sym.delta * anticausal;
  out.D = mu2 / sym.delta * anticausal;
  return out;
}

LemmaReport kernel_bounds_ABCD(double beta, const LemmaSamples& samples, KernelVariant variant) {
  require_beta(beta, true, "kernel_bounds_ABCD");
  LemmaSamples sm = samples;
  sm.signed_t = true;
  std::vector<Dim> dims = sample_dims(sm);
  const double v = variant == KernelVariant::kBase ? 0.0 : 1.0;
  dims.insert(dims.begin(), Dim{"variant", {v}, 0, false});
  Sweep s{"kernel_bounds_ABCD", std::move(dims), {"ratio_A", "ratio_B", "ratio_C", "ratio_D"},
          [=](const std::vector<double>& p, double tol) {
            const auto var = p[0] == 0.0 ? KernelVariant::kBase : KernelVariant::kProfile;
            const double t = p[1];
            const double xi = p[2];
            const double u = p[3];
            const KernelTerms kt = kernel_terms(t, xi, u, beta, var, tol);
            const double power = var == KernelVariant::kBase ? beta : 2.0 * beta;
            const double rhs = std::pow(u + std::abs(t) * xi * xi, -power);
            return make_point(p, kt.A + kt.B + kt.C + kt.D, rhs, {kt.A / rhs, kt.B / rhs, kt.C / rhs, kt.D / rhs});
          }};
  s.add_points(random_points(sm, 1, {v}));
  return s.run();
}

std::vector<LemmaReport> verify_lemmas(std::uint64_t seed) {
  const LemmaSamples samples = LemmaSamples::defaults(seed);
  std::vector<LemmaReport> out;
  out.push_back(ineq_basic(log_grid(1e-3, 1e3, 10)));
  out.push_back(ineq_weighted(log_grid(1e-3, 1e3, 10), {0.26, 0.3, 0.375, 0.45, 0.49}));
  out.push_back(conv_bound(0.375, samples));
  out.push_back(kernel_bound_heat(0.375, samples));

  LemmaReport base = kernel_bounds_ABCD(0.375, samples, KernelVariant::kBase);
  LemmaReport prof = kernel_bounds_ABCD(0.375, samples, KernelVariant::kProfile);
  LemmaReport both = base;
  both.sweep.insert(both.sweep.end(), prof.sweep.begin(), prof.sweep.end());
  if (prof.sup_ratio > base.sup_ratio) {
    both.sup_ratio = prof.sup_ratio;
    both.argmax = prof.argmax;
  }
  both.refinement_delta = std::max(base.refinement_delta, prof.refinement_delta);
  both.range_extensions = base.range_extensions + prof.range_extensions;
  both.boundary_attained = base.boundary_attained || prof.boundary_attained;
  both.notes = {{"sup_ratio[base]", base.sup_ratio},
                {"sup_ratio[profile]", prof.sup_ratio},
                {"range_extensions[base]", static_cast<double>(base.range_extensions)},
                {"range_extensions[profile]", static_cast<double>(prof.range_extensions)},
                {"boundary_attained[base]", base.boundary_attained ? 1.0 : 0.0},
                {"boundary_attained[profile]", prof.boundary_attained ? 1.0 : 0.0}};
  out.push_back(std::move(both));
  return out;
}

}  // namespace oseen
