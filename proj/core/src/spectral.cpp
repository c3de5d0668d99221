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

#include "oseen/spectral.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "oseen/error.hpp"
#include "oseen/parallel.hpp"

namespace oseen {

namespace {

// FFTW planning is not thread-safe; execution on fresh aligned buffers is.
struct PlanPair {
  fftw_plan forward{nullptr};
  fftw_plan backward{nullptr};
};

const PlanPair& plans_for(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard lock{mutex};
  auto it = cache.find(n);
  if (it != cache.end()) {
    return it->second;
  }
  const int ni = static_cast<int>(n);
  double* real = fftw_alloc_real(n);
  fftw_complex* half = fftw_alloc_complex(n / 2 + 1);
  PlanPair p;
  p.forward = fftw_plan_dft_r2c_1d(ni, real, half, FFTW_ESTIMATE);
  p.backward = fftw_plan_dft_c2r_1d(ni, half, real, FFTW_ESTIMATE);
  fftw_free(real);
  fftw_free(half);
  return cache.emplace(n, p).first->second;
}

// Scratch buffers for one worker; aligned like the planning buffers.
class RowScratch {
 public:
  explicit RowScratch(std::size_t n) : n_{n}, real_{fftw_alloc_real(n)}, half_{fftw_alloc_complex(n / 2 + 1)} {}
  ~RowScratch() {
    fftw_free(real_);
    fftw_free(half_);
  }
  RowScratch(const RowScratch&) = delete;
  RowScratch& operator=(const RowScratch&) = delete;

  [[nodiscard]] double* real() { return real_; }
  [[nodiscard]] fftw_complex* half() { return half_; }
  [[nodiscard]] std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  double* real_;
  fftw_complex* half_;
};

inline double parity(long k) { return (k & 1) != 0 ? -1.0 : 1.0; }

// real() -> spectral row (centered columns), exact conjugate mirroring.
void forward_row(const PlanPair& plans, RowScratch& s, double h2, std::span<cplx> out) {
  const std::size_t n = s.size();
  const long half_n = static_cast<long>(n / 2);
  fftw_execute_dft_r2c(plans.forward, s.real(), s.half());
  const fftw_complex* y = s.half();
  for (long k = 0; k < half_n; ++k) {
    const cplx v = h2 * parity(k) * cplx{y[k][0], y[k][1]};
    out[static_cast<std::size_t>(half_n + k)] = v;
    if (k > 0) {
      out[static_cast<std::size_t>(half_n - k)] = std::conj(v);
    }
  }
  out[0] = cplx{h2 * parity(half_n) * y[half_n][0], 0.0};
}

// spectral row -> real(); uses the k >= 0 half and the Nyquist real part.
void backward_row(const PlanPair& plans, RowScratch& s, double inv_L2, std::span<const cplx> in) {
  const std::size_t n = s.size();
  const long half_n = static_cast<long>(n / 2);
  fftw_complex* z = s.half();
  for (long k = 0; k < half_n; ++k) {
    const cplx v = inv_L2 * parity(k) * in[static_cast<std::size_t>(half_n + k)];
    z[k][0] = v.real();
    z[k][1] = v.imag();
  }
  z[half_n][0] = inv_L2 * parity(half_n) * in[0].real();
  z[half_n][1] = 0.0;
  fftw_execute_dft_c2r(plans.backward, z, s.real());
}

void require_hermitian(const SpectralField& a, const char* where) {
  const double scale = a.max_abs();
  const double defect = a.hermitian_defect();
  if (defect > kHermitianTolerance * scale) {
    throw SymmetryViolation(std::string(where) + ": Hermitian defect " + std::to_string(defect) +
                            " exceeds tolerance relative to max magnitude " + std::to_string(scale));
  }
}

bool kept(const Grid& g, std::size_t c) { return c != 0 && std::abs(g.wavenumber(c)) <= g.dealias_cutoff(); }

constexpr std::size_t kRowBlock = 32;

template <typename Fn>
void for_row_blocks(std::size_t rows, Fn&& fn) {
  const std::size_t blocks = (rows + kRowBlock - 1) / kRowBlock;
  parallel_for(0, blocks, [&](std::size_t b) {
    const std::size_t lo = b * kRowBlock;
    fn(lo, std::min(rows, lo + kRowBlock));
  });
}

}  // namespace

SpectralField to_spectral(const PhysicalField& f) {
  const Grid& g = f.grid();
  SpectralField a{f.grid_ptr(), f.label()};
  const auto& plans = plans_for(g.n2());
  for_row_blocks(g.nt(), [&](std::size_t lo, std::size_t hi) {
    RowScratch s{g.n2()};
    for (std::size_t i = lo; i < hi; ++i) {
      std::copy(f.row(i).begin(), f.row(i).end(), s.real());
      forward_row(plans, s, g.h2(), a.row(i));
    }
  });
  return a;
}

PhysicalField to_physical(const SpectralField& a) {
  require_hermitian(a, "to_physical");
  const Grid& g = a.grid();
  PhysicalField f{a.grid_ptr(), a.label()};
  f.discarded_imag = a.hermitian_defect();
  const auto& plans = plans_for(g.n2());
  const double inv_L2 = 1.0 / g.L2();
  for_row_blocks(g.nt(), [&](std::size_t lo, std::size_t hi) {
    RowScratch s{g.n2()};
    for (std::size_t i = lo; i < hi; ++i) {
      backward_row(plans, s, inv_L2, a.row(i));
      std::copy(s.real(), s.real() + g.n2(), f.row(i).begin());
    }
  });
  return f;
}

void dealias(SpectralField& a) {
  const Grid& g = a.grid();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!kept(g, c)) {
        r[c] = cplx{0.0, 0.0};
      }
    }
  }
}

SpectralField dealiased(SpectralField a) {
  dealias(a);
  return a;
}

SpectralField spectral_product(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a, b, "spectral_product");
  require_hermitian(a, "spectral_product");
  require_hermitian(b, "spectral_product");
  const Grid& g = a.grid();
  const std::size_t n = g.n2();
  SpectralField out{a.grid_ptr()};
  const auto& plans = plans_for(n);
  const double inv_L2 = 1.0 / g.L2();

  std::vector<char> keep(n);
  for (std::size_t c = 0; c < n; ++c) {
    keep[c] = kept(g, c) ? 1 : 0;
  }

  for_row_blocks(g.nt(), [&](std::size_t lo, std::size_t hi) {
    RowScratch s{n};
    std::vector<cplx> row(n);
    std::vector<double> pa(n);
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t c = 0; c < n; ++c) {
        row[c] = keep[c] ? a(i, c) : cplx{0.0, 0.0};
      }
      backward_row(plans, s, inv_L2, row);
      std::copy(s.real(), s.real() + n, pa.begin());
      for (std::size_t c = 0; c < n; ++c) {
        row[c] = keep[c] ? b(i, c) : cplx{0.0, 0.0};
      }
      backward_row(plans, s, inv_L2, row);
      for (std::size_t m = 0; m < n; ++m) {
        s.real()[m] *= pa[m];
      }
      auto dst = out.row(i);
      forward_row(plans, s, g.h2(), dst);
      for (std::size_t c = 0; c < n; ++c) {
        if (!keep[c]) {
          dst[c] = cplx{0.0, 0.0};
        }
      }
    }
  });
  return out;
}

ProductTriple spectral_products(const SpectralField& a, const SpectralField& b) {
  require_same_grid(a, b, "spectral_products");
  require_hermitian(a, "spectral_products");
  require_hermitian(b, "spectral_products");
  const Grid& g = a.grid();
  const std::size_t n = g.n2();
  ProductTriple out{SpectralField{a.grid_ptr()}, SpectralField{a.grid_ptr()}, SpectralField{a.grid_ptr()}};
  const auto& plans = plans_for(n);
  const double inv_L2 = 1.0 / g.L2();

  std::vector<char> keep(n);
  for (std::size_t c = 0; c < n; ++c) {
    keep[c] = kept(g, c) ? 1 : 0;
  }

  for_row_blocks(g.nt(), [&](std::size_t lo, std::size_t hi) {
    RowScratch s{n};
    std::vector<cplx> row(n);
    std::vector<double> pa(n);
    std::vector<double> pb(n);
    auto to_real = [&](const SpectralField& src, std::size_t i, std::vector<double>& dst) {
      for (std::size_t c = 0; c < n; ++c) {
        row[c] = keep[c] ? src(i, c) : cplx{0.0, 0.0};
      }
      backward_row(plans, s, inv_L2, row);
      std::copy(s.real(), s.real() + n, dst.begin());
    };
    auto emit = [&](SpectralField& dst_field, std::size_t i, const std::vector<double>& x,
                    const std::vector<double>& y) {
      for (std::size_t m = 0; m < n; ++m) {
        s.real()[m] = y[m] * x[m];
      }
      auto dst = dst_field.row(i);
      forward_row(plans, s, g.h2(), dst);
      for (std::size_t c = 0; c < n; ++c) {
        if (!keep[c]) {
          dst[c] = cplx{0.0, 0.0};
        }
      }
    };
    for (std::size_t i = lo; i < hi; ++i) {
      to_real(a, i, pa);
      to_real(b, i, pb);
      emit(out.aa, i, pa, pa);
      emit(out.ab, i, pa, pb);
      emit(out.bb, i, pb, pb);
    }
  });
  return out;
}

void t_derivative_column(std::span<const cplx> f, double h, int order, std::span<cplx> d) {
  const std::size_t n = f.size();
  if (n < 8) {
    throw InvalidArgument("t_derivative: N_t must be >= 8");
  }
  if (order == 1) {
    const double s = 1.0 / (12.0 * h);
    d[0] = s * (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]);
    d[1] = s * (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]);
    for (std::size_t j = 2; j + 2 < n; ++j) {
      d[j] = s * (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]);
    }
    d[n - 2] = -s * (-3.0 * f[n - 1] - 10.0 * f[n - 2] + 18.0 * f[n - 3] - 6.0 * f[n - 4] + f[n - 5]);
    d[n - 1] = -s * (-25.0 * f[n - 1] + 48.0 * f[n - 2] - 36.0 * f[n - 3] + 16.0 * f[n - 4] - 3.0 * f[n - 5]);
  } else if (order == 2) {
    const double s = 1.0 / (12.0 * h * h);
    d[0] = s * (45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5]);
    d[1] = s * (10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5]);
    for (std::size_t j = 2; j + 2 < n; ++j) {
      d[j] = s * (-f[j - 2] + 16.0 * f[j - 1] - 30.0 * f[j] + 16.0 * f[j + 1] - f[j + 2]);
    }
    d[n - 2] = s * (10.0 * f[n - 1] - 15.0 * f[n - 2] - 4.0 * f[n - 3] + 14.0 * f[n - 4] - 6.0 * f[n - 5] + f[n - 6]);
    d[n - 1] = s * (45.0 * f[n - 1] - 154.0 * f[n - 2] + 214.0 * f[n - 3] - 156.0 * f[n - 4] + 61.0 * f[n - 5] -
                    10.0 * f[n - 6]);
  } else {
    throw InvalidArgument("t_derivative: order must be 1 or 2");
  }
}

SpectralField t_derivative(const SpectralField& a, int order) {
  if (order != 1 && order != 2) {
    throw InvalidArgument("t_derivative: order must be 1 or 2");
  }
  const Grid& g = a.grid();
  if (g.nt() < 8) {
    throw InvalidArgument("t_derivative: N_t must be >= 8");
  }
  SpectralField out{a.grid_ptr()};
  parallel_for(0, g.n2(), [&](std::size_t c) {
    std::vector<cplx> col(g.nt());
    std::vector<cplx> d(g.nt());
    a.get_column(c, col);
    t_derivative_column(col, g.ht(), order, d);
    out.set_column(c, d);
  });
  return out;
}

}  // namespace oseen
