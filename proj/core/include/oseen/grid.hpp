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

#ifndef OSEEN_GRID_HPP
#define OSEEN_GRID_HPP

/**
 * \file
 * \brief Tensor grid in (t, x2) / (t, xi) and the field containers living on it.
 *
 * The streamwise coordinate x1 is called t. It is sampled on a staggered grid
 * t_j = (j + 1/2 - N_t/2) h_t that never hits t = 0, so |t|^{-1/2} weights are
 * finite at every node. The cross-stream coordinate x2 is periodic with N2
 * uniform nodes on [-L2/2, L2/2); its DFT frequencies xi_k = 2 pi k / L2 are
 * stored in centered order, k = -N2/2 ... N2/2 - 1, so column index c holds
 * k = c - N2/2. Column 0 is the unpaired Nyquist mode.
 */

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace oseen {

using cplx = std::complex<double>;

/// Fraction of the half-length [0, T] at each end of the t range that is
/// treated as a boundary buffer: norms, fits and residuals use |t| <= 0.9 T.
inline constexpr double kBoundaryBufferFraction = 0.1;

class Grid {
 public:
  /// Throws InvalidArgument unless T > 0, L2 > 0, N_t >= 16 (even) and N2 is
  /// a power of two >= 16.
  Grid(double T, std::size_t nt, double L2, std::size_t n2);

  [[nodiscard]] double T() const noexcept { return T_; }
  [[nodiscard]] double L2() const noexcept { return L2_; }
  [[nodiscard]] std::size_t nt() const noexcept { return nt_; }
  [[nodiscard]] std::size_t n2() const noexcept { return n2_; }
  [[nodiscard]] double ht() const noexcept { return ht_; }
  [[nodiscard]] double h2() const noexcept { return h2_; }

  [[nodiscard]] std::span<const double> t_nodes() const noexcept { return t_; }
  [[nodiscard]] std::span<const double> x2_nodes() const noexcept { return x2_; }
  [[nodiscard]] std::span<const double> xi_nodes() const noexcept { return xi_; }

  [[nodiscard]] double t(std::size_t i) const { return t_[i]; }
  [[nodiscard]] double xi(std::size_t c) const { return xi_[c]; }

  /// Signed integer wavenumber k of column c.
  [[nodiscard]] long wavenumber(std::size_t c) const noexcept {
    return static_cast<long>(c) - static_cast<long>(n2_ / 2);
  }
  /// Column holding k = 0.
  [[nodiscard]] std::size_t zero_column() const noexcept { return n2_ / 2; }
  /// Column holding -k for column c (c >= 1). Column 0 (Nyquist) maps to itself.
  [[nodiscard]] std::size_t mirror_column(std::size_t c) const noexcept { return c == 0 ? 0 : n2_ - c; }

  /// Largest |k| kept by the 2/3 dealiasing rule.
  [[nodiscard]] long dealias_cutoff() const noexcept { return static_cast<long>(n2_ / 3); }

  /// True when |t_i| <= (1 - buffer) T, i.e. outside the boundary buffer.
  [[nodiscard]] bool interior(std::size_t i) const noexcept;
  /// First and one-past-last interior row.
  [[nodiscard]] std::size_t interior_begin() const noexcept { return interior_begin_; }
  [[nodiscard]] std::size_t interior_end() const noexcept { return interior_end_; }

  /// Same extents and resolution.
  [[nodiscard]] bool same_as(const Grid& other) const noexcept;

 private:
  double T_;
  double L2_;
  std::size_t nt_;
  std::size_t n2_;
  double ht_;
  double h2_;
  std::vector<double> t_;
  std::vector<double> x2_;
  std::vector<double> xi_;
  std::size_t interior_begin_{0};
  std::size_t interior_end_{0};
};

using GridPtr = std::shared_ptr<const Grid>;

/// make_grid(T, N_t, L2, N2): validated, shared, immutable grid.
[[nodiscard]] GridPtr make_grid(double T, std::size_t nt, double L2, std::size_t n2);

/// Complex field a(t_i, xi_c), row-major over (t, xi).
class SpectralField {
 public:
  SpectralField() = default;
  explicit SpectralField(GridPtr grid, std::string label = {});

  [[nodiscard]] const Grid& grid() const { return *grid_; }
  [[nodiscard]] const GridPtr& grid_ptr() const noexcept { return grid_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] cplx& operator()(std::size_t i, std::size_t c) { return data_[i * cols_ + c]; }
  [[nodiscard]] const cplx& operator()(std::size_t i, std::size_t c) const { return data_[i * cols_ + c]; }

  [[nodiscard]] std::span<cplx> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] std::span<const cplx> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] std::span<cplx> data() noexcept { return data_; }
  [[nodiscard]] std::span<const cplx> data() const noexcept { return data_; }

  void get_column(std::size_t c, std::span<cplx> out) const;
  void set_column(std::size_t c, std::span<const cplx> in);

  /// Largest |a| over all entries.
  [[nodiscard]] double max_abs() const;
  /// Largest |a(t, xi) - conj(a(t, -xi))| (and |Im a| on the Nyquist column).
  [[nodiscard]] double hermitian_defect() const;
  [[nodiscard]] bool all_finite() const;

  SpectralField& operator+=(const SpectralField& other);
  SpectralField& operator-=(const SpectralField& other);
  SpectralField& operator*=(cplx s);

 private:
  GridPtr grid_;
  std::string label_;
  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<cplx> data_;
};

[[nodiscard]] SpectralField operator+(SpectralField a, const SpectralField& b);
[[nodiscard]] SpectralField operator-(SpectralField a, const SpectralField& b);
[[nodiscard]] SpectralField operator*(cplx s, SpectralField a);

/// Real field f(t_i, x2_m), row-major over (t, x2).
class PhysicalField {
 public:
  PhysicalField() = default;
  explicit PhysicalField(GridPtr grid, std::string label = {});

  [[nodiscard]] const Grid& grid() const { return *grid_; }
  [[nodiscard]] const GridPtr& grid_ptr() const noexcept { return grid_; }
  [[nodiscard]] const std::string& label() const noexcept { return label_; }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  [[nodiscard]] double& operator()(std::size_t i, std::size_t m) { return data_[i * cols_ + m]; }
  [[nodiscard]] double operator()(std::size_t i, std::size_t m) const { return data_[i * cols_ + m]; }

  [[nodiscard]] std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  [[nodiscard]] std::span<double> data() noexcept { return data_; }
  [[nodiscard]] std::span<const double> data() const noexcept { return data_; }

  [[nodiscard]] double max_abs() const;
  [[nodiscard]] bool all_finite() const;

  /// Largest imaginary part discarded by the inverse transform that produced
  /// this field (0 for fields built directly).
  double discarded_imag{0.0};

 private:
  GridPtr grid_;
  std::string label_;
  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<double> data_;
};

/// Throws GridMismatch unless both fields live on equivalent grids.
void require_same_grid(const SpectralField& a, const SpectralField& b, const char* where);

/// Largest |a| on the boundary buffer divided by the largest |a| overall
/// (0 for an identically zero field).
[[nodiscard]] double boundary_mass(const SpectralField& a);

}  // namespace oseen

#endif
