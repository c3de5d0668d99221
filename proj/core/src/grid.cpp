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

#include "oseen/grid.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "oseen/error.hpp"

namespace oseen {

Grid::Grid(double T, std::size_t nt, double L2, std::size_t n2)
    : T_{T}, L2_{L2}, nt_{nt}, n2_{n2} {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw InvalidArgument("make_grid: T must be positive and finite");
  }
  if (!(L2 > 0.0) || !std::isfinite(L2)) {
    throw InvalidArgument("make_grid: L2 must be positive and finite");
  }
  if (nt < 4 || nt % 2 != 0) {
    throw InvalidArgument("make_grid: N_t must be even and >= 4");
  }
  if (n2 < 16 || !std::has_single_bit(n2)) {
    throw InvalidArgument("make_grid: N2 must be a power of two >= 16");
  }

  ht_ = 2.0 * T / static_cast<double>(nt);
  h2_ = L2 / static_cast<double>(n2);

  t_.resize(nt);
  const double half_nt = static_cast<double>(nt) / 2.0;
  for (std::size_t j = 0; j < nt; ++j) {
    t_[j] = (static_cast<double>(j) + 0.5 - half_nt) * ht_;
  }
  x2_.resize(n2);
  for (std::size_t m = 0; m < n2; ++m) {
    x2_[m] = -L2 / 2.0 + static_cast<double>(m) * h2_;
  }
  xi_.resize(n2);
  for (std::size_t c = 0; c < n2; ++c) {
    xi_[c] = 2.0 * std::numbers::pi * static_cast<double>(wavenumber(c)) / L2;
  }

  const double limit = (1.0 - kBoundaryBufferFraction) * T;
  interior_begin_ = nt;
  interior_end_ = 0;
  for (std::size_t j = 0; j < nt; ++j) {
    if (std::abs(t_[j]) <= limit) {
      interior_begin_ = std::min(interior_begin_, j);
      interior_end_ = j + 1;
    }
  }
  if (interior_end_ <= interior_begin_) {
    interior_begin_ = interior_end_ = 0;
  }
}

bool Grid::interior(std::size_t i) const noexcept { return i >= interior_begin_ && i < interior_end_; }

bool Grid::same_as(const Grid& other) const noexcept {
  return nt_ == other.nt_ && n2_ == other.n2_ && T_ == other.T_ && L2_ == other.L2_;
}

GridPtr make_grid(double T, std::size_t nt, double L2, std::size_t n2) {
  return std::make_shared<const Grid>(T, nt, L2, n2);
}

// SpectralField ------------------------------------------------------------

SpectralField::SpectralField(GridPtr grid, std::string label)
    : grid_{std::move(grid)}, label_{std::move(label)} {
  if (!grid_) {
    throw InvalidArgument("SpectralField: null grid");
  }
  rows_ = grid_->nt();
  cols_ = grid_->n2();
  data_.assign(rows_ * cols_, cplx{0.0, 0.0});
}

void SpectralField::get_column(std::size_t c, std::span<cplx> out) const {
  for (std::size_t i = 0; i < rows_; ++i) {
    out[i] = data_[i * cols_ + c];
  }
}

void SpectralField::set_column(std::size_t c, std::span<const cplx> in) {
  for (std::size_t i = 0; i < rows_; ++i) {
    data_[i * cols_ + c] = in[i];
  }
}

double SpectralField::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) {
    m = std::max(m, std::abs(z));
  }
  return m;
}

double SpectralField::hermitian_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) {
    const cplx* r = data_.data() + i * cols_;
    d = std::max(d, std::abs(r[0].imag()));
    for (std::size_t c = 1; c < cols_; ++c) {
      d = std::max(d, std::abs(r[c] - std::conj(r[cols_ - c])));
    }
  }
  return d;
}

bool SpectralField::all_finite() const {
  return std::all_of(data_.begin(), data_.end(),
                     [](const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); });
}

SpectralField& SpectralField::operator+=(const SpectralField& other) {
  require_same_grid(*this, other, "SpectralField::operator+=");
  for (std::size_t n = 0; n < data_.size(); ++n) {
    data_[n] += other.data_[n];
  }
  return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& other) {
  require_same_grid(*this, other, "SpectralField::operator-=");
  for (std::size_t n = 0; n < data_.size(); ++n) {
    data_[n] -= other.data_[n];
  }
  return *this;
}

SpectralField& SpectralField::operator*=(cplx s) {
  for (auto& z : data_) {
    z *= s;
  }
  return *this;
}

SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
SpectralField operator*(cplx s, SpectralField a) { return a *= s; }

// PhysicalField ------------------------------------------------------------

PhysicalField::PhysicalField(GridPtr grid, std::string label)
    : grid_{std::move(grid)}, label_{std::move(label)} {
  if (!grid_) {
    throw InvalidArgument("PhysicalField: null grid");
  }
  rows_ = grid_->nt();
  cols_ = grid_->n2();
  data_.assign(rows_ * cols_, 0.0);
}

double PhysicalField::max_abs() const {
  double m = 0.0;
  for (double v : data_) {
    m = std::max(m, std::abs(v));
  }
  return m;
}

bool PhysicalField::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

void require_same_grid(const SpectralField& a, const SpectralField& b, const char* where) {
  if (!a.grid_ptr() || !b.grid_ptr() || !a.grid().same_as(b.grid())) {
    throw GridMismatch(std::string(where) + ": fields live on different grids");
  }
}

double boundary_mass(const SpectralField& a) {
  const Grid& g = a.grid();
  double overall = 0.0;
  double buffer = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row_max = 0.0;
    for (const auto& z : a.row(i)) {
      row_max = std::max(row_max, std::abs(z));
    }
    overall = std::max(overall, row_max);
    if (!g.interior(i)) {
      buffer = std::max(buffer, row_max);
    }
  }
  return overall > 0.0 ? buffer / overall : 0.0;
}

}  // namespace oseen
