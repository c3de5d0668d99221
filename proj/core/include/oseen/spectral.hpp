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

#ifndef OSEEN_SPECTRAL_HPP
#define OSEEN_SPECTRAL_HPP

#include <span>

#include "oseen/grid.hpp"

namespace oseen {

/// Hermitian defect tolerated by to_physical, relative to max |a|.
inline constexpr double kHermitianTolerance = 1e-10;

/// Row-wise transform along x2 with the continuous-transform normalization
///   a(t, xi_k) = h2 * sum_m f(t, x2_m) exp(-i xi_k x2_m),
/// i.e. a Riemann sum for F(f)(xi) = \int f exp(-i xi x2) dx2. The output is
/// exactly Hermitian-symmetric.
[[nodiscard]] SpectralField to_spectral(const PhysicalField& f);

/// Inverse of to_spectral: f(x2_m) = (1/L2) sum_k a_k exp(i xi_k x2_m).
/// Throws SymmetryViolation when the Hermitian defect exceeds
/// kHermitianTolerance * max|a|. The discarded imaginary residue (the defect)
/// is recorded in PhysicalField::discarded_imag.
[[nodiscard]] PhysicalField to_physical(const SpectralField& a);

/// Zeroes every column with |k| > N2/3 and the Nyquist column.
void dealias(SpectralField& a);
[[nodiscard]] SpectralField dealiased(SpectralField a);

/// Transform of the pointwise product of the physical fields behind a and b,
/// i.e. the xi-convolution (a * b)/(2 pi), with 2/3-rule dealiasing of inputs
/// and output.
[[nodiscard]] SpectralField spectral_product(const SpectralField& a, const SpectralField& b);

/// The three products a*a, a*b, b*b sharing two inverse transforms per row;
/// each equals the corresponding spectral_product bit for bit.
struct ProductTriple {
  SpectralField aa;
  SpectralField ab;
  SpectralField bb;
};
[[nodiscard]] ProductTriple spectral_products(const SpectralField& a, const SpectralField& b);

/// 4th-order finite differences along t (centered in the interior, one-sided
/// on the two nodes next to each end). order is 1 or 2. Requires N_t >= 8.
[[nodiscard]] SpectralField t_derivative(const SpectralField& a, int order);

/// Column kernel of t_derivative; `out` must not alias `in`.
void t_derivative_column(std::span<const cplx> in, double h, int order, std::span<cplx> out);

}  // namespace oseen

#endif
