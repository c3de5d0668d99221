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

#ifndef OSEEN_IO_HPP
#define OSEEN_IO_HPP

/**
 * \file
 * \brief Binary field dumps and the text reports of a run.
 *
 * fields.bin layout (all little-endian):
 *
 *   char[4]  "OSNF"
 *   u32      version (1)
 *   u32      N_t
 *   u32      N2
 *   then for each field in order (v1_hat, v2_hat, p_hat):
 *     N_t * N2 pairs (re, im) of IEEE-754 float64, row-major over (t, xi),
 *     xi columns in centered order k = -N2/2 ... N2/2 - 1.
 */

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "oseen/grid.hpp"
#include "oseen/solver.hpp"

namespace oseen {

inline constexpr std::uint32_t kFieldsVersion = 1;

struct FieldsFile {
  std::uint32_t version{0};
  std::uint32_t nt{0};
  std::uint32_t n2{0};
  std::vector<std::vector<cplx>> fields;
};

/// Writes the fields in the given order. All must share one grid.
void write_fields(const std::string& path, const std::vector<const SpectralField*>& fields);

/// Reads every field stored in the file. Throws std::runtime_error on a bad
/// magic, version or size.
[[nodiscard]] FieldsFile read_fields(const std::string& path);

/// Loads field `index` of a file into a SpectralField on `grid`; throws
/// GridMismatch when the dimensions differ.
[[nodiscard]] SpectralField load_field(const FieldsFile& f, std::size_t index, const GridPtr& grid);

/// iteration,increment,gamma rows.
void write_iteration_csv(const std::string& path, const SolveReport& r);

}  // namespace oseen

#endif
