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

#include "oseen/io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <stdexcept>

#include "oseen/error.hpp"

namespace oseen {

namespace {

constexpr std::array<char, 4> kMagic{'O', 'S', 'N', 'F'};

template <typename T>
T to_little(T x) {
  if constexpr (std::endian::native == std::endian::big) {
    auto bytes = std::bit_cast<std::array<unsigned char, sizeof(T)>>(x);
    std::reverse(bytes.begin(), bytes.end());
    return std::bit_cast<T>(bytes);
  }
  return x;
}

void put_u32(std::ofstream& out, std::uint32_t v) {
  v = to_little(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

std::uint32_t get_u32(std::ifstream& in) {
  std::uint32_t v = 0;
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  return to_little(v);
}

}  // namespace

void write_fields(const std::string& path, const std::vector<const SpectralField*>& fields) {
  if (fields.empty()) {
    throw InvalidArgument("write_fields: nothing to write");
  }
  for (const auto* f : fields) {
    require_same_grid(*fields.front(), *f, "write_fields");
  }
  const Grid& g = fields.front()->grid();
  std::ofstream out{path, std::ios::binary | std::ios::trunc};
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out.write(kMagic.data(), kMagic.size());
  put_u32(out, kFieldsVersion);
  put_u32(out, static_cast<std::uint32_t>(g.nt()));
  put_u32(out, static_cast<std::uint32_t>(g.n2()));
  std::vector<double> buf;
  for (const auto* f : fields) {
    const auto d = f->data();
    buf.resize(2 * d.size());
    for (std::size_t k = 0; k < d.size(); ++k) {
      buf[2 * k] = to_little(d[k].real());
      buf[2 * k + 1] = to_little(d[k].imag());
    }
    out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(double)));
  }
  if (!out) {
    throw std::runtime_error("write to '" + path + "' failed");
  }
}

FieldsFile read_fields(const std::string& path) {
  std::ifstream in{path, std::ios::binary | std::ios::ate};
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  const auto size = static_cast<std::size_t>(in.tellg());
  in.seekg(0);
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  FieldsFile f;
  f.version = get_u32(in);
  f.nt = get_u32(in);
  f.n2 = get_u32(in);
  if (!in || magic != kMagic) {
    throw std::runtime_error("'" + path + "' is not a fields file");
  }
  if (f.version != kFieldsVersion) {
    throw std::runtime_error("'" + path + "' has unsupported version " + std::to_string(f.version));
  }
  const std::size_t header = 16;
  const std::size_t per_field = static_cast<std::size_t>(f.nt) * f.n2 * 2 * sizeof(double);
  if (per_field == 0 || size < header || (size - header) % per_field != 0) {
    throw std::runtime_error("'" + path + "' has a truncated or inconsistent payload");
  }
  const std::size_t count = (size - header) / per_field;
  std::vector<double> buf(per_field / sizeof(double));
  for (std::size_t k = 0; k < count; ++k) {
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(per_field));
    if (!in) {
      throw std::runtime_error("'" + path + "': read failed");
    }
    std::vector<cplx> field(buf.size() / 2);
    for (std::size_t m = 0; m < field.size(); ++m) {
      field[m] = cplx{to_little(buf[2 * m]), to_little(buf[2 * m + 1])};
    }
    f.fields.push_back(std::move(field));
  }
  return f;
}

SpectralField load_field(const FieldsFile& f, std::size_t index, const GridPtr& grid) {
  if (grid->nt() != f.nt || grid->n2() != f.n2) {
    throw GridMismatch("load_field: file dimensions differ from the grid");
  }
  if (index >= f.fields.size()) {
    throw InvalidArgument("load_field: field index out of range");
  }
  SpectralField a{grid};
  std::copy(f.fields[index].begin(), f.fields[index].end(), a.data().begin());
  return a;
}

void write_iteration_csv(const std::string& path, const SolveReport& r) {
  std::ofstream out{path, std::ios::trunc};
  if (!out) {
    throw std::runtime_error("cannot open '" + path + "' for writing");
  }
  out.precision(17);
  out << "iteration,increment,gamma\n";
  for (std::size_t n = 0; n < r.increments.size(); ++n) {
    out << n + 1 << ',' << r.increments[n] << ',';
    if (n > 0) {
      out << r.gammas[n - 1];
    }
    out << '\n';
  }
}

}  // namespace oseen
