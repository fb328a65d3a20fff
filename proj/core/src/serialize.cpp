// Copyright 2026 The oseenlab Authors.
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

#include "oseenlab/serialize.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "oseenlab/csv.hpp"

namespace oseenlab {
namespace {

constexpr std::array<char, 4> kMagic{'O', 'S', 'N', 'F'};
constexpr std::uint32_t kVersion = 1;

template <class T>
T to_little(T v) {
  if constexpr (std::endian::native == std::endian::little) {
    return v;
  } else {
    std::array<unsigned char, sizeof(T)> b;
    std::memcpy(b.data(), &v, sizeof(T));
    std::reverse(b.begin(), b.end());
    std::memcpy(&v, b.data(), sizeof(T));
    return v;
  }
}

template <class T>
void put(std::ostream& out, T v) {
  v = to_little(v);
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw std::runtime_error("read_field: truncated stream");
  return to_little(v);
}

void write_header(std::ostream& out, const GridSpec& g, std::uint32_t components) {
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, kVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.dim));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(g.points));
  put<std::uint32_t>(out, components);
  put<std::uint32_t>(out, 0);
  put<double>(out, g.half_period);
}

struct Header {
  GridSpec grid;
  std::uint32_t components = 0;
};

Header read_header(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw std::runtime_error("read_field: bad magic");
  if (get<std::uint32_t>(in) != kVersion) throw std::runtime_error("read_field: unsupported version");
  Header h;
  h.grid.dim = static_cast<int>(get<std::uint32_t>(in));
  h.grid.points = static_cast<int>(get<std::uint32_t>(in));
  h.components = get<std::uint32_t>(in);
  (void)get<std::uint32_t>(in);
  h.grid.half_period = get<double>(in);
  h.grid.validate();
  return h;
}

}  // namespace

void write_field(std::ostream& out, const VectorField& field) {
  write_header(out, field.grid(), static_cast<std::uint32_t>(field.components()));
  for (int c = 0; c < field.components(); ++c) {
    for (double v : field.component(c)) put<double>(out, v);
  }
  if (!out) throw std::runtime_error("write_field: I/O failure");
}

void write_field(std::ostream& out, const ScalarField& field) {
  write_header(out, field.grid(), 1);
  for (double v : field.values()) put<double>(out, v);
  if (!out) throw std::runtime_error("write_field: I/O failure");
}

void write_field(const std::filesystem::path& path, const VectorField& field) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("write_field: cannot open " + path.string());
  write_field(out, field);
}

VectorField read_vector_field(std::istream& in) {
  const Header h = read_header(in);
  if (static_cast<int>(h.components) != h.grid.dim) {
    throw std::runtime_error("read_vector_field: component count differs from dim");
  }
  VectorField f(h.grid);
  for (int c = 0; c < f.components(); ++c) {
    for (double& v : f.component(c)) v = get<double>(in);
  }
  return f;
}

VectorField read_vector_field(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("read_vector_field: cannot open " + path.string());
  return read_vector_field(in);
}

ScalarField read_scalar_field(std::istream& in) {
  const Header h = read_header(in);
  if (h.components != 1) throw std::runtime_error("read_scalar_field: expected one component");
  ScalarField f(h.grid);
  for (double& v : f.values()) v = get<double>(in);
  return f;
}

void write_field_csv(std::ostream& out, const VectorField& field) {
  const GridSpec& g = field.grid();
  std::vector<std::string> header;
  for (int a = 1; a <= g.dim; ++a) header.push_back("x" + std::to_string(a));
  for (int c = 1; c <= field.components(); ++c) header.push_back("u" + std::to_string(c));
  CsvWriter csv(out, header);
  std::vector<double> row(header.size());
  for_each_point(g, [&](std::size_t flat, const std::array<double, 3>& x) {
    for (int a = 0; a < g.dim; ++a) row[static_cast<std::size_t>(a)] = x[static_cast<std::size_t>(a)];
    for (int c = 0; c < field.components(); ++c) {
      row[static_cast<std::size_t>(g.dim + c)] = field.component(c)[flat];
    }
    csv.row(row);
  });
}

}  // namespace oseenlab
