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

#pragma once

#include <filesystem>
#include <iosfwd>

#include "oseenlab/field.hpp"

namespace oseenlab {

// Binary field container, all integers and floats little-endian:
//
//   offset  size  content
//   0       4     magic "OSNF"
//   4       4     uint32 format version (1)
//   8       4     uint32 dim (2 or 3)
//   12      4     uint32 points per axis N
//   16      4     uint32 component count C
//   20      4     uint32 reserved (0)
//   24      8     float64 half period L
//   32      ...   C blocks of N^dim float64 values, row-major (x1 slowest)
//
// Scalar fields are written with C = 1.

void write_field(std::ostream& out, const VectorField& field);
void write_field(std::ostream& out, const ScalarField& field);
void write_field(const std::filesystem::path& path, const VectorField& field);

/// Reads a container with C == dim. Throws std::runtime_error on a bad header.
VectorField read_vector_field(std::istream& in);
VectorField read_vector_field(const std::filesystem::path& path);
ScalarField read_scalar_field(std::istream& in);

/// Columns x1..x_dim then u1..u_C; intended for small grids.
void write_field_csv(std::ostream& out, const VectorField& field);

}  // namespace oseenlab
