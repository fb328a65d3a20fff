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
#include <span>
#include <string>
#include <vector>

namespace oseenlab {

/// Formats a double with 17 significant digits ("%.17g" semantics), which
/// round-trips every finite value exactly.
std::string format_double(double v);

/// Writes a header row on construction, then one row per call. Cells are
/// comma-separated, rows end with '\n'.
class CsvWriter {
 public:
  CsvWriter(std::ostream& out, std::vector<std::string> header);

  void row(std::span<const double> values);
  /// Mixed row: text cells are written verbatim.
  void row(std::span<const std::string> cells);

  std::size_t columns() const noexcept { return header_.size(); }

 private:
  std::ostream& out_;
  std::vector<std::string> header_;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Index of a named column; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

CsvTable parse_csv(std::istream& in);
CsvTable read_csv(const std::filesystem::path& path);

}  // namespace oseenlab
