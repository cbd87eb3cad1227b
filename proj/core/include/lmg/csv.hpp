// Copyright 2026 The lmg Authors
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


#ifndef LMG_CSV_HPP
#define LMG_CSV_HPP

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace lmg {

using CsvCell = std::variant<double, long, std::string>;

/// Tabular experiment output: '#'-prefixed header lines, one column-name
/// line, then comma-separated rows.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::string> columns;
  std::vector<std::vector<CsvCell>> rows;
};

/// 17 significant digits with '.' as decimal point, independent of the C locale.
std::string format_double(double value);

void write_csv(const CsvTable& table, std::ostream& out);
/// Throws IoError with the path on failure.
void write_csv(const CsvTable& table, const std::string& path);

}  // namespace lmg

#endif  // LMG_CSV_HPP
