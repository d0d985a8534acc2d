/*
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    https://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <olrwa/regression.hpp>

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace olrwa::io {

struct CsvSpec {
    std::string path;
    std::string target;
    std::vector<std::string> features;
    std::optional<std::uint64_t> shuffle_seed;
    /// Comma by default; the UCI student files use ';'.
    char delimiter = ',';
};

/// Splits one CSV record, honouring double-quoted fields with "" escapes.
std::vector<std::string> split_csv_line(std::string_view line, char delimiter = ',');

/// Reads the header row plus data rows and extracts the selected columns.
/// Rows keep file order unless shuffle_seed is set. Throws FileNotFound,
/// MissingColumn naming the column, or ParseError naming the 1-based data row
/// and column.
DataBatch load_csv(const CsvSpec& spec);

/// As load_csv, reading from an already-open stream; `source` names it in errors.
DataBatch read_csv(std::istream& in, const CsvSpec& spec, std::string_view source = "<stream>");

}// namespace olrwa::io
