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
#include <olrwa/csv.hpp>
#include <olrwa/error.hpp>
#include <olrwa/rng.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <utility>

namespace olrwa::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::size_t column_index(const std::vector<std::string>& header, const std::string& name, std::string_view source) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
        throw Error(ErrorKind::MissingColumn, "column '" + name + "' not found in " + std::string(source));
    }
    return static_cast<std::size_t>(it - header.begin());
}

double parse_cell(std::string_view cell, std::size_t row, const std::string& column) {
    const std::string_view t = trim(cell);
    double value = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (!t.empty() && *first == '+') {
        ++first;
    }
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (t.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
        throw Error(ErrorKind::ParseError,
                    "row " + std::to_string(row) + ", column '" + column + "': '" + std::string(cell) + "' is not a number");
    }
    return value;
}

}// namespace

std::vector<std::string> split_csv_line(std::string_view line, char delimiter) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                field.push_back('"');
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                field.push_back(c);
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == delimiter) {
            fields.push_back(std::move(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(std::move(field));
    return fields;
}

DataBatch read_csv(std::istream& in, const CsvSpec& spec, std::string_view source) {
    if (spec.features.empty()) {
        throw Error(ErrorKind::InvalidArgument, "at least one feature column is required");
    }
    if (std::find(spec.features.begin(), spec.features.end(), spec.target) != spec.features.end()) {
        throw Error(ErrorKind::InvalidArgument, "target '" + spec.target + "' is also listed as a feature");
    }

    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorKind::ParseError, std::string(source) + " has no header row");
    }
    if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        line.erase(0, 3);
    }
    std::vector<std::string> header = split_csv_line(line, spec.delimiter);
    for (auto& h : header) {
        h = std::string(trim(h));
    }

    std::vector<std::size_t> feature_cols;
    for (const auto& name : spec.features) {
        feature_cols.push_back(column_index(header, name, source));
    }
    const std::size_t target_col = column_index(header, spec.target, source);

    const std::size_t m = spec.features.size();
    std::vector<double> features;
    Vector targets;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            continue;
        }
        ++row;
        const auto cells = split_csv_line(line, spec.delimiter);
        auto cell = [&](std::size_t col, const std::string& name) -> double {
            if (col >= cells.size()) {
                throw Error(ErrorKind::ParseError, "row " + std::to_string(row) + ", column '" + name + "': row has only " +
                                                       std::to_string(cells.size()) + " fields");
            }
            return parse_cell(cells[col], row, name);
        };
        for (std::size_t j = 0; j < m; ++j) {
            features.push_back(cell(feature_cols[j], spec.features[j]));
        }
        targets.push_back(cell(target_col, spec.target));
    }

    DataBatch batch(Matrix(row, m, std::move(features)), std::move(targets));
    if (spec.shuffle_seed) {
        Rng rng(*spec.shuffle_seed);
        batch = batch.select(rng.permutation(batch.size()));
    }
    return batch;
}

DataBatch load_csv(const CsvSpec& spec) {
    std::ifstream in(spec.path);
    if (!in) {
        throw Error(ErrorKind::FileNotFound, "cannot open '" + spec.path + "'");
    }
    return read_csv(in, spec, spec.path);
}

}// namespace olrwa::io
