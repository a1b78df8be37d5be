// Copyright 2026 The trotterobs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TROTTEROBS_CSV_H
#define TROTTEROBS_CSV_H

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace trotterobs {

/// 17 significant digits ("%.17g").
std::string csv_number(double value);

/// Comma-separated table with a header row and LF line endings.
class CsvTable {
   public:
    CsvTable() = default;
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> row);

    const std::vector<std::string> &header() const {
        return header_;
    }
    const std::vector<std::vector<std::string>> &rows() const {
        return rows_;
    }
    std::size_t num_rows() const {
        return rows_.size();
    }

    /// Index of a header column; throws std::invalid_argument if absent.
    std::size_t column(std::string_view name) const;
    const std::string &cell(std::size_t row, std::string_view name) const;

    std::string to_string() const;

   private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

/// Parses text written by CsvTable::to_string (quoted fields allowed).
/// Throws std::invalid_argument on a malformed table.
CsvTable parse_csv(std::string_view text);

/// Throw IoError on failure.
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, std::string_view content);

}  // namespace trotterobs

#endif
