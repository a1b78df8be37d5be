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

#include "trotterobs/csv.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "trotterobs/errors.h"

namespace trotterobs {

namespace {

std::string quote(std::string_view field) {
    if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

std::string csv_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {
    if (header_.empty()) {
        throw std::invalid_argument("csv: header must not be empty");
    }
}

void CsvTable::add_row(std::vector<std::string> row) {
    if (row.size() != header_.size()) {
        throw std::invalid_argument("csv: row has " + std::to_string(row.size()) + " fields, header has " +
                                    std::to_string(header_.size()));
    }
    rows_.push_back(std::move(row));
}

std::size_t CsvTable::column(std::string_view name) const {
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (header_[i] == name) {
            return i;
        }
    }
    throw std::invalid_argument("csv: no column named '" + std::string(name) + "'");
}

const std::string &CsvTable::cell(std::size_t row, std::string_view name) const {
    return rows_.at(row).at(column(name));
}

std::string CsvTable::to_string() const {
    std::string out;
    auto emit = [&](const std::vector<std::string> &fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += quote(fields[i]);
        }
        out += '\n';
    };
    emit(header_);
    for (const auto &r : rows_) {
        emit(r);
    }
    return out;
}

CsvTable parse_csv(std::string_view text) {
    std::vector<std::vector<std::string>> records;
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool after_quote = false;
    bool record_open = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                    after_quote = true;
                }
            } else {
                field += c;
            }
            continue;
        }
        if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
            after_quote = false;
            record_open = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
                ++i;
            }
            fields.push_back(std::move(field));
            field.clear();
            records.push_back(std::move(fields));
            fields.clear();
            after_quote = false;
            record_open = false;
        } else if (c == '"') {
            if (!field.empty() || after_quote) {
                throw std::invalid_argument("csv: stray quote in field");
            }
            in_quotes = true;
            record_open = true;
        } else {
            if (after_quote) {
                throw std::invalid_argument("csv: text after closing quote");
            }
            field += c;
            record_open = true;
        }
    }
    if (in_quotes) {
        throw std::invalid_argument("csv: unterminated quoted field");
    }
    if (record_open || !field.empty()) {
        fields.push_back(std::move(field));
        records.push_back(std::move(fields));
    }
    if (records.empty()) {
        throw std::invalid_argument("csv: missing header row");
    }
    CsvTable table(records.front());
    for (std::size_t i = 1; i < records.size(); ++i) {
        if (records[i].size() == 1 && records[i][0].empty()) {
            continue;
        }
        if (records[i].size() != table.header().size()) {
            throw std::invalid_argument("csv: record " + std::to_string(i + 1) + " has " +
                                        std::to_string(records[i].size()) + " fields, expected " +
                                        std::to_string(table.header().size()));
        }
        table.add_row(records[i]);
    }
    return table;
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) {
        throw IoError("error reading '" + path + "'");
    }
    return ss.str();
}

void write_text_file(const std::string &path, std::string_view content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) {
        throw IoError("error writing '" + path + "'");
    }
}

}  // namespace trotterobs
