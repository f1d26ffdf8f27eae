// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 botspot contributors

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace botspot::csv {

// RFC 4180 records: comma separated, fields optionally quoted with '"',
// quotes escaped by doubling, newlines allowed inside quoted fields.
// Accepts LF and CRLF line endings.

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    // Column position or -1.
    int column_index(const std::string& name) const;
};

Table read_file(const std::string& path);
Table read_stream(std::istream& in);

std::string quote(const std::string& field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

} // namespace botspot::csv
