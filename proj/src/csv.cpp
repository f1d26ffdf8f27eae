// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 botspot contributors

#include "botspot/csv.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "botspot/error.hpp"

namespace botspot::csv {

namespace {

// Parses one record starting at the current stream position. Returns false
// on immediate EOF.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    int c = in.get();
    if (c == EOF) return false;

    std::string field;
    bool quoted = false;
    for (;;) {
        if (c == EOF) {
            fields.push_back(std::move(field));
            return true;
        }
        if (quoted) {
            if (c == '"') {
                int next = in.get();
                if (next == '"') {
                    field.push_back('"');
                } else {
                    quoted = false;
                    if (next == EOF) {
                        fields.push_back(std::move(field));
                        return true;
                    }
                    in.unget();
                }
            } else {
                field.push_back(static_cast<char>(c));
            }
        } else if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            if (!field.empty() && field.back() == '\r') field.pop_back();
            fields.push_back(std::move(field));
            return true;
        } else {
            field.push_back(static_cast<char>(c));
        }
        c = in.get();
    }
}

} // namespace

int Table::column_index(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return static_cast<int>(i);
    return -1;
}

Table read_stream(std::istream& in) {
    Table table;
    if (!read_record(in, table.header))
        raise(Errc::MalformedHeader, "CSV input is empty; a header row is required");
    std::vector<std::string> fields;
    while (read_record(in, fields)) {
        if (fields.size() == 1 && fields[0].empty()) continue; // trailing blank line
        table.rows.push_back(fields);
    }
    return table;
}

Table read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::IoFailure, "cannot open CSV file: " + path);
    return read_stream(in);
}

std::string quote(const std::string& field) {
    bool needs_quote = field.find_first_of(",\"\r\n") != std::string::npos;
    if (!needs_quote) return field;
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out << ',';
        out << quote(fields[i]);
    }
    out << '\n';
}

} // namespace botspot::csv
