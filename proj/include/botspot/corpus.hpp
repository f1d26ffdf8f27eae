// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 botspot contributors

#pragma once

#include <set>
#include <string>
#include <vector>

#include "botspot/document.hpp"

namespace botspot {

// Maps CSV columns onto Document fields. Loaded from a JSON object:
//   {"text": col, "label": col, "label_values": {raw -> HUMAN|BOT},
//    "category": col, "category_values": {raw -> category},
//    "id": col, "account": col}
// "category", "category_values", "id" and "account" are optional.
struct SchemaMapping {
    std::string text_column;
    std::string label_column;
    std::vector<std::pair<std::string, Label>> label_values;
    std::string category_column;                                      // empty = unmapped
    std::vector<std::pair<std::string, CreatorCategory>> category_values;
    std::string id_column;                                            // empty = row ordinal
    std::string account_column;                                       // empty = unmapped

    static SchemaMapping from_json_file(const std::string& path);
    static SchemaMapping from_json_text(const std::string& json_text);

    // Schema for files written by export_csv (header doc_id,label,
    // creator_category,account,text).
    static SchemaMapping canonical();
};

struct Corpus {
    std::vector<Document> documents;
    std::string provenance; // source file + schema name

    std::size_t size() const { return documents.size(); }

    bool operator==(const Corpus& other) const { return documents == other.documents; }
};

struct IngestStats {
    std::size_t rows_read = 0;
    std::size_t rows_ingested = 0;
    std::size_t empty_text_rejected = 0;
};

// One Document per data row. Blank-text rows are rejected and counted in
// stats rather than aborting the whole file. Raises MissingColumn /
// UnmappableLabel (naming the offending row).
Corpus ingest(const std::string& csv_path, const SchemaMapping& schema,
              IngestStats* stats = nullptr);

// Canonical corpus CSV: header doc_id,label,creator_category,account,text.
void export_csv(const Corpus& corpus, const std::string& path);
Corpus load_canonical(const std::string& path);

// Documents whose creator_category is in cats, original order preserved.
Corpus filter_by_category(const Corpus& corpus, const std::set<CreatorCategory>& cats);

// Drops rows whose text exactly matches an earlier row's text.
Corpus dedupe_exact(const Corpus& corpus, std::size_t* dropped = nullptr);

} // namespace botspot
