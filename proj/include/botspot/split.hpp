// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 botspot contributors

#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "botspot/corpus.hpp"

namespace botspot {

enum class Partition { Train, Valid, Test };

std::string_view to_string(Partition p);
Partition partition_from_string(std::string_view s);

enum class StratumKey { Label, CreatorCategory };

struct SplitSpec {
    double train_ratio = 0.8;
    double valid_ratio = 0.1;
    double test_ratio = 0.1;
    std::uint64_t seed = 0;
    std::vector<StratumKey> strata_keys = {StratumKey::Label, StratumKey::CreatorCategory};

    // Ratios each in (0,1) and summing to 1 within 1e-9.
    void validate() const;
};

struct SplitAssignment {
    std::map<std::string, Partition> by_doc_id;

    Partition at(const std::string& doc_id) const;
    std::size_t count(Partition p) const;
};

// Deterministic stratified split. Within each stratum, members are sorted
// by doc_id, shuffled by an mt19937_64 seeded with
// splitmix64(seed ^ fnv1a64(stratum_key)), and apportioned to partitions by
// largest remainder. Strata with fewer than 3 documents are merged into a
// catch-all stratum; merges are reported through `warnings` when given.
SplitAssignment stratified_split(const Corpus& corpus, const SplitSpec& spec,
                                 std::vector<std::string>* warnings = nullptr);

// Integer partition sizes for one stratum of `n` documents: floor the
// quotas, then hand out the remainder by descending fractional part
// (train before valid before test on ties).
std::array<std::size_t, 3> largest_remainder(std::size_t n, const SplitSpec& spec);

// CSV doc_id,partition with partition in {train,valid,test}.
void export_split_csv(const SplitAssignment& assignment, const std::string& path);
SplitAssignment load_split_csv(const std::string& path);

} // namespace botspot
