// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 botspot contributors

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace botspot {

// FNV-1a, used for deriving per-stage seeds and stratum keys. Not a
// content hash; use sha256 for that.
constexpr std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

// SplitMix64 finalizer; decorrelates nearby seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed for a named pipeline stage, derived from the experiment seed.
constexpr std::uint64_t derive_seed(std::uint64_t experiment_seed, std::string_view stage) {
    return splitmix64(experiment_seed ^ fnv1a64(stage));
}

// SHA-256 digest as lowercase hex. Used for artifact and config hashes.
std::string sha256_hex(std::string_view data);
std::string sha256_file_hex(const std::string& path);

} // namespace botspot
