// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 botspot contributors

#pragma once

namespace botspot {

inline constexpr const char* kToolVersion = "0.1.0";

// Version of every JSON document this tool writes (configs, models,
// reports, manifests). Loaders reject documents with a different value.
inline constexpr int kSchemaVersion = 1;

} // namespace botspot
