// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 botspot contributors

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace botspot {

// Error kinds raised by the library. Kinds marked "user" in err_category()
// map to CLI exit code 2, everything else to 1.
enum class Errc {
    MissingColumn,
    UnmappableLabel,
    EmptyText,
    DegenerateStratum,
    MissingStopwordList,
    EmptyLexicon,
    EmptyVocabulary,
    DimensionMismatch,
    DuplicateDocId,
    NonFiniteValue,
    MalformedHeader,
    RowCountMismatch,
    SingleClassTraining,
    NegativeFeature,
    LengthMismatch,
    EmptyEvaluation,
    MissingPrediction,
    SchemaMismatch,
    FeatureSpaceMismatch,
    IoFailure,
    ConfigError,
    Internal,
};

std::string_view errc_name(Errc code);

// True for errors caused by user input (bad files, bad config) rather than
// library state.
bool errc_is_user_error(Errc code);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace botspot
