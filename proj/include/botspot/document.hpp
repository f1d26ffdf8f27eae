// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 botspot contributors

#pragma once

#include <string>
#include <string_view>

#include "botspot/error.hpp"

namespace botspot {

enum class Label { Human, Bot };

// Provenance of the tweet: humans, GPT-2 bots, RNN bots, or any other bot
// technology. Label and category are linked: Human label iff Human category.
enum class CreatorCategory { Human, Gpt2, Rnn, Others };

std::string_view to_string(Label label);
std::string_view to_string(CreatorCategory cat);
Label label_from_string(std::string_view s);
CreatorCategory category_from_string(std::string_view s);

struct Document {
    std::string doc_id;
    std::string text;
    Label label = Label::Human;
    CreatorCategory creator_category = CreatorCategory::Human;
    std::string account;

    bool operator==(const Document&) const = default;
};

// label = HUMAN iff creator_category = HUMAN; raises UnmappableLabel
// otherwise (the caller knows which row it came from).
void check_label_category(Label label, CreatorCategory cat, const std::string& context);

} // namespace botspot
