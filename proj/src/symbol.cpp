// Copyright 2026 The rsoire Authors
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

#include "rsoire/symbol.hpp"

#include <algorithm>

namespace rsoire {

bool is_valid_symbol_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    if (!std::all_of(name.begin(), name.end(), is_symbol_char)) return false;
    return !std::all_of(name.begin(), name.end(), [](char c) { return c == '_'; });
}

Symbol::Symbol(std::string name) : name_(std::move(name)) {
    if (!is_valid_symbol_name(name_)) {
        throw SyntaxError("invalid symbol name '" + name_ + "'", 0);
    }
}

Word parse_word(std::string_view text) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < text.size() && is_symbol_char(text[i])) ++i;
        if (i == start) {
            throw SyntaxError(std::string("unexpected character '") + text[i] + "' in word", i);
        }
        std::string_view tok = text.substr(start, i - start);
        if (!is_valid_symbol_name(tok)) {
            throw SyntaxError("reserved token '" + std::string(tok) + "' in word", start);
        }
        w.emplace_back(std::string(tok));
    }
    return w;
}

std::string to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].name();
    }
    return out;
}

std::string display(const Word& w) { return w.empty() ? std::string("_") : to_string(w); }

}  // namespace rsoire
