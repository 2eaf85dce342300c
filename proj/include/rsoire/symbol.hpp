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

// Terminal symbols and words over them.

#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rsoire {

/// Raised on malformed concrete syntax (expressions, words, sample files).
/// `offset` is a byte offset into the offending text.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)),
          offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

/// True for characters allowed in a symbol token: [A-Za-z0-9_:.-].
constexpr bool is_symbol_char(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '_' || c == ':' || c == '.' || c == '-';
}

/// True if `name` is a valid symbol token. Names made only of underscores
/// are reserved (`_` is the epsilon literal).
bool is_valid_symbol_name(std::string_view name) noexcept;

/// A terminal symbol. Compared by full-name equality; ordered by name.
class Symbol {
public:
    /// Throws SyntaxError on a name outside the token class.
    explicit Symbol(std::string name);

    const std::string& name() const noexcept { return name_; }

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend std::strong_ordering operator<=>(const Symbol& a, const Symbol& b) {
        return a.name_.compare(b.name_) <=> 0;
    }

private:
    std::string name_;
};

/// A finite sequence of symbols; the empty word is epsilon.
using Word = std::vector<Symbol>;

/// Orders words by length first, then lexicographically by symbol names.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// Parses a space-separated token list ("a b a b"). Empty or blank text is
/// the empty word. Runs of whitespace are accepted.
Word parse_word(std::string_view text);

/// Tokens joined by single spaces; the empty word prints as "".
std::string to_string(const Word& w);

/// Like to_string, but the empty word prints as "_".
std::string display(const Word& w);

}  // namespace rsoire
