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

// Language semantics of expressions with interleaving.
//
// Two independent routes are provided: symbolic derivatives (matches,
// bounded_equiv, shortlex_words) and explicit bounded enumeration
// (enumerate, shuffle). Tests check one against the other.

#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <variant>
#include <vector>

#include "rsoire/expr.hpp"
#include "rsoire/symbol.hpp"

namespace rsoire {

using WordSet = std::set<Word, ShortLex>;

inline constexpr std::size_t kDefaultWordCap = 1'000'000;

/// Thrown when a bounded construction would exceed its word/state budget.
class EnumerationCapExceeded : public std::runtime_error {
public:
    explicit EnumerationCapExceeded(std::size_t cap)
        : std::runtime_error("enumeration cap of " + std::to_string(cap) + " exceeded"), cap_(cap) {}
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t cap_;
};

/// All interleavings of u and v.
WordSet shuffle(const Word& u, const Word& v);

bool nullable(const Expr& e);

/// Length of the shortest word of L(e); nullopt for the empty language.
std::optional<std::size_t> min_length(const Expr& e);

/// An expression for { w : a·w ∈ L(e) }. Dead branches collapse to
/// Expr::empty().
Expr derivative(const Expr& e, const Symbol& a);

bool matches(const Expr& e, const Word& w);

struct BoundedLang {
    std::size_t max_len = 0;
    WordSet words;
};

/// { w ∈ L(e) : |w| ≤ max_len }, built compositionally. Throws
/// EnumerationCapExceeded when an intermediate set passes `cap` words.
BoundedLang enumerate(const Expr& e, std::size_t max_len, std::size_t cap = kDefaultWordCap);

struct Equal {
    friend bool operator==(const Equal&, const Equal&) = default;
};
struct Counterexample {
    Word word;
    friend bool operator==(const Counterexample&, const Counterexample&) = default;
};
using EquivResult = std::variant<Equal, Counterexample>;

/// Compares L(e1) and L(e2) up to length max_len. On a difference, returns
/// the shortlex-least word of the symmetric difference. Explores pairs of
/// derivatives breadth-first; throws EnumerationCapExceeded past `cap`
/// distinct pairs.
EquivResult bounded_equiv(const Expr& e1, const Expr& e2, std::size_t max_len,
                          std::size_t cap = kDefaultWordCap);

struct ShortlexPrefix {
    std::vector<Word> words;
    /// Length of the first word left out, if the limit cut the language.
    std::optional<std::size_t> first_dropped_length;
};

/// The first `limit` words of { w ∈ L(e) : |w| ≤ max_len } in shortlex
/// order, generated lazily so large bounded languages are never
/// materialized. `memo_cap` bounds the (derivative, length) table.
ShortlexPrefix shortlex_words(const Expr& e, std::size_t max_len, std::size_t limit,
                              std::size_t memo_cap = kDefaultWordCap);

}  // namespace rsoire
