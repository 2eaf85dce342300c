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

// Regular expressions with interleaving: AST, concrete syntax, and
// classification into SOIRE / RSOIRE.
//
// Concrete syntax, tightest binding first:
//
//   postfix   x*  x+  x?
//   concat    x y          (whitespace juxtaposition)
//   interleave x&y
//   choice    x|y
//
// `_` is epsilon and parentheses group.

#pragma once

#include <compare>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsoire/symbol.hpp"

namespace rsoire {

enum class Kind {
    Empty,  // empty language; internal to derivatives, never printed or parsed
    Epsilon,
    Sym,
    Star,
    Plus,
    Opt,
    Concat,
    Alt,
    Inter,
};

/// Immutable expression value with shared structure. Concat, Alt and Inter
/// are n-ary and always flattened: no child of a Concat is a Concat, and so
/// on. Copies are cheap.
class Expr {
public:
    /// Epsilon.
    Expr();

    static Expr epsilon();
    static Expr empty();
    static Expr sym(Symbol s);
    static Expr sym(std::string name) { return sym(Symbol(std::move(name))); }
    static Expr star(Expr e);
    static Expr plus(Expr e);
    static Expr opt(Expr e);

    // The n-ary builders flatten same-kind children. With a single child they
    // return it unchanged; with none, concat and inter give epsilon and alt
    // gives the empty language.
    static Expr concat(std::vector<Expr> kids);
    static Expr alt(std::vector<Expr> kids);
    static Expr inter(std::vector<Expr> kids);

    Kind kind() const noexcept { return node_->kind; }
    bool is(Kind k) const noexcept { return node_->kind == k; }

    /// Only meaningful for Kind::Sym.
    const Symbol& symbol() const;

    /// Children of unary and n-ary nodes (empty span for leaves).
    std::span<const Expr> kids() const noexcept { return node_->kids; }
    const Expr& kid(std::size_t i) const { return node_->kids.at(i); }

    /// Total structural order; equal iff the trees are identical.
    friend std::strong_ordering operator<=>(const Expr& a, const Expr& b);
    friend bool operator==(const Expr& a, const Expr& b) {
        return (a <=> b) == std::strong_ordering::equal;
    }

private:
    struct Node {
        Kind kind;
        std::vector<Symbol> sym;  // zero or one element
        std::vector<Expr> kids;
    };

    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Expr make(Kind k, std::vector<Expr> kids);
    static Expr nary(Kind k, std::vector<Expr> kids);

    std::shared_ptr<const Node> node_;
};

/// Parses concrete syntax. Throws SyntaxError (with byte offset) on empty
/// input or malformed text.
Expr parse(std::string_view text);

/// Canonical text with minimal parentheses. A Concat that is an operand of
/// `&` is parenthesized so "(b c)&a" reads as intended. Throws
/// std::logic_error on the internal empty-language node.
std::string print(const Expr& e);

/// Symbols occurring in `e`.
std::set<Symbol> alphabet(const Expr& e);

/// Symbols in order of first appearance in a left-to-right walk.
std::vector<Symbol> symbols_in_order(const Expr& e);

/// True iff no symbol labels two distinct leaves.
bool is_single_occurrence(const Expr& e);

/// True if `e` contains a node of kind `k`.
bool contains(const Expr& e, Kind k);

enum class SoClass { NotSoire, SoireOnly, Rsoire };

/// "not-soire", "soire" or "rsoire".
std::string_view to_string(SoClass c);

/// Classifies `e` against the restricted grammar
///
///   P := S P | P S | S | T | P|S
///   S := S&S | T
///   T := T|T | T T | _ | a | a* | a+ | a?
///
/// with x? read as x|_ and any stack of postfix operators on one symbol
/// accepted as a T.
SoClass classify(const Expr& e);

/// Rewrites to a fixpoint: collapses stacked postfix operators (x+? and x?+
/// become x*, x** becomes x*, and so on). Preserves the language.
Expr normalize(const Expr& e);

/// Number of nodes; used for size bounds in tests.
std::size_t size(const Expr& e);

}  // namespace rsoire
