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

#include "rsoire/expr.hpp"

#include <algorithm>
#include <stdexcept>

namespace rsoire {

// ---------------------------------------------------------------------------
// Construction

Expr::Expr() : Expr(epsilon()) {}

Expr Expr::make(Kind k, std::vector<Expr> kids) {
    return Expr(std::make_shared<const Node>(Node{k, {}, std::move(kids)}));
}

Expr Expr::epsilon() {
    static const Expr eps(std::make_shared<const Node>(Node{Kind::Epsilon, {}, {}}));
    return eps;
}

Expr Expr::empty() {
    static const Expr nil(std::make_shared<const Node>(Node{Kind::Empty, {}, {}}));
    return nil;
}

Expr Expr::sym(Symbol s) {
    return Expr(std::make_shared<const Node>(Node{Kind::Sym, {std::move(s)}, {}}));
}

Expr Expr::star(Expr e) { return make(Kind::Star, {std::move(e)}); }
Expr Expr::plus(Expr e) { return make(Kind::Plus, {std::move(e)}); }
Expr Expr::opt(Expr e) { return make(Kind::Opt, {std::move(e)}); }

Expr Expr::nary(Kind k, std::vector<Expr> kids) {
    std::vector<Expr> flat;
    flat.reserve(kids.size());
    for (auto& c : kids) {
        if (c.kind() == k) {
            flat.insert(flat.end(), c.kids().begin(), c.kids().end());
        } else {
            flat.push_back(std::move(c));
        }
    }
    if (flat.size() == 1) return flat.front();
    if (flat.empty()) return k == Kind::Alt ? empty() : epsilon();
    return make(k, std::move(flat));
}

Expr Expr::concat(std::vector<Expr> kids) { return nary(Kind::Concat, std::move(kids)); }
Expr Expr::alt(std::vector<Expr> kids) { return nary(Kind::Alt, std::move(kids)); }
Expr Expr::inter(std::vector<Expr> kids) { return nary(Kind::Inter, std::move(kids)); }

const Symbol& Expr::symbol() const {
    if (node_->sym.empty()) throw std::logic_error("Expr::symbol on a non-symbol node");
    return node_->sym.front();
}

std::strong_ordering operator<=>(const Expr& a, const Expr& b) {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (a.kind() == Kind::Sym) return a.symbol() <=> b.symbol();
    auto ka = a.kids();
    auto kb = b.kids();
    if (auto c = ka.size() <=> kb.size(); c != 0) return c;
    for (std::size_t i = 0; i < ka.size(); ++i) {
        if (auto c = ka[i] <=> kb[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Expr run() {
        skip_ws();
        if (pos_ == text_.size()) throw SyntaxError("empty expression", pos_);
        Expr e = parse_alt();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected character");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        std::string where = pos_ < text_.size() ? " '" + std::string(1, text_[pos_]) + "'" : " at end";
        throw SyntaxError(msg + where, pos_);
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) {
            ++pos_;
        }
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool starts_atom(char c) const { return c == '(' || is_symbol_char(c); }

    Expr parse_alt() {
        std::vector<Expr> kids{parse_inter()};
        while (peek() == '|') {
            ++pos_;
            kids.push_back(parse_inter());
        }
        return Expr::alt(std::move(kids));
    }

    Expr parse_inter() {
        std::vector<Expr> kids{parse_concat()};
        while (peek() == '&') {
            ++pos_;
            kids.push_back(parse_concat());
        }
        return Expr::inter(std::move(kids));
    }

    Expr parse_concat() {
        std::vector<Expr> kids{parse_postfix()};
        while (starts_atom(peek())) kids.push_back(parse_postfix());
        return Expr::concat(std::move(kids));
    }

    Expr parse_postfix() {
        Expr e = parse_atom();
        // Postfix operators bind to the preceding atom without intervening space.
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '*') {
                e = Expr::star(std::move(e));
            } else if (c == '+') {
                e = Expr::plus(std::move(e));
            } else if (c == '?') {
                e = Expr::opt(std::move(e));
            } else {
                break;
            }
            ++pos_;
        }
        return e;
    }

    Expr parse_atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Expr e = parse_alt();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return e;
        }
        if (!is_symbol_char(c)) fail("expected symbol, '_' or '('");
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_symbol_char(text_[pos_])) ++pos_;
        std::string_view tok = text_.substr(start, pos_ - start);
        if (tok == "_") return Expr::epsilon();
        if (!is_valid_symbol_name(tok)) {
            throw SyntaxError("reserved token '" + std::string(tok) + "'", start);
        }
        return Expr::sym(Symbol(std::string(tok)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Binding strength used for parenthesization.
int level(const Expr& e) {
    switch (e.kind()) {
        case Kind::Alt: return 0;
        case Kind::Inter: return 1;
        case Kind::Concat: return 2;
        case Kind::Star:
        case Kind::Plus:
        case Kind::Opt: return 3;
        default: return 4;
    }
}

void print_into(const Expr& e, std::string& out);

void print_child(const Expr& c, bool parens, std::string& out) {
    if (parens) out += '(';
    print_into(c, out);
    if (parens) out += ')';
}

void print_into(const Expr& e, std::string& out) {
    switch (e.kind()) {
        case Kind::Empty: throw std::logic_error("the empty-language expression has no concrete syntax");
        case Kind::Epsilon: out += '_'; return;
        case Kind::Sym: out += e.symbol().name(); return;
        case Kind::Star:
        case Kind::Plus:
        case Kind::Opt: {
            print_child(e.kid(0), level(e.kid(0)) < 3, out);
            out += e.is(Kind::Star) ? '*' : e.is(Kind::Plus) ? '+' : '?';
            return;
        }
        case Kind::Concat: {
            bool first = true;
            for (const auto& c : e.kids()) {
                if (!first) out += ' ';
                first = false;
                print_child(c, level(c) <= 2, out);
            }
            return;
        }
        case Kind::Inter:
        case Kind::Alt: {
            const int self = level(e);
            const char op = e.is(Kind::Alt) ? '|' : '&';
            bool first = true;
            for (const auto& c : e.kids()) {
                if (!first) out += op;
                first = false;
                bool parens = level(c) <= self || (e.is(Kind::Inter) && c.is(Kind::Concat));
                print_child(c, parens, out);
            }
            return;
        }
    }
}

void collect_symbols(const Expr& e, std::vector<Symbol>& out) {
    if (e.is(Kind::Sym)) {
        out.push_back(e.symbol());
        return;
    }
    for (const auto& c : e.kids()) collect_symbols(c, out);
}

// Classification predicates. Opt(x) is read as Alt(x, _).

bool is_symbol_chain(const Expr& e) {
    const Expr* cur = &e;
    while (cur->is(Kind::Star) || cur->is(Kind::Plus) || cur->is(Kind::Opt)) cur = &cur->kid(0);
    return cur->is(Kind::Sym) && cur != &e;
}

bool is_t(const Expr& e) {
    switch (e.kind()) {
        case Kind::Epsilon:
        case Kind::Sym: return true;
        case Kind::Star:
        case Kind::Plus: return is_symbol_chain(e);
        case Kind::Opt: return is_symbol_chain(e) || is_t(e.kid(0));
        case Kind::Alt:
        case Kind::Concat:
            return std::all_of(e.kids().begin(), e.kids().end(), is_t);
        default: return false;
    }
}

bool is_s(const Expr& e) {
    if (is_t(e)) return true;
    if (e.is(Kind::Inter)) return std::all_of(e.kids().begin(), e.kids().end(), is_s);
    return false;
}

bool is_p(const Expr& e) {
    if (is_s(e)) return true;
    auto kids = e.kids();
    switch (e.kind()) {
        case Kind::Opt: return is_p(kids[0]);
        case Kind::Concat: {
            // S P | P S, flattened: every factor is S except at most one P.
            auto non_s = std::count_if(kids.begin(), kids.end(), [](const Expr& c) { return !is_s(c); });
            if (non_s == 0) return true;
            if (non_s == 0) return true;
            if (non_s > 1) return false;
            auto it = std::find_if(kids.begin(), kids.end(), [](const Expr& c) { return !is_s(c); });
            return is_p(*it);
        }
        case Kind::Alt: {
            // P|S with | commutative: every alternative is S except at most one P.
            auto non_s = std::count_if(kids.begin(), kids.end(), [](const Expr& c) { return !is_s(c); });
            if (non_s == 0) return true;
            if (non_s > 1) return false;
            auto it = std::find_if(kids.begin(), kids.end(), [](const Expr& c) { return !is_s(c); });
            return is_p(*it);
        }
        default: return false;
    }
}

Expr normalize_unary(Kind k, Expr inner) {
    const Kind ik = inner.kind();
    const bool inner_unary = ik == Kind::Star || ik == Kind::Plus || ik == Kind::Opt;
    if (!inner_unary) {
        if (k == Kind::Star) return Expr::star(std::move(inner));
        if (k == Kind::Plus) return Expr::plus(std::move(inner));
        return Expr::opt(std::move(inner));
    }
    if (k == ik) return inner;  // x** x++ x??
    // Any other pair of distinct postfix operators denotes x*.
    return Expr::star(inner.kid(0));
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).run(); }

std::string print(const Expr& e) {
    std::string out;
    print_into(e, out);
    return out;
}

std::set<Symbol> alphabet(const Expr& e) {
    std::vector<Symbol> syms;
    collect_symbols(e, syms);
    return {syms.begin(), syms.end()};
}

std::vector<Symbol> symbols_in_order(const Expr& e) {
    std::vector<Symbol> syms;
    collect_symbols(e, syms);
    std::vector<Symbol> out;
    std::set<Symbol> seen;
    for (auto& s : syms) {
        if (seen.insert(s).second) out.push_back(s);
    }
    return out;
}

bool is_single_occurrence(const Expr& e) {
    std::vector<Symbol> syms;
    collect_symbols(e, syms);
    std::sort(syms.begin(), syms.end());
    return std::adjacent_find(syms.begin(), syms.end()) == syms.end();
}

bool contains(const Expr& e, Kind k) {
    if (e.is(k)) return true;
    return std::any_of(e.kids().begin(), e.kids().end(), [k](const Expr& c) { return contains(c, k); });
}

std::string_view to_string(SoClass c) {
    switch (c) {
        case SoClass::NotSoire: return "not-soire";
        case SoClass::SoireOnly: return "soire";
        case SoClass::Rsoire: return "rsoire";
    }
    return "?";
}

SoClass classify(const Expr& e) {
    if (!is_single_occurrence(e)) return SoClass::NotSoire;
    return is_p(e) ? SoClass::Rsoire : SoClass::SoireOnly;
}

Expr normalize(const Expr& e) {
    switch (e.kind()) {
        case Kind::Empty:
        case Kind::Epsilon:
        case Kind::Sym: return e;
        case Kind::Star:
        case Kind::Plus:
        case Kind::Opt: return normalize_unary(e.kind(), normalize(e.kid(0)));
        case Kind::Concat:
        case Kind::Alt:
        case Kind::Inter: {
            std::vector<Expr> kids;
            kids.reserve(e.kids().size());
            for (const auto& c : e.kids()) kids.push_back(normalize(c));
            if (e.is(Kind::Concat)) return Expr::concat(std::move(kids));
            if (e.is(Kind::Alt)) return Expr::alt(std::move(kids));
            return Expr::inter(std::move(kids));
        }
    }
    return e;
}

std::size_t size(const Expr& e) {
    std::size_t n = 1;
    for (const auto& c : e.kids()) n += size(c);
    return n;
}

}  // namespace rsoire
