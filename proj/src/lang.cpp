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

#include "rsoire/lang.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <utility>

namespace rsoire {

namespace {

// Simplifying constructors for derivative terms: empty absorbs, epsilon is
// the unit, alternatives are sorted and deduplicated so equal states compare
// equal.

Expr mk_concat(std::vector<Expr> kids) {
    std::vector<Expr> keep;
    for (auto& k : kids) {
        if (k.is(Kind::Empty)) return Expr::empty();
        if (!k.is(Kind::Epsilon)) keep.push_back(std::move(k));
    }
    return Expr::concat(std::move(keep));
}

Expr mk_inter(std::vector<Expr> kids) {
    std::vector<Expr> keep;
    for (auto& k : kids) {
        if (k.is(Kind::Empty)) return Expr::empty();
        if (!k.is(Kind::Epsilon)) keep.push_back(std::move(k));
    }
    return Expr::inter(std::move(keep));
}

Expr mk_alt(std::vector<Expr> kids) {
    std::vector<Expr> keep;
    for (auto& k : kids) {
        if (k.is(Kind::Empty)) continue;
        if (k.is(Kind::Alt)) {
            keep.insert(keep.end(), k.kids().begin(), k.kids().end());
        } else {
            keep.push_back(std::move(k));
        }
    }
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    return Expr::alt(std::move(keep));
}

void shuffle_into(const Word& u, std::size_t i, const Word& v, std::size_t j, Word& prefix,
                  WordSet& out) {
    if (i == u.size() && j == v.size()) {
        out.insert(prefix);
        return;
    }
    if (i < u.size()) {
        prefix.push_back(u[i]);
        shuffle_into(u, i + 1, v, j, prefix, out);
        prefix.pop_back();
    }
    if (j < v.size()) {
        prefix.push_back(v[j]);
        shuffle_into(u, i, v, j + 1, prefix, out);
        prefix.pop_back();
    }
}

class Enumerator {
public:
    Enumerator(std::size_t max_len, std::size_t cap) : n_(max_len), cap_(cap) {}

    WordSet run(const Expr& e) {
        switch (e.kind()) {
            case Kind::Empty: return {};
            case Kind::Epsilon: return {Word{}};
            case Kind::Sym: return n_ >= 1 ? WordSet{Word{e.symbol()}} : WordSet{};
            case Kind::Opt: {
                WordSet s = run(e.kid(0));
                s.insert(Word{});
                return s;
            }
            case Kind::Star: return star(run(e.kid(0)));
            case Kind::Plus: {
                WordSet base = run(e.kid(0));
                return product(base, star(base));
            }
            case Kind::Alt: {
                WordSet s;
                for (const auto& k : e.kids()) {
                    WordSet part = run(k);
                    s.insert(part.begin(), part.end());
                    check(s);
                }
                return s;
            }
            case Kind::Concat: {
                WordSet acc{Word{}};
                for (const auto& k : e.kids()) acc = product(acc, run(k));
                return acc;
            }
            case Kind::Inter: {
                WordSet acc{Word{}};
                for (const auto& k : e.kids()) acc = interleave(acc, run(k));
                return acc;
            }
        }
        return {};
    }

private:
    void check(const WordSet& s) const {
        if (s.size() > cap_) throw EnumerationCapExceeded(cap_);
    }

    WordSet product(const WordSet& a, const WordSet& b) const {
        WordSet out;
        for (const auto& u : a) {
            for (const auto& v : b) {
                if (u.size() + v.size() > n_) break;  // b is shortlex ordered
                Word w = u;
                w.insert(w.end(), v.begin(), v.end());
                out.insert(std::move(w));
            }
            check(out);
        }
        return out;
    }

    WordSet interleave(const WordSet& a, const WordSet& b) const {
        WordSet out;
        for (const auto& u : a) {
            for (const auto& v : b) {
                if (u.size() + v.size() > n_) break;
                WordSet s = shuffle(u, v);
                out.insert(s.begin(), s.end());
            }
            check(out);
        }
        return out;
    }

    WordSet star(const WordSet& base) const {
        WordSet result{Word{}};
        WordSet step;
        for (const auto& w : base) {
            if (!w.empty()) step.insert(w);
        }
        WordSet frontier{Word{}};
        while (!frontier.empty()) {
            WordSet next;
            for (const auto& w : product(frontier, step)) {
                if (result.insert(w).second) next.insert(w);
            }
            check(result);
            frontier = std::move(next);
        }
        return result;
    }

    std::size_t n_;
    std::size_t cap_;
};

std::vector<Symbol> sorted_alphabet(std::initializer_list<const Expr*> es) {
    std::set<Symbol> all;
    for (const Expr* e : es) {
        auto a = alphabet(*e);
        all.insert(a.begin(), a.end());
    }
    return {all.begin(), all.end()};
}

// Memoized derivatives for the breadth-first explorers.
class DerivativeCache {
public:
    const Expr& get(const Expr& e, const Symbol& a) {
        auto key = std::make_pair(e, a);
        auto it = cache_.find(key);
        if (it == cache_.end()) it = cache_.emplace(std::move(key), derivative(e, a)).first;
        return it->second;
    }

private:
    std::map<std::pair<Expr, Symbol>, Expr> cache_;
};

}  // namespace

WordSet shuffle(const Word& u, const Word& v) {
    WordSet out;
    Word prefix;
    prefix.reserve(u.size() + v.size());
    shuffle_into(u, 0, v, 0, prefix, out);
    return out;
}

bool nullable(const Expr& e) {
    switch (e.kind()) {
        case Kind::Empty:
        case Kind::Sym: return false;
        case Kind::Epsilon:
        case Kind::Star:
        case Kind::Opt: return true;
        case Kind::Plus: return nullable(e.kid(0));
        case Kind::Alt: return std::any_of(e.kids().begin(), e.kids().end(), nullable);
        case Kind::Concat:
        case Kind::Inter: return std::all_of(e.kids().begin(), e.kids().end(), nullable);
    }
    return false;
}

std::optional<std::size_t> min_length(const Expr& e) {
    switch (e.kind()) {
        case Kind::Empty: return std::nullopt;
        case Kind::Epsilon:
        case Kind::Star:
        case Kind::Opt: return 0;
        case Kind::Sym: return 1;
        case Kind::Plus: return min_length(e.kid(0));
        case Kind::Alt: {
            std::optional<std::size_t> best;
            for (const auto& k : e.kids()) {
                auto m = min_length(k);
                if (m && (!best || *m < *best)) best = m;
            }
            return best;
        }
        case Kind::Concat:
        case Kind::Inter: {
            std::size_t total = 0;
            for (const auto& k : e.kids()) {
                auto m = min_length(k);
                if (!m) return std::nullopt;
                total += *m;
            }
            return total;
        }
    }
    return std::nullopt;
}

Expr derivative(const Expr& e, const Symbol& a) {
    switch (e.kind()) {
        case Kind::Empty:
        case Kind::Epsilon: return Expr::empty();
        case Kind::Sym: return e.symbol() == a ? Expr::epsilon() : Expr::empty();
        case Kind::Opt: return derivative(e.kid(0), a);
        case Kind::Star: return mk_concat({derivative(e.kid(0), a), e});
        case Kind::Plus: return mk_concat({derivative(e.kid(0), a), Expr::star(e.kid(0))});
        case Kind::Alt: {
            std::vector<Expr> alts;
            for (const auto& k : e.kids()) alts.push_back(derivative(k, a));
            return mk_alt(std::move(alts));
        }
        case Kind::Concat: {
            auto kids = e.kids();
            std::vector<Expr> alts;
            for (std::size_t i = 0; i < kids.size(); ++i) {
                std::vector<Expr> parts{derivative(kids[i], a)};
                parts.insert(parts.end(), kids.begin() + i + 1, kids.end());
                alts.push_back(mk_concat(std::move(parts)));
                if (!nullable(kids[i])) break;
            }
            return mk_alt(std::move(alts));
        }
        case Kind::Inter: {
            // d(r & s) = d(r) & s | r & d(s)
            auto kids = e.kids();
            std::vector<Expr> alts;
            for (std::size_t i = 0; i < kids.size(); ++i) {
                std::vector<Expr> parts(kids.begin(), kids.end());
                parts[i] = derivative(kids[i], a);
                alts.push_back(mk_inter(std::move(parts)));
            }
            return mk_alt(std::move(alts));
        }
    }
    return Expr::empty();
}

bool matches(const Expr& e, const Word& w) {
    Expr cur = e;
    for (const auto& a : w) {
        cur = derivative(cur, a);
        if (cur.is(Kind::Empty)) return false;
    }
    return nullable(cur);
}

BoundedLang enumerate(const Expr& e, std::size_t max_len, std::size_t cap) {
    Enumerator en(max_len, cap);
    return BoundedLang{max_len, en.run(e)};
}

EquivResult bounded_equiv(const Expr& e1, const Expr& e2, std::size_t max_len, std::size_t cap) {
    const auto sigma = sorted_alphabet({&e1, &e2});
    DerivativeCache cache;

    struct Item {
        Word word;
        Expr left;
        Expr right;
    };
    std::set<std::pair<Expr, Expr>> seen{{e1, e2}};
    std::deque<Item> queue{{Word{}, e1, e2}};

    // Breadth-first with children in symbol order visits words in shortlex
    // order, and a revisited pair can only lead to larger counterexamples.
    while (!queue.empty()) {
        Item item = std::move(queue.front());
        queue.pop_front();
        if (nullable(item.left) != nullable(item.right)) return Counterexample{item.word};
        if (item.word.size() == max_len) continue;
        for (const auto& a : sigma) {
            Expr l = cache.get(item.left, a);
            Expr r = cache.get(item.right, a);
            if (l.is(Kind::Empty) && r.is(Kind::Empty)) continue;
            if (!seen.emplace(l, r).second) continue;
            if (seen.size() > cap) throw EnumerationCapExceeded(cap);
            Word w = item.word;
            w.push_back(a);
            queue.push_back({std::move(w), std::move(l), std::move(r)});
        }
    }
    return Equal{};
}

namespace {

// Depth-first generation of the words of one exact length in lexicographic
// order. `reach` memoizes which (state, length) pairs can still complete.
class ShortlexGenerator {
public:
    ShortlexGenerator(const Expr& e, std::size_t memo_cap)
        : sigma_(sorted_alphabet({&e})), memo_cap_(memo_cap) {}

    bool reach(const Expr& state, std::size_t k) {
        if (k == 0) return nullable(state);
        if (state.is(Kind::Empty)) return false;
        auto key = std::make_pair(state, k);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        bool r = false;
        if (auto m = min_length(state); m && *m <= k) {
            for (const auto& a : sigma_) {
                if (reach(cache_.get(state, a), k - 1)) {
                    r = true;
                    break;
                }
            }
        }
        if (memo_.size() >= memo_cap_) throw EnumerationCapExceeded(memo_cap_);
        memo_.emplace(std::move(key), r);
        return r;
    }

    // Appends words of length exactly k; returns false once `limit` is hit.
    bool emit(const Expr& state, std::size_t k, Word& prefix, std::vector<Word>& out, std::size_t limit) {
        if (k == 0) {
            if (out.size() == limit) return false;
            out.push_back(prefix);
            return true;
        }
        for (const auto& a : sigma_) {
            const Expr d = cache_.get(state, a);
            if (!reach(d, k - 1)) continue;
            prefix.push_back(a);
            const bool more = emit(d, k - 1, prefix, out, limit);
            prefix.pop_back();
            if (!more) return false;
        }
        return true;
    }

private:
    std::vector<Symbol> sigma_;
    std::size_t memo_cap_;
    DerivativeCache cache_;
    std::map<std::pair<Expr, std::size_t>, bool> memo_;
};

}  // namespace

ShortlexPrefix shortlex_words(const Expr& e, std::size_t max_len, std::size_t limit,
                              std::size_t memo_cap) {
    ShortlexGenerator gen(e, memo_cap);
    ShortlexPrefix out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        if (!gen.reach(e, len)) continue;
        Word prefix;
        if (!gen.emit(e, len, prefix, out.words, limit)) {
            out.first_dropped_length = len;
            return out;
        }
        if (out.words.size() == limit) {
            for (std::size_t rest = len + 1; rest <= max_len; ++rest) {
                if (gen.reach(e, rest)) {
                    out.first_dropped_length = rest;
                    return out;
                }
            }
            return out;
        }
    }
    return out;
}

}  // namespace rsoire
