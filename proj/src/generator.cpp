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

#include "rsoire/generator.hpp"

#include <string>
#include <vector>

namespace rsoire {

namespace {

std::string letter(std::size_t i) {
    std::string s(1, static_cast<char>('a' + i % 26));
    if (i >= 26) s += std::to_string(i / 26);
    return s;
}

class Builder {
public:
    Builder(std::mt19937_64& rng, std::size_t budget) : rng_(rng), budget_(budget) {}

    std::size_t used() const { return next_; }

    int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    bool coin(double p) { return std::bernoulli_distribution(p)(rng_); }
    bool exhausted() const { return next_ >= budget_; }

    Expr fresh() { return Expr::sym(letter(next_++)); }

    // a, a*, a+, a? or (rarely) epsilon.
    Expr leaf() {
        if (exhausted() || coin(0.05)) return Expr::epsilon();
        Expr a = fresh();
        switch (pick(5)) {
            case 0: return Expr::star(a);
            case 1: return Expr::plus(a);
            case 2: return Expr::opt(a);
            default: return a;
        }
    }

    std::vector<Expr> several(int depth, Expr (Builder::*gen)(int)) {
        std::vector<Expr> kids;
        const int n = 2 + (coin(0.25) ? 1 : 0);
        for (int i = 0; i < n; ++i) kids.push_back((this->*gen)(depth - 1));
        return kids;
    }

    Expr t(int depth) {
        if (depth <= 0 || exhausted() || coin(0.4)) return leaf();
        auto kids = several(depth, &Builder::t);
        return coin(0.5) ? Expr::alt(std::move(kids)) : Expr::concat(std::move(kids));
    }

    Expr s(int depth) {
        if (depth <= 0 || exhausted() || coin(0.4)) return t(depth);
        return Expr::inter(several(depth, &Builder::s));
    }

    Expr p(int depth) {
        if (depth <= 0 || exhausted() || coin(0.3)) return s(depth);
        switch (pick(3)) {
            case 0: return Expr::concat({s(depth - 1), p(depth - 1)});
            case 1: return Expr::concat({p(depth - 1), s(depth - 1)});
            default: return Expr::alt({p(depth - 1), s(depth - 1)});
        }
    }

    Expr any(int depth) {
        if (depth <= 0 || exhausted() || coin(0.3)) return leaf();
        switch (pick(6)) {
            case 0: return Expr::star(any(depth - 1));
            case 1: return Expr::plus(any(depth - 1));
            case 2: return Expr::opt(any(depth - 1));
            case 3: return Expr::concat(several(depth, &Builder::any));
            case 4: return Expr::alt(several(depth, &Builder::any));
            default: return Expr::inter(several(depth, &Builder::any));
        }
    }

private:
    std::mt19937_64& rng_;
    std::size_t budget_;
    std::size_t next_ = 0;
};

template <typename Gen>
Expr sized(std::mt19937_64& rng, const GeneratorOptions& opts, Gen gen) {
    for (;;) {
        const std::size_t budget =
            std::uniform_int_distribution<std::size_t>(opts.min_symbols, opts.max_symbols)(rng);
        Builder b(rng, budget);
        Expr e = gen(b);
        if (b.used() >= opts.min_symbols) return e;
    }
}

}  // namespace

Expr random_rsoire(std::mt19937_64& rng, const GeneratorOptions& opts) {
    return sized(rng, opts, [&](Builder& b) { return b.p(opts.max_depth); });
}

Expr random_soire(std::mt19937_64& rng, const GeneratorOptions& opts) {
    return sized(rng, opts, [&](Builder& b) { return b.any(opts.max_depth); });
}

Expr random_expr(std::mt19937_64& rng, std::size_t alphabet_size, int max_depth) {
    // Same shapes as random_soire, then symbols are renamed into a small
    // alphabet so repeats occur.
    GeneratorOptions opts{1, 3 * alphabet_size, max_depth};
    Expr shape = random_soire(rng, opts);
    std::uniform_int_distribution<std::size_t> letters(0, alphabet_size - 1);
    auto rename = [&](auto&& self, const Expr& e) -> Expr {
        switch (e.kind()) {
            case Kind::Sym: return Expr::sym(letter(letters(rng)));
            case Kind::Star: return Expr::star(self(self, e.kid(0)));
            case Kind::Plus: return Expr::plus(self(self, e.kid(0)));
            case Kind::Opt: return Expr::opt(self(self, e.kid(0)));
            case Kind::Concat:
            case Kind::Alt:
            case Kind::Inter: {
                std::vector<Expr> kids;
                for (const auto& k : e.kids()) kids.push_back(self(self, k));
                if (e.is(Kind::Concat)) return Expr::concat(std::move(kids));
                if (e.is(Kind::Alt)) return Expr::alt(std::move(kids));
                return Expr::inter(std::move(kids));
            }
            default: return e;
        }
    };
    return rename(rename, shape);
}

}  // namespace rsoire
