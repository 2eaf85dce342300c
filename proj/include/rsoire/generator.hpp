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

// Random expressions for property tests and round-trip experiments.

#pragma once

#include <cstddef>
#include <random>

#include "rsoire/expr.hpp"

namespace rsoire {

struct GeneratorOptions {
    std::size_t min_symbols = 2;
    std::size_t max_symbols = 8;
    int max_depth = 4;
};

/// An expression derivable in the restricted class, with fresh symbols
/// a, b, c, ... and an alphabet size within the configured range.
Expr random_rsoire(std::mt19937_64& rng, const GeneratorOptions& opts = {});

/// Any single-occurrence expression over all operators.
Expr random_soire(std::mt19937_64& rng, const GeneratorOptions& opts = {});

/// Any expression over symbols drawn from the first `alphabet_size` letters;
/// symbols may repeat.
Expr random_expr(std::mt19937_64& rng, std::size_t alphabet_size, int max_depth);

}  // namespace rsoire
