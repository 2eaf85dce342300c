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

// The built-in experiment: which targets the learner recovers and which it
// provably misses.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rsoire/expr.hpp"
#include "rsoire/symbol.hpp"

namespace rsoire {

enum class ReproGroup {
    StarOnSymbolsOnly,    // targets with repetition over composite expressions
    NestedInterleaving,   // a&(b (c&d))
    RoundTrip,            // restricted-class targets that must be recovered
};

std::string_view to_string(ReproGroup g);

struct ReproCase {
    ReproGroup group;
    std::string target;
    std::size_t max_len = 0;
    std::size_t sample_size = 0;
    std::string sample_source;
    std::string learnt;
    SoClass learnt_class = SoClass::NotSoire;
    bool unary_on_symbols_only = false;  // no * or + over a composite
    bool equal = false;
    std::optional<Word> counterexample;
    bool passed = false;
    std::string error;  // set if the case could not run
};

struct ReproReport {
    std::vector<ReproCase> cases;
    bool all_passed() const;
};

/// True if every Star and Plus node in `e` applies to a single symbol.
bool unary_ops_on_symbols_only(const Expr& e);

ReproCase run_repro_case(ReproGroup group, const std::string& target);

/// Runs the fixed case list.
ReproReport run_repro();

std::string repro_markdown(const ReproReport& r);
std::string repro_json(const ReproReport& r);

}  // namespace rsoire
