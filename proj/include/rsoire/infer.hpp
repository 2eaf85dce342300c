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

// Learning expressions with interleaving from positive samples.
//
// The learner builds the 2T-INF automaton of the sample and rewrites it
// until one node is left. Rules are tried in priority order, restarting
// after every application, and nodes are scanned by rank:
//
//   Plus      a self-looped single symbol a becomes a+
//   MergeScc  a larger strongly connected component U is contracted to one
//             node labelled merge(words restricted to U)
//   Or        two nodes with equal predecessors and successors become x|y
//   Concat    u with sole successor v, v with sole predecessor u: x y
//   Optional  a node skipped by some edge becomes x?; skipping edges go
//
// merge splits U by repeated maximum independent sets of the conflict graph
// (pairs seen in both orders), learns each part from the projected words,
// and joins the results with &.

#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rsoire/expr.hpp"
#include "rsoire/soa.hpp"
#include "rsoire/symbol.hpp"

namespace rsoire {

/// Projects every word onto `u`, keeping order and multiplicity. Words with
/// no symbol in `u` become epsilon entries.
Sample filter(const std::set<Symbol>& u, const Sample& s);

/// Undirected graph on symbols; {x, y} is an edge iff the sample has an
/// occurrence of x before y and one of y before x.
struct ConflictGraph {
    std::vector<Symbol> vertices;             // sorted by name
    std::set<std::pair<Symbol, Symbol>> edges;  // first < second

    bool adjacent(const Symbol& x, const Symbol& y) const;
};

ConflictGraph conflict_graph(const Sample& s);

/// A largest independent set of `g` restricted to `among` (all vertices
/// when empty); among those, the one whose sorted symbol list is
/// lexicographically least.
std::set<Symbol> maximum_independent_set(const ConflictGraph& g, const std::set<Symbol>& among = {});

using MisPartition = std::vector<std::set<Symbol>>;

/// Repeatedly extracts a maximum independent set until no vertex is left.
/// If the first set is already every vertex (and there are several), the
/// vertices are returned as singletons in name order instead.
MisPartition all_mis(const ConflictGraph& g);

enum class Rule { Plus, MergeScc, Or, Concat, Optional };

std::string_view to_string(Rule r);

struct TraceStep {
    Rule rule;
    int depth;  // nesting level of merge recursion
    std::vector<std::string> nodes;  // printed labels of the affected nodes
    std::string result;              // printed label produced by the step
};

struct InferenceTrace {
    std::vector<TraceStep> steps;
};

/// No rule applies but more than one internal node is left.
class StuckStateError : public std::runtime_error {
public:
    explicit StuckStateError(std::string dot)
        : std::runtime_error("no rewrite rule applies"), dot_(std::move(dot)) {}
    const std::string& dot() const noexcept { return dot_; }

private:
    std::string dot_;
};

/// Interleaved learning of a sample over at least two symbols.
Expr merge(const Sample& s, InferenceTrace* trace = nullptr, int depth = 0);

/// Rewrites `a` (the automaton of `s`) to a single expression. Throws
/// StuckStateError, or std::logic_error if Plus meets a composite label.
Expr soa2soire(const Sample& s, const Soa& a, InferenceTrace* trace = nullptr, int depth = 0);

struct LearnResult {
    Expr expression;
    InferenceTrace trace;
    SoClass classification;
};

/// Throws EmptySampleError on a sample without words.
LearnResult learn(const Sample& s);

/// Re-applies the top-level steps of `trace` to `initial` and returns the
/// resulting expression, normalized. Throws std::runtime_error if a step
/// does not fit the graph.
Expr replay(const Soa& initial, const InferenceTrace& trace);

/// {"input": [...], "steps": [...], "result": "...", "class": "..."},
/// pretty printed with keys in that order.
std::string trace_json(const Sample& s, const LearnResult& r);

}  // namespace rsoire
