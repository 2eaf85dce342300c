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

// Single-occurrence automata: a directed graph with a source q0 and a sink
// qf whose internal vertices carry expression labels over pairwise disjoint
// alphabets.

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rsoire/expr.hpp"
#include "rsoire/symbol.hpp"

namespace rsoire {

class EmptySampleError : public std::invalid_argument {
public:
    EmptySampleError() : std::invalid_argument("sample contains no words") {}
};

/// A finite list of words (duplicates allowed). `alphabet` lists the symbols
/// in order of first occurrence.
struct Sample {
    std::vector<Word> words;
    std::vector<Symbol> alphabet;

    static Sample from_words(std::vector<Word> words);

    bool contains_epsilon() const;
    /// Position of `s` in `alphabet`; throws std::out_of_range if absent.
    std::size_t rank_of(const Symbol& s) const;
};

using NodeId = std::size_t;
inline constexpr NodeId kSource = 0;
inline constexpr NodeId kSink = 1;

using Edge = std::pair<NodeId, NodeId>;

/// Neighbours of a node other than itself, plus whether it has a self-loop.
struct Neighborhood {
    std::set<NodeId> nodes;
    bool self_loop = false;
};

class Soa {
public:
    /// Internal nodes ordered by rank (first occurrence of their symbols).
    std::vector<NodeId> internal_nodes() const;
    std::size_t internal_count() const { return nodes_.size(); }
    bool has_node(NodeId v) const { return v == kSource || v == kSink || nodes_.contains(v); }

    const Expr& label(NodeId v) const;
    std::size_t rank(NodeId v) const;

    const std::set<Edge>& edges() const { return edges_; }
    bool has_edge(NodeId from, NodeId to) const { return edges_.contains({from, to}); }

    /// Throws std::out_of_range for an unknown node.
    Neighborhood pred(NodeId v) const;
    Neighborhood succ(NodeId v) const;

    /// Copy with `v` relabelled.
    Soa with_label(NodeId v, Expr label) const;
    /// Copy without the listed edges (absent ones are ignored).
    Soa without_edges(const std::vector<Edge>& gone) const;

    /// "q0", "qf" or the printed label.
    std::string node_name(NodeId v) const;

private:
    friend Soa build_2t_inf(const Sample& s);
    friend Soa contract(const Soa& a, const std::set<NodeId>& u, Expr label);

    struct NodeInfo {
        Expr label;
        std::size_t rank;
    };

    std::map<NodeId, NodeInfo> nodes_;
    std::set<Edge> edges_;
    NodeId next_id_ = 2;
};

/// One node per symbol; x→y for each adjacent pair, q0→first and last→qf
/// for each non-empty word, q0→qf iff the sample holds epsilon. Throws
/// EmptySampleError on a sample with no words.
Soa build_2t_inf(const Sample& s);

/// Path acceptance over single-symbol labels. Unknown symbols reject.
bool accepts(const Soa& a, const Word& w);

/// Maximal strongly connected components of the internal subgraph with more
/// than one node, and self-looped singletons. Each component is sorted by
/// rank; components are ordered by their least rank.
std::vector<std::vector<NodeId>> nontrivial_sccs(const Soa& a);

/// Replaces the nodes of `u` by one fresh node carrying `label`. Edges inside
/// `u` disappear, edges crossing the boundary are re-attached, and a
/// resulting self-loop is dropped. Throws std::invalid_argument if `u` is
/// empty or names q0, qf or an unknown node.
Soa contract(const Soa& a, const std::set<NodeId>& u, Expr label);

/// Structural problems with `a`, empty when it is well formed: q0 without
/// incoming and qf without outgoing edges, every internal node on a q0→qf
/// walk, label alphabets pairwise disjoint.
std::vector<std::string> validate(const Soa& a);

/// Graphviz rendering; internal nodes are labelled with printed expressions.
std::string to_dot(const Soa& a);

}  // namespace rsoire
