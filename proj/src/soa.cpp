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

#include "rsoire/soa.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace rsoire {

Sample Sample::from_words(std::vector<Word> words) {
    Sample s;
    std::set<Symbol> seen;
    for (const auto& w : words) {
        for (const auto& a : w) {
            if (seen.insert(a).second) s.alphabet.push_back(a);
        }
    }
    s.words = std::move(words);
    return s;
}

bool Sample::contains_epsilon() const {
    return std::any_of(words.begin(), words.end(), [](const Word& w) { return w.empty(); });
}

std::size_t Sample::rank_of(const Symbol& s) const {
    auto it = std::find(alphabet.begin(), alphabet.end(), s);
    if (it == alphabet.end()) throw std::out_of_range("symbol '" + s.name() + "' not in sample");
    return static_cast<std::size_t>(it - alphabet.begin());
}

std::vector<NodeId> Soa::internal_nodes() const {
    std::vector<NodeId> out;
    out.reserve(nodes_.size());
    for (const auto& [id, info] : nodes_) out.push_back(id);
    std::sort(out.begin(), out.end(),
              [this](NodeId x, NodeId y) { return nodes_.at(x).rank < nodes_.at(y).rank; });
    return out;
}

const Expr& Soa::label(NodeId v) const {
    auto it = nodes_.find(v);
    if (it == nodes_.end()) throw std::out_of_range("no internal node " + std::to_string(v));
    return it->second.label;
}

std::size_t Soa::rank(NodeId v) const {
    auto it = nodes_.find(v);
    if (it == nodes_.end()) throw std::out_of_range("no internal node " + std::to_string(v));
    return it->second.rank;
}

Neighborhood Soa::pred(NodeId v) const {
    if (!has_node(v)) throw std::out_of_range("no node " + std::to_string(v));
    Neighborhood n;
    for (const auto& [from, to] : edges_) {
        if (to != v) continue;
        if (from == v) {
            n.self_loop = true;
        } else {
            n.nodes.insert(from);
        }
    }
    return n;
}

Neighborhood Soa::succ(NodeId v) const {
    if (!has_node(v)) throw std::out_of_range("no node " + std::to_string(v));
    Neighborhood n;
    for (auto it = edges_.lower_bound({v, 0}); it != edges_.end() && it->first == v; ++it) {
        if (it->second == v) {
            n.self_loop = true;
        } else {
            n.nodes.insert(it->second);
        }
    }
    return n;
}

Soa Soa::with_label(NodeId v, Expr label) const {
    Soa copy = *this;
    auto it = copy.nodes_.find(v);
    if (it == copy.nodes_.end()) throw std::out_of_range("no internal node " + std::to_string(v));
    it->second.label = std::move(label);
    return copy;
}

Soa Soa::without_edges(const std::vector<Edge>& gone) const {
    Soa copy = *this;
    for (const auto& e : gone) copy.edges_.erase(e);
    return copy;
}

std::string Soa::node_name(NodeId v) const {
    if (v == kSource) return "q0";
    if (v == kSink) return "qf";
    return print(label(v));
}

Soa build_2t_inf(const Sample& s) {
    if (s.words.empty()) throw EmptySampleError();
    Soa a;
    std::map<Symbol, NodeId> ids;
    for (std::size_t i = 0; i < s.alphabet.size(); ++i) {
        NodeId id = a.next_id_++;
        a.nodes_.emplace(id, Soa::NodeInfo{Expr::sym(s.alphabet[i]), i});
        ids.emplace(s.alphabet[i], id);
    }
    for (const auto& w : s.words) {
        if (w.empty()) {
            a.edges_.insert({kSource, kSink});
            continue;
        }
        a.edges_.insert({kSource, ids.at(w.front())});
        for (std::size_t i = 0; i + 1 < w.size(); ++i) a.edges_.insert({ids.at(w[i]), ids.at(w[i + 1])});
        a.edges_.insert({ids.at(w.back()), kSink});
    }
    return a;
}

bool accepts(const Soa& a, const Word& w) {
    std::map<Symbol, NodeId> ids;
    for (NodeId v : a.internal_nodes()) {
        if (a.label(v).is(Kind::Sym)) ids.emplace(a.label(v).symbol(), v);
    }
    NodeId cur = kSource;
    for (const auto& sym : w) {
        auto it = ids.find(sym);
        if (it == ids.end() || !a.has_edge(cur, it->second)) return false;
        cur = it->second;
    }
    return a.has_edge(cur, kSink);
}

std::vector<std::vector<NodeId>> nontrivial_sccs(const Soa& a) {
    const std::vector<NodeId> order = a.internal_nodes();
    std::map<NodeId, int> index, low;
    std::set<NodeId> on_stack;
    std::vector<NodeId> stack;
    std::vector<std::vector<NodeId>> out;
    int counter = 0;

    std::function<void(NodeId)> visit = [&](NodeId v) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack.insert(v);
        for (NodeId w : a.succ(v).nodes) {
            if (w == kSource || w == kSink) continue;
            if (!index.contains(w)) {
                visit(w);
                low[v] = std::min(low[v], low[w]);
            } else if (on_stack.contains(w)) {
                low[v] = std::min(low[v], index[w]);
            }
        }
        if (low[v] != index[v]) return;
        std::vector<NodeId> scc;
        NodeId w;
        do {
            w = stack.back();
            stack.pop_back();
            on_stack.erase(w);
            scc.push_back(w);
        } while (w != v);
        if (scc.size() > 1 || a.has_edge(v, v)) out.push_back(std::move(scc));
    };
    for (NodeId v : order) {
        if (!index.contains(v)) visit(v);
    }

    auto by_rank = [&a](NodeId x, NodeId y) { return a.rank(x) < a.rank(y); };
    for (auto& scc : out) std::sort(scc.begin(), scc.end(), by_rank);
    std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return by_rank(x.front(), y.front()); });
    return out;
}

Soa contract(const Soa& a, const std::set<NodeId>& u, Expr label) {
    if (u.empty()) throw std::invalid_argument("contract: empty node set");
    for (NodeId v : u) {
        if (v == kSource || v == kSink) throw std::invalid_argument("contract: cannot contract q0 or qf");
        if (!a.nodes_.contains(v)) throw std::invalid_argument("contract: unknown node " + std::to_string(v));
    }
    Soa out;
    out.next_id_ = a.next_id_ + 1;
    const NodeId fresh = a.next_id_;
    std::size_t rank = a.nodes_.at(*u.begin()).rank;
    for (const auto& [id, info] : a.nodes_) {
        if (u.contains(id)) {
            rank = std::min(rank, info.rank);
        } else {
            out.nodes_.emplace(id, info);
        }
    }
    out.nodes_.emplace(fresh, Soa::NodeInfo{std::move(label), rank});
    for (auto [from, to] : a.edges_) {
        if (u.contains(from)) from = fresh;
        if (u.contains(to)) to = fresh;
        if (from == fresh && to == fresh) continue;
        out.edges_.insert({from, to});
    }
    return out;
}

std::vector<std::string> validate(const Soa& a) {
    std::vector<std::string> problems;
    for (const auto& [from, to] : a.edges()) {
        if (to == kSource) problems.push_back("edge into q0 from " + a.node_name(from));
        if (from == kSink) problems.push_back("edge out of qf to " + a.node_name(to));
    }

    auto reach = [&a](NodeId start, bool forward) {
        std::set<NodeId> seen{start};
        std::vector<NodeId> todo{start};
        while (!todo.empty()) {
            NodeId v = todo.back();
            todo.pop_back();
            for (const auto& [from, to] : a.edges()) {
                NodeId next = forward ? to : from;
                if ((forward ? from : to) == v && seen.insert(next).second) todo.push_back(next);
            }
        }
        return seen;
    };
    const auto from_source = reach(kSource, true);
    const auto to_sink = reach(kSink, false);

    std::set<Symbol> used;
    for (NodeId v : a.internal_nodes()) {
        if (!from_source.contains(v) || !to_sink.contains(v)) {
            problems.push_back("node " + a.node_name(v) + " is not on a q0-qf walk");
        }
        for (const auto& s : alphabet(a.label(v))) {
            if (!used.insert(s).second) problems.push_back("symbol " + s.name() + " labels two nodes");
        }
    }
    return problems;
}

std::string to_dot(const Soa& a) {
    auto id = [](NodeId v) {
        if (v == kSource) return std::string("q0");
        if (v == kSink) return std::string("qf");
        return "n" + std::to_string(v);
    };
    std::ostringstream out;
    out << "digraph soa {\n  rankdir=LR;\n  q0 [shape=point];\n  qf [shape=doublecircle, label=\"\"];\n";
    for (NodeId v : a.internal_nodes()) {
        std::string text = print(a.label(v));
        std::string escaped;
        for (char c : text) {
            if (c == '"' || c == '\\') escaped += '\\';
            escaped += c;
        }
        out << "  " << id(v) << " [label=\"" << escaped << "\"];\n";
    }
    for (const auto& [from, to] : a.edges()) out << "  " << id(from) << " -> " << id(to) << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace rsoire
