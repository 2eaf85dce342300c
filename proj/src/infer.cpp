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

#include "rsoire/infer.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include <json.hpp>

#include "rsoire/lang.hpp"

namespace rsoire {

Sample filter(const std::set<Symbol>& u, const Sample& s) {
    std::vector<Word> words;
    words.reserve(s.words.size());
    for (const auto& w : s.words) {
        Word p;
        for (const auto& a : w) {
            if (u.contains(a)) p.push_back(a);
        }
        words.push_back(std::move(p));
    }
    return Sample::from_words(std::move(words));
}

bool ConflictGraph::adjacent(const Symbol& x, const Symbol& y) const {
    return x < y ? edges.contains({x, y}) : edges.contains({y, x});
}

ConflictGraph conflict_graph(const Sample& s) {
    std::set<std::pair<Symbol, Symbol>> before;
    for (const auto& w : s.words) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = i + 1; j < w.size(); ++j) {
                if (w[i] != w[j]) before.emplace(w[i], w[j]);
            }
        }
    }
    ConflictGraph g;
    g.vertices = s.alphabet;
    std::sort(g.vertices.begin(), g.vertices.end());
    for (const auto& [x, y] : before) {
        if (x < y && before.contains({y, x})) g.edges.emplace(x, y);
    }
    return g;
}

namespace {

// Include-first branch and bound over name-sorted vertices. Sets of equal
// size are reached in lexicographic order, so keeping only strict
// improvements yields the least maximum set.
class MisSearch {
public:
    MisSearch(const ConflictGraph& g, std::vector<Symbol> vertices) : verts_(std::move(vertices)) {
        const std::size_t n = verts_.size();
        adj_.assign(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                adj_[i][j] = adj_[j][i] = g.adjacent(verts_[i], verts_[j]);
            }
        }
    }

    std::set<Symbol> run() {
        std::vector<std::size_t> all(verts_.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        std::vector<std::size_t> current;
        search(current, all);
        std::set<Symbol> out;
        for (auto i : best_) out.insert(verts_[i]);
        return out;
    }

private:
    void search(std::vector<std::size_t>& current, const std::vector<std::size_t>& cand) {
        if (current.size() > best_.size()) best_ = current;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            if (current.size() + (cand.size() - i) <= best_.size()) return;
            const std::size_t v = cand[i];
            std::vector<std::size_t> next;
            for (std::size_t j = i + 1; j < cand.size(); ++j) {
                if (!adj_[v][cand[j]]) next.push_back(cand[j]);
            }
            current.push_back(v);
            search(current, next);
            current.pop_back();
        }
    }

    std::vector<Symbol> verts_;
    std::vector<std::vector<bool>> adj_;
    std::vector<std::size_t> best_;
};

std::vector<Edge> bypass_edges(const Soa& g, NodeId v) {
    std::vector<Edge> out;
    const auto preds = g.pred(v).nodes;
    const auto succs = g.succ(v).nodes;
    for (NodeId p : preds) {
        for (NodeId t : succs) {
            // q0->qf is left for the final epsilon wrap.
            if (p == kSource && t == kSink) continue;
            if (p != t && g.has_edge(p, t)) out.emplace_back(p, t);
        }
    }
    return out;
}

// Words of `s` that visit `u`, projected onto it. Symbols of a strongly
// connected component are contiguous in every word, so the projection is
// exactly the stretch of the word spent inside the component.
Sample restrict_to(const std::set<Symbol>& u, const Sample& s) {
    std::vector<Word> words;
    for (auto& w : filter(u, s).words) {
        if (!w.empty()) words.push_back(std::move(w));
    }
    return Sample::from_words(std::move(words));
}

Expr finish(const Soa& g) {
    const auto nodes = g.internal_nodes();
    if (nodes.empty()) return Expr::epsilon();
    if (nodes.size() > 1) throw StuckStateError(to_dot(g));
    Expr e = g.label(nodes.front());
    if (g.has_edge(kSource, kSink) && !nullable(e)) e = Expr::opt(e);
    return normalize(e);
}

class Rewriter {
public:
    Rewriter(const Sample& s, Soa g, InferenceTrace* trace, int depth)
        : sample_(s), g_(std::move(g)), trace_(trace), depth_(depth) {}

    Expr run() {
        while (plus_or_merge() || or_rule() || concat_rule() || optional_rule()) {
        }
        return finish(g_);
    }

private:
    std::size_t record(Rule rule, std::vector<NodeId> nodes, const Expr& result) {
        if (!trace_) return 0;
        TraceStep step{rule, depth_, {}, print(result)};
        for (NodeId v : nodes) step.nodes.push_back(g_.node_name(v));
        trace_->steps.push_back(std::move(step));
        return trace_->steps.size() - 1;
    }

    bool plus_or_merge() {
        const auto sccs = nontrivial_sccs(g_);
        for (const auto& scc : sccs) {
            if (scc.size() != 1) continue;
            const NodeId v = scc.front();
            const Expr& label = g_.label(v);
            if (!label.is(Kind::Sym)) {
                throw std::logic_error("Plus rule applied to composite label " + print(label));
            }
            Expr plus = Expr::plus(label);
            record(Rule::Plus, {v}, plus);
            g_ = g_.with_label(v, plus).without_edges({{v, v}});
            return true;
        }
        for (const auto& scc : sccs) {
            if (scc.size() < 2) continue;
            std::set<Symbol> syms;
            for (NodeId v : scc) {
                auto a = alphabet(g_.label(v));
                syms.insert(a.begin(), a.end());
            }
            std::size_t at = record(Rule::MergeScc, scc, Expr::epsilon());
            Expr label = merge(restrict_to(syms, sample_), trace_, depth_ + 1);
            if (trace_) trace_->steps[at].result = print(label);
            g_ = contract(g_, {scc.begin(), scc.end()}, label);
            return true;
        }
        return false;
    }

    bool or_rule() {
        const auto nodes = g_.internal_nodes();
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto pu = g_.pred(nodes[i]).nodes;
            const auto su = g_.succ(nodes[i]).nodes;
            for (std::size_t j = i + 1; j < nodes.size(); ++j) {
                if (g_.pred(nodes[j]).nodes != pu || g_.succ(nodes[j]).nodes != su) continue;
                Expr label = Expr::alt({g_.label(nodes[i]), g_.label(nodes[j])});
                record(Rule::Or, {nodes[i], nodes[j]}, label);
                g_ = contract(g_, {nodes[i], nodes[j]}, label);
                return true;
            }
        }
        return false;
    }

    bool concat_rule() {
        for (NodeId u : g_.internal_nodes()) {
            const auto su = g_.succ(u).nodes;
            if (su.size() != 1) continue;
            const NodeId v = *su.begin();
            if (v == kSink) continue;
            const auto pv = g_.pred(v).nodes;
            if (pv.size() != 1 || *pv.begin() != u) continue;
            Expr label = Expr::concat({g_.label(u), g_.label(v)});
            record(Rule::Concat, {u, v}, label);
            g_ = contract(g_, {u, v}, label);
            return true;
        }
        return false;
    }

    bool optional_rule() {
        for (NodeId v : g_.internal_nodes()) {
            auto gone = bypass_edges(g_, v);
            if (gone.empty()) continue;
            const Expr& old = g_.label(v);
            Expr label = nullable(old) ? old : Expr::opt(old);
            record(Rule::Optional, {v}, label);
            g_ = g_.with_label(v, label).without_edges(gone);
            return true;
        }
        return false;
    }

    const Sample& sample_;
    Soa g_;
    InferenceTrace* trace_;
    int depth_;
};

}  // namespace

std::set<Symbol> maximum_independent_set(const ConflictGraph& g, const std::set<Symbol>& among) {
    std::vector<Symbol> verts;
    for (const auto& v : g.vertices) {
        if (among.empty() || among.contains(v)) verts.push_back(v);
    }
    return MisSearch(g, std::move(verts)).run();
}

MisPartition all_mis(const ConflictGraph& g) {
    std::set<Symbol> remaining(g.vertices.begin(), g.vertices.end());
    MisPartition parts;
    while (!remaining.empty()) {
        std::set<Symbol> mis = maximum_independent_set(g, remaining);
        if (parts.empty() && mis.size() == remaining.size() && remaining.size() > 1) {
            for (const auto& v : g.vertices) parts.push_back({v});
            return parts;
        }
        for (const auto& v : mis) remaining.erase(v);
        parts.push_back(std::move(mis));
    }
    return parts;
}

std::string_view to_string(Rule r) {
    switch (r) {
        case Rule::Plus: return "Plus";
        case Rule::MergeScc: return "MergeScc";
        case Rule::Or: return "Or";
        case Rule::Concat: return "Concat";
        case Rule::Optional: return "Optional";
    }
    return "?";
}

Expr merge(const Sample& s, InferenceTrace* trace, int depth) {
    if (s.alphabet.size() < 2) throw std::invalid_argument("merge needs at least two symbols");
    std::vector<Expr> parts;
    for (const auto& mis : all_mis(conflict_graph(s))) {
        Sample projected = filter(mis, s);
        parts.push_back(soa2soire(projected, build_2t_inf(projected), trace, depth));
    }
    return Expr::inter(std::move(parts));
}

Expr soa2soire(const Sample& s, const Soa& a, InferenceTrace* trace, int depth) {
    return Rewriter(s, a, trace, depth).run();
}

LearnResult learn(const Sample& s) {
    if (s.words.empty()) throw EmptySampleError();
    LearnResult r;
    r.expression = normalize(soa2soire(s, build_2t_inf(s), &r.trace));
    r.classification = classify(r.expression);
    return r;
}

Expr replay(const Soa& initial, const InferenceTrace& trace) {
    Soa g = initial;
    auto find = [&g](const std::string& name) {
        for (NodeId v : g.internal_nodes()) {
            if (g.node_name(v) == name) return v;
        }
        throw std::runtime_error("replay: no node labelled " + name);
    };
    for (const auto& step : trace.steps) {
        if (step.depth != 0) continue;
        std::set<NodeId> nodes;
        for (const auto& n : step.nodes) nodes.insert(find(n));
        const Expr result = parse(step.result);
        switch (step.rule) {
            case Rule::Plus: {
                NodeId v = *nodes.begin();
                g = g.with_label(v, result).without_edges({{v, v}});
                break;
            }
            case Rule::Optional: {
                NodeId v = *nodes.begin();
                g = g.with_label(v, result).without_edges(bypass_edges(g, v));
                break;
            }
            case Rule::MergeScc:
            case Rule::Or:
            case Rule::Concat: g = contract(g, nodes, result); break;
        }
    }
    return finish(g);
}

std::string trace_json(const Sample& s, const LearnResult& r) {
    nlohmann::ordered_json doc;
    doc["input"] = nlohmann::ordered_json::array();
    for (const auto& w : s.words) doc["input"].push_back(to_string(w));
    doc["steps"] = nlohmann::ordered_json::array();
    for (const auto& step : r.trace.steps) {
        nlohmann::ordered_json j;
        j["rule"] = to_string(step.rule);
        j["depth"] = step.depth;
        j["nodes"] = step.nodes;
        j["result"] = step.result;
        doc["steps"].push_back(std::move(j));
    }
    doc["result"] = print(r.expression);
    doc["class"] = to_string(r.classification);
    return doc.dump(2) + "\n";
}

}  // namespace rsoire
