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

#include <random>

#include <gtest/gtest.h>

#include "rsoire/generator.hpp"
#include "rsoire/sample_io.hpp"
#include "rsoire/soa.hpp"
#include "test_util.hpp"

namespace rsoire {
namespace {

using testing::S;
using testing::W;

// Edges rendered with node names, for readable comparisons.
std::set<std::pair<std::string, std::string>> named_edges(const Soa& a) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto& [x, y] : a.edges()) out.emplace(a.node_name(x), a.node_name(y));
    return out;
}

std::set<std::string> names(const Soa& a, const std::set<NodeId>& ids) {
    std::set<std::string> out;
    for (NodeId v : ids) out.insert(a.node_name(v));
    return out;
}

NodeId node_named(const Soa& a, const std::string& name) {
    for (NodeId v : a.internal_nodes())
        if (a.node_name(v) == name) return v;
    throw std::out_of_range(name);
}

using EdgeNames = std::set<std::pair<std::string, std::string>>;

TEST(Build2TInf, Examples) {
    const Soa a = build_2t_inf(S({"a b", "a b a b"}));
    EXPECT_EQ(a.internal_count(), 2u);
    EXPECT_EQ(named_edges(a), (EdgeNames{{"q0", "a"}, {"a", "b"}, {"b", "a"}, {"b", "qf"}}));

    const Soa e = build_2t_inf(S({""}));
    EXPECT_EQ(e.internal_count(), 0u);
    EXPECT_EQ(named_edges(e), (EdgeNames{{"q0", "qf"}}));

    const Soa l = build_2t_inf(S({"a", "a a"}));
    EXPECT_EQ(named_edges(l), (EdgeNames{{"q0", "a"}, {"a", "a"}, {"a", "qf"}}));
}

TEST(Build2TInf, NodeOrderFollowsFirstOccurrence) {
    const Soa a = build_2t_inf(S({"c a", "b a c"}));
    std::vector<std::string> order;
    for (NodeId v : a.internal_nodes()) order.push_back(a.node_name(v));
    EXPECT_EQ(order, (std::vector<std::string>{"c", "a", "b"}));
}

TEST(Build2TInf, EmptySampleIsRejected) { EXPECT_THROW(build_2t_inf(Sample{}), EmptySampleError); }

TEST(Accepts, Examples) {
    const Soa a = build_2t_inf(S({"a b", "a b a b"}));
    EXPECT_TRUE(accepts(a, W("a b a b a b")));
    EXPECT_FALSE(accepts(a, W("b a")));
    EXPECT_FALSE(accepts(a, W("")));
    EXPECT_FALSE(accepts(a, W("a b c")));
    EXPECT_TRUE(accepts(build_2t_inf(S({""})), W("")));
}

TEST(Sccs, Examples) {
    const Soa a = build_2t_inf(S({"a b", "a b a b"}));
    const auto sa = nontrivial_sccs(a);
    ASSERT_EQ(sa.size(), 1u);
    EXPECT_EQ(names(a, {sa[0].begin(), sa[0].end()}), (std::set<std::string>{"a", "b"}));

    const Soa l = build_2t_inf(S({"a", "a a"}));
    const auto sl = nontrivial_sccs(l);
    ASSERT_EQ(sl.size(), 1u);
    EXPECT_EQ(names(l, {sl[0].begin(), sl[0].end()}), std::set<std::string>{"a"});

    EXPECT_TRUE(nontrivial_sccs(build_2t_inf(S({"a b c"}))).empty());
}

TEST(Sccs, OrderedByFirstOccurrence) {
    const Soa a = build_2t_inf(S({"x c d c d a b a b y y"}));
    const auto sccs = nontrivial_sccs(a);
    ASSERT_EQ(sccs.size(), 3u);
    EXPECT_EQ(names(a, {sccs[0].begin(), sccs[0].end()}), (std::set<std::string>{"c", "d"}));
    EXPECT_EQ(names(a, {sccs[1].begin(), sccs[1].end()}), (std::set<std::string>{"a", "b"}));
    EXPECT_EQ(names(a, {sccs[2].begin(), sccs[2].end()}), std::set<std::string>{"y"});
}

TEST(Contract, Examples) {
    const Soa a = build_2t_inf(S({"a b", "a b a b"}));
    const Soa ca = contract(a, {node_named(a, "a"), node_named(a, "b")}, Expr::sym("X"));
    EXPECT_EQ(named_edges(ca), (EdgeNames{{"q0", "X"}, {"X", "qf"}}));
    EXPECT_TRUE(validate(ca).empty());

    const Soa c = build_2t_inf(S({"a b c"}));
    const Soa cc = contract(c, {node_named(c, "b")}, Expr::sym("Y"));
    EXPECT_EQ(named_edges(cc), (EdgeNames{{"q0", "a"}, {"a", "Y"}, {"Y", "c"}, {"c", "qf"}}));

    const Soa l = build_2t_inf(S({"a", "a a"}));
    const Soa cl = contract(l, {node_named(l, "a")}, parse("a+"));
    EXPECT_EQ(named_edges(cl), (EdgeNames{{"q0", "a+"}, {"a+", "qf"}}));
}

TEST(Contract, KeepsMinimumRankAndCollapsesParallelEdges) {
    const Soa a = build_2t_inf(S({"x a b y", "x b a y"}));
    const Soa c = contract(a, {node_named(a, "a"), node_named(a, "b")}, parse("a&b"));
    EXPECT_EQ(named_edges(c), (EdgeNames{{"q0", "x"}, {"x", "a&b"}, {"a&b", "y"}, {"y", "qf"}}));
    EXPECT_EQ(c.rank(node_named(c, "a&b")), 1u);
}

TEST(Contract, Errors) {
    const Soa a = build_2t_inf(S({"a b"}));
    EXPECT_THROW(contract(a, {}, Expr::sym("X")), std::invalid_argument);
    EXPECT_THROW(contract(a, {kSource}, Expr::sym("X")), std::invalid_argument);
    EXPECT_THROW(contract(a, {kSink, node_named(a, "a")}, Expr::sym("X")), std::invalid_argument);
}

TEST(Neighborhood, Examples) {
    const Soa a = build_2t_inf(S({"a b", "b"}));
    EXPECT_EQ(names(a, a.pred(node_named(a, "b")).nodes), (std::set<std::string>{"q0", "a"}));

    const Soa c = build_2t_inf(S({"a b"}));
    EXPECT_EQ(names(c, c.succ(node_named(c, "a")).nodes), std::set<std::string>{"b"});

    const Soa l = build_2t_inf(S({"a", "a a"}));
    const auto n = l.succ(node_named(l, "a"));
    EXPECT_TRUE(n.self_loop);
    EXPECT_EQ(names(l, n.nodes), std::set<std::string>{"qf"});
    EXPECT_TRUE(l.pred(node_named(l, "a")).self_loop);

    EXPECT_THROW(a.pred(99), std::out_of_range);
}

TEST(Validate, FlagsBrokenAutomata) {
    const Soa a = build_2t_inf(S({"a b"}));
    EXPECT_TRUE(validate(a).empty());
    EXPECT_FALSE(validate(a.without_edges({{kSource, node_named(a, "a")}})).empty());
}

TEST(Dot, ListsNodesAndEdges) {
    const std::string dot = to_dot(build_2t_inf(S({"a b"})));
    EXPECT_NE(dot.find("digraph"), std::string::npos);
    EXPECT_NE(dot.find("q0"), std::string::npos);
    EXPECT_NE(dot.find("qf"), std::string::npos);
}

TEST(Property, SampleWordsAreAcceptedAndAutomatonIsValid) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        const Expr e = random_expr(rng, 2 + i % 5, 4);
        const auto p = shortlex_words(e, 5, 200);
        if (p.words.empty()) continue;
        const Sample s = Sample::from_words(p.words);
        const Soa a = build_2t_inf(s);
        ASSERT_TRUE(validate(a).empty()) << print(e);
        ASSERT_EQ(a.internal_count(), s.alphabet.size());
        for (const auto& w : s.words) ASSERT_TRUE(accepts(a, w)) << print(e) << " " << display(w);

        const Soa again = build_2t_inf(Sample::from_words(p.words));
        ASSERT_EQ(again.edges(), a.edges());
        ASSERT_EQ(again.internal_nodes(), a.internal_nodes());
    }
}

}  // namespace
}  // namespace rsoire
