// Copyright 2026 The minhom Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "minhom/forbidden.hpp"
#include "minhom/ordering.hpp"
#include "test_support.hpp"

namespace minhom {
namespace {

// Pattern arc lists written out by name, independent of the catalog code.
// x1, x2, x3 = 0, 1, 2 and y1, y2, y3 follow.
Digraph named(std::size_t xs, std::size_t ys, std::vector<std::pair<std::string, std::string>> arcs) {
    auto id = [&](const std::string& s) {
        const int i = s[1] - '1';
        return static_cast<Vertex>(s[0] == 'x' ? i : static_cast<int>(xs) + i);
    };
    std::vector<Arc> out;
    for (auto& [a, b] : arcs) out.push_back({id(a), id(b)});
    return Digraph(xs + ys, std::move(out));
}

BipartitionedDigraph with_sides(const Digraph& g, std::size_t xs) {
    std::vector<Side> sides(g.vertex_count(), Side::U);
    for (std::size_t i = 0; i < xs; ++i) sides[i] = Side::V;
    return {g, std::move(sides)};
}

TEST(PatternCatalog, DirectedPatternsMatchNamedArcLists) {
    const auto cat = PatternCatalog::standard();
    EXPECT_EQ(cat.directed(ForbiddenKind::c4_prime),
              named(2, 2, {{"x1", "y1"}, {"y1", "x2"}, {"x2", "y2"}, {"y2", "x1"}, {"y1", "x1"}}));
    EXPECT_EQ(cat.directed(ForbiddenKind::c4_double_prime),
              named(2, 2, {{"x1", "y1"}, {"y1", "x2"}, {"x2", "y2"}, {"y2", "x1"}, {"y1", "x1"}, {"x2", "y1"}}));
    EXPECT_EQ(cat.directed(ForbiddenKind::h_star),
              named(2, 3, {{"x1", "y1"}, {"y1", "x2"}, {"x2", "y2"}, {"y2", "x1"}, {"x1", "y3"}, {"x2", "y3"}}));
    const std::vector<std::pair<std::string, std::string>> n2 = {
        {"x1", "y1"}, {"x2", "y2"}, {"y2", "x2"}, {"x3", "y3"}, {"y3", "x3"}, {"y1", "x2"},
        {"y1", "x3"}, {"x1", "y2"}, {"x1", "y3"}, {"x3", "y2"}, {"x2", "y3"}};
    auto n1 = n2;
    n1.push_back({"y1", "x1"});
    EXPECT_EQ(cat.directed(ForbiddenKind::n1), named(3, 3, n1));
    EXPECT_EQ(cat.directed(ForbiddenKind::n2), named(3, 3, n2));
    for (std::size_t i = 0; i < 5; ++i)
        EXPECT_EQ(cat.directed(static_cast<ForbiddenKind>(i + 5)), converse(cat.directed(static_cast<ForbiddenKind>(i))));
}

TEST(PatternCatalog, NetEdgesAsWritten) {
    const auto net = PatternCatalog::standard().undirected(ForbiddenKind::bip_net);
    // x1y1, y1x3, y1x4, x3y2, x4y2, y2x2, y3x4 with x = 0..3, y = 4..6
    const UndirectedGraph expected(7, {{0, 4}, {4, 2}, {4, 3}, {2, 5}, {3, 5}, {5, 1}, {6, 3}});
    EXPECT_EQ(net, expected);
}

// The three 7-vertex patterns are minimal obstructions: orienting every
// edge x -> y gives a digraph with no Min-Max ordering, while every proper
// induced subgraph has one.
bool has_min_max_ordering(const Digraph& g) {
    std::vector<Vertex> order(g.vertex_count());
    std::iota(order.begin(), order.end(), 0);
    do {
        if (is_min_max_ordering(g, order)) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

Digraph oriented_x_to_y(const UndirectedGraph& g, std::size_t xs) {
    std::vector<Arc> arcs;
    for (auto [a, b] : g.edges()) {
        if (static_cast<std::size_t>(a) < xs) arcs.push_back({a, b});
        else arcs.push_back({b, a});
    }
    return Digraph(g.vertex_count(), std::move(arcs));
}

class MinimalObstruction : public ::testing::TestWithParam<ForbiddenKind> {};

TEST_P(MinimalObstruction, NoOrderingButEveryDeletionHasOne) {
    const Digraph g = oriented_x_to_y(PatternCatalog::standard().undirected(GetParam()), 4);
    EXPECT_FALSE(has_min_max_ordering(g));
    for (Vertex drop = 0; drop < 7; ++drop) {
        std::vector<Vertex> keep;
        for (Vertex v = 0; v < 7; ++v)
            if (v != drop) keep.push_back(v);
        EXPECT_TRUE(has_min_max_ordering(g.induced(keep))) << "dropping " << drop;
    }
}

INSTANTIATE_TEST_SUITE_P(SevenVertexPatterns, MinimalObstruction,
                         ::testing::Values(ForbiddenKind::bip_claw, ForbiddenKind::bip_net, ForbiddenKind::bip_tent));

TEST(PatternCatalog, SevenVertexPatternsPairwiseDistinct) {
    const auto cat = PatternCatalog::standard();
    const Digraph claw = symmetric_digraph(cat.undirected(ForbiddenKind::bip_claw));
    const Digraph net = symmetric_digraph(cat.undirected(ForbiddenKind::bip_net));
    const Digraph tent = symmetric_digraph(cat.undirected(ForbiddenKind::bip_tent));
    EXPECT_FALSE(find_induced_subdigraph(claw, net));
    EXPECT_FALSE(find_induced_subdigraph(net, tent));
    EXPECT_FALSE(find_induced_subdigraph(tent, claw));
}

TEST(PatternCatalog, OverrideOnlyUndirectedSlots) {
    auto cat = PatternCatalog::standard();
    const UndirectedGraph g(7, {{0, 4}});
    cat.override_undirected(ForbiddenKind::bip_tent, g);
    EXPECT_EQ(cat.undirected(ForbiddenKind::bip_tent), g);
    EXPECT_THROW(cat.override_undirected(ForbiddenKind::n1, g), InputError);
}

TEST(DetectForbidden, Examples) {
    const auto cat = PatternCatalog::standard();
    const auto w = detect_forbidden(with_sides(cat.directed(ForbiddenKind::c4_prime), 2));
    ASSERT_TRUE(w);
    EXPECT_EQ(w->kind, ForbiddenKind::c4_prime);
    EXPECT_EQ(w->vertices, (std::vector<Vertex>{0, 1, 2, 3}));
    EXPECT_FALSE(w->side_view);

    EXPECT_FALSE(detect_forbidden({directed_cycle(4), {Side::V, Side::U, Side::V, Side::U}}));
    EXPECT_FALSE(detect_forbidden({Digraph(2, {{0, 1}, {1, 0}}), {Side::V, Side::U}}));
}

TEST(DetectForbidden, RejectsNonSemicomplete) {
    EXPECT_THROW(detect_forbidden({Digraph(2), {Side::V, Side::U}}), InputError);
}

TEST(DetectForbidden, EveryDirectedPatternIsFlagged) {
    const auto cat = PatternCatalog::standard();
    for (std::size_t i = 0; i < kDirectedPatternCount; ++i) {
        const auto kind = static_cast<ForbiddenKind>(i);
        const Digraph& p = cat.directed(kind);
        const std::size_t xs = p.vertex_count() == 6 ? 3 : 2;
        const auto w = detect_forbidden(with_sides(p, xs));
        ASSERT_TRUE(w) << forbidden_kind_name(kind);
        EXPECT_TRUE(check_witness(with_sides(p, xs), *w));
    }
}

TEST(DetectForbidden, ForwardSixCycle) {
    // V = 0,1,2; U = 3,4,5. V->U arcs form the 6-cycle 0-3-1-4-2-5-0; every
    // other pair only U->V.
    std::vector<Arc> arcs{{0, 3}, {1, 3}, {1, 4}, {2, 4}, {2, 5}, {0, 5}};
    for (Vertex v = 0; v < 3; ++v)
        for (Vertex u = 3; u < 6; ++u)
            if (std::find(arcs.begin(), arcs.end(), Arc{v, u}) == arcs.end()) arcs.push_back({u, v});
    const BipartitionedDigraph h(Digraph(6, arcs), {Side::V, Side::V, Side::V, Side::U, Side::U, Side::U});
    const auto w = detect_forbidden(h);
    ASSERT_TRUE(w);
    EXPECT_TRUE(check_witness(h, *w));
    // Directed patterns are checked first; whatever is reported must be real.
    if (w->kind == ForbiddenKind::even_cycle) {
        EXPECT_EQ(w->cycle_length, 6);
    }
}

TEST(LongInducedEvenCycle, Examples) {
    auto cycle = [](std::size_t n) {
        std::vector<std::pair<Vertex, Vertex>> e;
        for (std::size_t i = 0; i < n; ++i) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
        return UndirectedGraph(n, e);
    };
    const auto c6 = detect_long_induced_even_cycle(cycle(6));
    ASSERT_TRUE(c6);
    EXPECT_EQ(c6->size(), 6u);
    std::vector<std::pair<Vertex, Vertex>> k33;
    for (Vertex a = 0; a < 3; ++a)
        for (Vertex b = 3; b < 6; ++b) k33.emplace_back(a, b);
    EXPECT_FALSE(detect_long_induced_even_cycle(UndirectedGraph(6, k33)));
    const auto c8 = detect_long_induced_even_cycle(cycle(8));
    ASSERT_TRUE(c8);
    EXPECT_EQ(c8->size(), 8u);
    EXPECT_FALSE(detect_long_induced_even_cycle(cycle(4)));
}

TEST(LongInducedEvenCycle, FoundCyclesAreInduced) {
    testing::Rng rng(41);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = testing::random_semicomplete_bipartite(rng, 3 + trial % 2, 3 + trial % 3);
        const UndirectedGraph g = underlying(arc_subdigraph(h, SideView::forward));
        const auto c = detect_long_induced_even_cycle(g);
        if (!c) continue;
        const std::size_t len = c->size();
        ASSERT_GE(len, 6u);
        ASSERT_EQ(len % 2, 0u);
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = i + 1; j < len; ++j)
                ASSERT_EQ(g.has_edge((*c)[i], (*c)[j]), j == i + 1 || (i == 0 && j == len - 1));
    }
}

TEST(DetectForbidden, WitnessesAreSoundAndConverseClosed) {
    testing::Rng rng(7);
    for (int trial = 0; trial < 600; ++trial) {
        const auto h = testing::random_semicomplete_bipartite(rng, 1 + trial % 4, 1 + (trial / 4) % 4);
        const auto w = detect_forbidden(h);
        if (w) {
            EXPECT_TRUE(check_witness(h, *w));
        }
        EXPECT_EQ(w.has_value(), detect_forbidden(converse(h)).has_value());
    }
}

TEST(DetectForbidden, Deterministic) {
    testing::Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto h = testing::random_semicomplete_bipartite(rng, 3, 3);
        EXPECT_EQ(detect_forbidden(h), detect_forbidden(h));
    }
}

}  // namespace
}  // namespace minhom
