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

#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minhom/digraph.hpp"
#include "minhom/induced.hpp"

namespace minhom {

/// Members of the forbidden family, in the order detection reports them.
enum class ForbiddenKind : std::uint8_t {
    c4_prime,
    c4_double_prime,
    h_star,
    n1,
    n2,
    c4_prime_converse,
    c4_double_prime_converse,
    h_star_converse,
    n1_converse,
    n2_converse,
    bip_claw,
    bip_net,
    bip_tent,
    even_cycle,
};

inline constexpr std::size_t kDirectedPatternCount = 10;
inline constexpr std::size_t kUndirectedPatternCount = 3;

inline const char* forbidden_kind_name(ForbiddenKind k) {
    switch (k) {
        case ForbiddenKind::c4_prime: return "C4'";
        case ForbiddenKind::c4_double_prime: return "C4''";
        case ForbiddenKind::h_star: return "H*";
        case ForbiddenKind::n1: return "N1";
        case ForbiddenKind::n2: return "N2";
        case ForbiddenKind::c4_prime_converse: return "converse-C4'";
        case ForbiddenKind::c4_double_prime_converse: return "converse-C4''";
        case ForbiddenKind::h_star_converse: return "converse-H*";
        case ForbiddenKind::n1_converse: return "converse-N1";
        case ForbiddenKind::n2_converse: return "converse-N2";
        case ForbiddenKind::bip_claw: return "bip-claw";
        case ForbiddenKind::bip_net: return "bip-net";
        case ForbiddenKind::bip_tent: return "bip-tent";
        case ForbiddenKind::even_cycle: return "even-cycle";
    }
    return "?";
}

inline bool is_directed_kind(ForbiddenKind k) {
    return static_cast<std::size_t>(k) < kDirectedPatternCount;
}

struct ForbiddenWitness {
    ForbiddenKind kind = ForbiddenKind::c4_prime;
    /// Set for undirected kinds: which of H->, H<-, H<-> carries the pattern.
    std::optional<SideView> side_view;
    /// Image of the pattern's vertices, in pattern vertex order (for cycles,
    /// the cycle in traversal order).
    std::vector<Vertex> vertices;
    std::optional<int> cycle_length;

    friend bool operator==(const ForbiddenWitness&, const ForbiddenWitness&) = default;
};

/// The fixed patterns of the forbidden family. Directed patterns use vertex
/// order x1, x2[, x3], y1, y2[, y3]; the 7-vertex bipartite patterns use
/// x1..x4, y1..y3.
class PatternCatalog {
 public:
    static PatternCatalog standard() {
        PatternCatalog cat;
        using A = std::vector<Arc>;
        const A c4p{{0, 2}, {2, 1}, {1, 3}, {3, 0}, {2, 0}};
        A c4pp = c4p;
        c4pp.push_back({1, 2});
        const A hstar{{0, 2}, {2, 1}, {1, 3}, {3, 0}, {0, 4}, {1, 4}};
        const A n2{{0, 3}, {1, 4}, {4, 1}, {2, 5}, {5, 2}, {3, 1},
                   {3, 2}, {0, 4}, {0, 5}, {2, 4}, {1, 5}};
        A n1 = n2;
        n1.push_back({3, 0});

        cat.directed_[0] = Digraph(4, c4p, {"x1", "x2", "y1", "y2"});
        cat.directed_[1] = Digraph(4, c4pp, {"x1", "x2", "y1", "y2"});
        cat.directed_[2] = Digraph(5, hstar, {"x1", "x2", "y1", "y2", "y3"});
        cat.directed_[3] = Digraph(6, n1, {"x1", "x2", "x3", "y1", "y2", "y3"});
        cat.directed_[4] = Digraph(6, n2, {"x1", "x2", "x3", "y1", "y2", "y3"});
        for (std::size_t i = 0; i < 5; ++i) cat.directed_[i + 5] = converse(cat.directed_[i]);

        using E = std::vector<std::pair<Vertex, Vertex>>;
        // x1..x4 = 0..3, y1..y3 = 4..6
        cat.undirected_[0] = UndirectedGraph(7, E{{3, 4}, {4, 0}, {3, 5}, {5, 1}, {3, 6}, {6, 2}});
        cat.undirected_[1] = UndirectedGraph(7, E{{0, 4}, {4, 2}, {4, 3}, {2, 5}, {3, 5}, {5, 1}, {6, 3}});
        // 6-cycle x1 y2 x4 y1 x2 y3 with the long chord x1y1 and a pendant x3 on y1.
        cat.undirected_[2] =
            UndirectedGraph(7, E{{0, 4}, {4, 2}, {1, 4}, {1, 6}, {3, 4}, {3, 5}, {0, 6}, {0, 5}});
        return cat;
    }

    const Digraph& directed(ForbiddenKind k) const {
        return directed_.at(static_cast<std::size_t>(k));
    }
    const UndirectedGraph& undirected(ForbiddenKind k) const {
        return undirected_.at(static_cast<std::size_t>(k) - kDirectedPatternCount);
    }

    /// Replaces one of the 7-vertex bipartite patterns (claw, net, tent).
    void override_undirected(ForbiddenKind k, UndirectedGraph g) {
        if (k != ForbiddenKind::bip_claw && k != ForbiddenKind::bip_net && k != ForbiddenKind::bip_tent)
            throw InputError("only the claw, net and tent slots are overridable");
        undirected_.at(static_cast<std::size_t>(k) - kDirectedPatternCount) = std::move(g);
    }

 private:
    std::array<Digraph, kDirectedPatternCount> directed_;
    std::array<UndirectedGraph, kUndirectedPatternCount> undirected_;
};

/// Shortest induced cycle of length >= 6 (ties: lexicographically least
/// tuple, starting from its least vertex). Intended for bipartite graphs.
inline std::optional<std::vector<Vertex>> detect_long_induced_even_cycle(const UndirectedGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> path;
    std::vector<char> in_path(n, 0);

    auto extend = [&](auto&& self, std::size_t target) -> bool {
        const Vertex root = path.front();
        const Vertex last = path.back();
        const bool closing = path.size() + 1 == target;
        for (Vertex w : g.neighbors(last)) {
            if (w <= root || in_path[static_cast<std::size_t>(w)]) continue;
            bool ok = true;
            for (std::size_t i = 0; i + 1 < path.size() && ok; ++i)
                if (g.has_edge(w, path[i])) ok = closing && i == 0;
            if (!ok) continue;
            if (closing) {
                if (g.has_edge(w, root) && path[1] < w) {
                    path.push_back(w);
                    return true;
                }
                continue;
            }
            path.push_back(w);
            in_path[static_cast<std::size_t>(w)] = 1;
            if (self(self, target)) return true;
            in_path[static_cast<std::size_t>(w)] = 0;
            path.pop_back();
        }
        return false;
    };

    for (std::size_t len = 6; len <= n; len += 2) {
        for (std::size_t r = 0; r < n; ++r) {
            path.assign(1, static_cast<Vertex>(r));
            std::fill(in_path.begin(), in_path.end(), 0);
            in_path[r] = 1;
            if (extend(extend, len)) return path;
        }
    }
    return std::nullopt;
}

/// Re-checks that `w` really is an induced copy of its pattern in h.
inline bool check_witness(const BipartitionedDigraph& h, const ForbiddenWitness& w,
                          const PatternCatalog& catalog = PatternCatalog::standard()) {
    const auto& verts = w.vertices;
    for (Vertex v : verts)
        if (v < 0 || static_cast<std::size_t>(v) >= h.vertex_count()) return false;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (verts[i] == verts[j]) return false;

    if (is_directed_kind(w.kind)) {
        const Digraph& p = catalog.directed(w.kind);
        if (p.vertex_count() != verts.size()) return false;
        for (std::size_t i = 0; i < verts.size(); ++i)
            for (std::size_t j = 0; j < verts.size(); ++j)
                if (i != j && p.has_arc(static_cast<Vertex>(i), static_cast<Vertex>(j)) !=
                                  h.graph().has_arc(verts[i], verts[j]))
                    return false;
        return true;
    }
    if (!w.side_view) return false;
    const UndirectedGraph view = underlying(arc_subdigraph(h, *w.side_view));
    if (w.kind == ForbiddenKind::even_cycle) {
        const std::size_t len = verts.size();
        if (len < 6 || len % 2 != 0 || !w.cycle_length || static_cast<std::size_t>(*w.cycle_length) != len)
            return false;
        for (std::size_t i = 0; i < len; ++i)
            for (std::size_t j = i + 1; j < len; ++j) {
                const bool consecutive = j == i + 1 || (i == 0 && j == len - 1);
                if (view.has_edge(verts[i], verts[j]) != consecutive) return false;
            }
        return true;
    }
    const UndirectedGraph& p = catalog.undirected(w.kind);
    if (p.vertex_count() != verts.size()) return false;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j)
            if (p.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)) != view.has_edge(verts[i], verts[j]))
                return false;
    return true;
}

/// First induced member of the forbidden family in h, ordered by (kind,
/// side view, vertex tuple). Throws InputError unless h is semicomplete
/// bipartite.
inline std::optional<ForbiddenWitness> detect_forbidden(const BipartitionedDigraph& h,
                                                        const PatternCatalog& catalog = PatternCatalog::standard()) {
    if (!is_semicomplete_bipartite(h))
        throw InputError("not-semicomplete-bipartite: some V-U pair carries no arc");

    for (std::size_t i = 0; i < kDirectedPatternCount; ++i) {
        const auto kind = static_cast<ForbiddenKind>(i);
        if (auto m = find_induced_subdigraph(catalog.directed(kind), h.graph()))
            return ForbiddenWitness{kind, std::nullopt, std::move(*m), std::nullopt};
    }

    std::vector<UndirectedGraph> views;
    std::vector<Digraph> symmetric_views;
    for (SideView s : kAllSideViews) {
        views.push_back(underlying(arc_subdigraph(h, s)));
        symmetric_views.push_back(symmetric_digraph(views.back()));
    }

    for (std::size_t i = 0; i < kUndirectedPatternCount; ++i) {
        const auto kind = static_cast<ForbiddenKind>(kDirectedPatternCount + i);
        const Digraph pattern = symmetric_digraph(catalog.undirected(kind));
        for (std::size_t s = 0; s < std::size(kAllSideViews); ++s)
            if (auto m = find_induced_subdigraph(pattern, symmetric_views[s]))
                return ForbiddenWitness{kind, kAllSideViews[s], std::move(*m), std::nullopt};
    }

    for (std::size_t s = 0; s < std::size(kAllSideViews); ++s)
        if (auto cycle = detect_long_induced_even_cycle(views[s])) {
            const int len = static_cast<int>(cycle->size());
            return ForbiddenWitness{ForbiddenKind::even_cycle, kAllSideViews[s], std::move(*cycle), len};
        }
    return std::nullopt;
}

}  // namespace minhom
