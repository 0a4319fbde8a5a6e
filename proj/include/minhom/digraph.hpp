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

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minhom/error.hpp"

namespace minhom {

/// Dense 0-indexed vertex id.
using Vertex = int;

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

namespace detail {

// Compressed adjacency: neighbours of v are targets[offsets[v] .. offsets[v+1]).
struct Csr {
    std::vector<std::size_t> offsets;
    std::vector<Vertex> targets;

    std::span<const Vertex> row(Vertex v) const {
        auto b = offsets[static_cast<std::size_t>(v)];
        auto e = offsets[static_cast<std::size_t>(v) + 1];
        return {targets.data() + b, e - b};
    }
};

inline Csr build_csr(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    Csr csr;
    csr.offsets.assign(n + 1, 0);
    for (const auto& [from, to] : pairs) ++csr.offsets[static_cast<std::size_t>(from) + 1];
    for (std::size_t i = 0; i < n; ++i) csr.offsets[i + 1] += csr.offsets[i];
    csr.targets.resize(pairs.size());
    auto fill = csr.offsets;
    for (const auto& [from, to] : pairs) csr.targets[fill[static_cast<std::size_t>(from)]++] = to;
    for (std::size_t v = 0; v < n; ++v)
        std::sort(csr.targets.begin() + static_cast<std::ptrdiff_t>(csr.offsets[v]),
                  csr.targets.begin() + static_cast<std::ptrdiff_t>(csr.offsets[v + 1]));
    return csr;
}

}  // namespace detail

/// Loop-free digraph without multiple arcs. Immutable after construction.
class Digraph {
 public:
    Digraph() = default;

    /// Throws InputError on loops, duplicate arcs or endpoints >= n.
    explicit Digraph(std::size_t n, std::vector<Arc> arcs = {}, std::vector<std::string> labels = {})
        : n_(n), arcs_(std::move(arcs)), labels_(std::move(labels)) {
        for (const Arc& a : arcs_) {
            if (a.tail < 0 || a.head < 0 || static_cast<std::size_t>(a.tail) >= n_ ||
                static_cast<std::size_t>(a.head) >= n_)
                throw InputError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                 ") has an endpoint outside 0.." + std::to_string(n_) + "-1");
            if (a.tail == a.head) throw InputError("loop at vertex " + std::to_string(a.tail));
        }
        std::sort(arcs_.begin(), arcs_.end());
        if (auto dup = std::adjacent_find(arcs_.begin(), arcs_.end()); dup != arcs_.end())
            throw InputError("duplicate arc (" + std::to_string(dup->tail) + "," +
                             std::to_string(dup->head) + ")");
        if (!labels_.empty() && labels_.size() != n_)
            throw InputError("label count does not match vertex count");

        std::vector<std::pair<Vertex, Vertex>> fwd, bwd;
        fwd.reserve(arcs_.size());
        bwd.reserve(arcs_.size());
        for (const Arc& a : arcs_) {
            fwd.emplace_back(a.tail, a.head);
            bwd.emplace_back(a.head, a.tail);
        }
        out_ = detail::build_csr(n_, fwd);
        in_ = detail::build_csr(n_, bwd);
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t arc_count() const { return arcs_.size(); }

    /// Arcs in lexicographic order.
    const std::vector<Arc>& arcs() const { return arcs_; }

    std::span<const Vertex> out_neighbors(Vertex v) const { return out_.row(v); }
    std::span<const Vertex> in_neighbors(Vertex v) const { return in_.row(v); }
    std::size_t out_degree(Vertex v) const { return out_neighbors(v).size(); }
    std::size_t in_degree(Vertex v) const { return in_neighbors(v).size(); }

    bool has_arc(Vertex from, Vertex to) const {
        auto row = out_neighbors(from);
        return std::binary_search(row.begin(), row.end(), to);
    }
    bool adjacent(Vertex x, Vertex y) const { return has_arc(x, y) || has_arc(y, x); }

    bool has_labels() const { return !labels_.empty(); }
    std::string label(Vertex v) const {
        return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
    }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Induced subdigraph on `vertices`; new id i corresponds to vertices[i].
    Digraph induced(std::span<const Vertex> vertices) const {
        std::vector<Vertex> index(n_, -1);
        for (std::size_t i = 0; i < vertices.size(); ++i)
            index[static_cast<std::size_t>(vertices[i])] = static_cast<Vertex>(i);
        std::vector<Arc> sub;
        for (Vertex v : vertices)
            for (Vertex w : out_neighbors(v))
                if (index[static_cast<std::size_t>(w)] >= 0)
                    sub.push_back({index[static_cast<std::size_t>(v)], index[static_cast<std::size_t>(w)]});
        std::vector<std::string> sub_labels;
        if (has_labels())
            for (Vertex v : vertices) sub_labels.push_back(label(v));
        return Digraph(vertices.size(), std::move(sub), std::move(sub_labels));
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

 private:
    std::size_t n_ = 0;
    std::vector<Arc> arcs_;
    std::vector<std::string> labels_;
    detail::Csr out_;
    detail::Csr in_;
};

/// Simple undirected graph; edges stored as (min, max) pairs, sorted.
class UndirectedGraph {
 public:
    UndirectedGraph() = default;

    explicit UndirectedGraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges = {}) : n_(n) {
        for (auto& [a, b] : edges) {
            if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
                throw InputError("edge endpoint out of range");
            if (a == b) throw InputError("loop at vertex " + std::to_string(a));
            if (a > b) std::swap(a, b);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw InputError("duplicate edge");
        edges_ = std::move(edges);
        std::vector<std::pair<Vertex, Vertex>> both;
        for (const auto& [a, b] : edges_) {
            both.emplace_back(a, b);
            both.emplace_back(b, a);
        }
        adj_ = detail::build_csr(n_, both);
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adj_.row(v); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool has_edge(Vertex a, Vertex b) const {
        auto row = neighbors(a);
        return std::binary_search(row.begin(), row.end(), b);
    }

    friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

 private:
    std::size_t n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    detail::Csr adj_;
};

enum class Side : std::uint8_t { V, U };

inline Side opposite(Side s) { return s == Side::V ? Side::U : Side::V; }
inline char side_char(Side s) { return s == Side::V ? 'V' : 'U'; }

/// A digraph together with a fixed bipartition (V, U); every arc joins the
/// two sides.
class BipartitionedDigraph {
 public:
    BipartitionedDigraph() = default;

    BipartitionedDigraph(Digraph graph, std::vector<Side> sides)
        : graph_(std::move(graph)), sides_(std::move(sides)) {
        if (sides_.size() != graph_.vertex_count())
            throw InputError("side assignment length does not match vertex count");
        for (const Arc& a : graph_.arcs())
            if (side(a.tail) == side(a.head))
                throw InputError("arc (" + std::to_string(a.tail) + "," + std::to_string(a.head) +
                                 ") joins two vertices on the same side");
    }

    const Digraph& graph() const { return graph_; }
    const std::vector<Side>& sides() const { return sides_; }
    Side side(Vertex v) const { return sides_[static_cast<std::size_t>(v)]; }
    std::size_t vertex_count() const { return graph_.vertex_count(); }

    /// Vertices on side `s`, ascending.
    std::vector<Vertex> side_vertices(Side s) const {
        std::vector<Vertex> out;
        for (std::size_t v = 0; v < sides_.size(); ++v)
            if (sides_[v] == s) out.push_back(static_cast<Vertex>(v));
        return out;
    }

    BipartitionedDigraph induced(std::span<const Vertex> vertices) const {
        std::vector<Side> sub;
        sub.reserve(vertices.size());
        for (Vertex v : vertices) sub.push_back(side(v));
        return {graph_.induced(vertices), std::move(sub)};
    }

 private:
    Digraph graph_;
    std::vector<Side> sides_;
};

/// Which arcs of a bipartitioned digraph a view keeps.
enum class SideView : std::uint8_t {
    forward,    // V -> U arcs
    backward,   // U -> V arcs
    two_cycle,  // arcs xy with yx also present
};

inline constexpr SideView kAllSideViews[] = {SideView::forward, SideView::backward, SideView::two_cycle};

inline const char* side_view_name(SideView s) {
    switch (s) {
        case SideView::forward: return "forward";
        case SideView::backward: return "backward";
        case SideView::two_cycle: return "two_cycle";
    }
    return "?";
}

inline Digraph converse(const Digraph& h) {
    std::vector<Arc> rev;
    rev.reserve(h.arc_count());
    for (const Arc& a : h.arcs()) rev.push_back({a.head, a.tail});
    return Digraph(h.vertex_count(), std::move(rev), h.labels());
}

inline BipartitionedDigraph converse(const BipartitionedDigraph& h) {
    return {converse(h.graph()), h.sides()};
}

/// Underlying graph: orientation dropped, parallel edges merged.
inline UndirectedGraph underlying(const Digraph& h) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Arc& a : h.arcs())
        if (a.tail < a.head || !h.has_arc(a.head, a.tail))
            edges.emplace_back(std::min(a.tail, a.head), std::max(a.tail, a.head));
    return UndirectedGraph(h.vertex_count(), std::move(edges));
}

/// H->, H<- or H<->; the vertex set is preserved.
inline Digraph arc_subdigraph(const BipartitionedDigraph& h, SideView view) {
    const Digraph& g = h.graph();
    std::vector<Arc> kept;
    for (const Arc& a : g.arcs()) {
        bool keep = false;
        switch (view) {
            case SideView::forward: keep = h.side(a.tail) == Side::V; break;
            case SideView::backward: keep = h.side(a.tail) == Side::U; break;
            case SideView::two_cycle: keep = g.has_arc(a.head, a.tail); break;
        }
        if (keep) kept.push_back(a);
    }
    return Digraph(g.vertex_count(), std::move(kept), g.labels());
}

/// The digraph with both xy and yx for every edge {x, y}.
inline Digraph symmetric_digraph(const UndirectedGraph& g) {
    std::vector<Arc> arcs;
    arcs.reserve(2 * g.edge_count());
    for (const auto& [a, b] : g.edges()) {
        arcs.push_back({a, b});
        arcs.push_back({b, a});
    }
    return Digraph(g.vertex_count(), std::move(arcs));
}

/// At least one arc between every V-vertex and every U-vertex.
inline bool is_semicomplete_bipartite(const BipartitionedDigraph& h) {
    const auto vs = h.side_vertices(Side::V);
    const auto us = h.side_vertices(Side::U);
    for (Vertex v : vs)
        for (Vertex u : us)
            if (!h.graph().adjacent(v, u)) return false;
    return true;
}

/// Strong components in a topological order of the condensation: every arc
/// between two components goes from an earlier to a later one. Members of a
/// component are sorted ascending.
inline std::vector<std::vector<Vertex>> strong_components(const Digraph& h) {
    const std::size_t n = h.vertex_count();
    constexpr int kUnvisited = -1;
    std::vector<int> index(n, kUnvisited), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<Vertex> stack;
    std::vector<std::vector<Vertex>> comps;  // reverse topological order
    int counter = 0;

    // Iterative Tarjan; frame = (vertex, next out-neighbour slot).
    std::vector<std::pair<Vertex, std::size_t>> frames;
    for (std::size_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        frames.emplace_back(static_cast<Vertex>(root), 0);
        while (!frames.empty()) {
            auto& [v, slot] = frames.back();
            auto vi = static_cast<std::size_t>(v);
            if (slot == 0 && index[vi] == kUnvisited) {
                index[vi] = low[vi] = counter++;
                stack.push_back(v);
                on_stack[vi] = 1;
            }
            auto outs = h.out_neighbors(v);
            if (slot < outs.size()) {
                Vertex w = outs[slot++];
                auto wi = static_cast<std::size_t>(w);
                if (index[wi] == kUnvisited) {
                    frames.emplace_back(w, 0);
                } else if (on_stack[wi]) {
                    low[vi] = std::min(low[vi], index[wi]);
                }
                continue;
            }
            if (low[vi] == index[vi]) {
                std::vector<Vertex> comp;
                Vertex w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[static_cast<std::size_t>(w)] = 0;
                    comp.push_back(w);
                } while (w != v);
                std::sort(comp.begin(), comp.end());
                comps.push_back(std::move(comp));
            }
            Vertex done = v;
            frames.pop_back();
            if (!frames.empty()) {
                auto pi = static_cast<std::size_t>(frames.back().first);
                low[pi] = std::min(low[pi], low[static_cast<std::size_t>(done)]);
            }
        }
    }
    std::reverse(comps.begin(), comps.end());
    return comps;
}

/// Connected components of the underlying graph, each sorted, ordered by
/// their least vertex.
inline std::vector<std::vector<Vertex>> weak_components(const Digraph& h) {
    const std::size_t n = h.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<Vertex>> comps;
    std::vector<Vertex> queue;
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        seen[root] = 1;
        queue.assign(1, static_cast<Vertex>(root));
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (auto nbrs : {h.out_neighbors(v), h.in_neighbors(v)})
                for (Vertex w : nbrs)
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        queue.push_back(w);
                    }
        }
        std::sort(queue.begin(), queue.end());
        comps.push_back(queue);
    }
    return comps;
}

/// 2-colours UN(h), putting the least vertex of each component on side V.
/// Returns nullopt when UN(h) has an odd cycle.
inline std::optional<std::vector<Side>> infer_sides(const Digraph& h) {
    const std::size_t n = h.vertex_count();
    std::vector<int> colour(n, -1);
    for (const auto& comp : weak_components(h)) {
        colour[static_cast<std::size_t>(comp.front())] = 0;
        std::vector<Vertex> queue{comp.front()};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (auto nbrs : {h.out_neighbors(v), h.in_neighbors(v)})
                for (Vertex w : nbrs) {
                    auto& cw = colour[static_cast<std::size_t>(w)];
                    if (cw < 0) {
                        cw = 1 - colour[static_cast<std::size_t>(v)];
                        queue.push_back(w);
                    } else if (cw == colour[static_cast<std::size_t>(v)]) {
                        return std::nullopt;
                    }
                }
        }
    }
    std::vector<Side> sides(n);
    for (std::size_t v = 0; v < n; ++v) sides[v] = colour[v] == 0 ? Side::V : Side::U;
    return sides;
}

/// Row-major n x n arc indicator for small digraphs that are probed often.
class AdjacencyMatrix {
 public:
    explicit AdjacencyMatrix(const Digraph& h) : n_(h.vertex_count()), bits_(n_ * n_, 0) {
        for (const Arc& a : h.arcs()) bits_[idx(a.tail, a.head)] = 1;
    }
    bool operator()(Vertex from, Vertex to) const { return bits_[idx(from, to)] != 0; }
    std::size_t size() const { return n_; }

 private:
    std::size_t idx(Vertex a, Vertex b) const {
        return static_cast<std::size_t>(a) * n_ + static_cast<std::size_t>(b);
    }
    std::size_t n_;
    std::vector<std::uint8_t> bits_;
};

}  // namespace minhom
