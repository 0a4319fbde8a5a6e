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

#include <optional>
#include <vector>

#include "minhom/digraph.hpp"

namespace minhom {

namespace detail {

class InducedMatcher {
 public:
    InducedMatcher(const Digraph& pattern, const Digraph& host)
        : pattern_(pattern), host_(host), p_adj_(pattern), h_adj_(host) {}

    std::optional<std::vector<Vertex>> run() {
        const std::size_t k = pattern_.vertex_count();
        if (k > host_.vertex_count()) return std::nullopt;
        map_.assign(k, -1);
        used_.assign(host_.vertex_count(), 0);
        if (extend(0)) return map_;
        return std::nullopt;
    }

 private:
    // Pattern vertices are placed in id order and host candidates tried in
    // ascending order, so the first hit is the lexicographically least image
    // tuple.
    bool extend(std::size_t depth) {
        if (depth == map_.size()) return true;
        const auto p = static_cast<Vertex>(depth);
        for (std::size_t hv = 0; hv < host_.vertex_count(); ++hv) {
            if (used_[hv]) continue;
            const auto h = static_cast<Vertex>(hv);
            if (host_.out_degree(h) < pattern_.out_degree(p) || host_.in_degree(h) < pattern_.in_degree(p))
                continue;
            bool ok = true;
            for (std::size_t q = 0; q < depth && ok; ++q) {
                const auto pq = static_cast<Vertex>(q);
                const Vertex hq = map_[q];
                ok = p_adj_(p, pq) == h_adj_(h, hq) && p_adj_(pq, p) == h_adj_(hq, h);
            }
            if (!ok) continue;
            map_[depth] = h;
            used_[hv] = 1;
            if (extend(depth + 1)) return true;
            used_[hv] = 0;
        }
        map_[depth] = -1;
        return false;
    }

    const Digraph& pattern_;
    const Digraph& host_;
    AdjacencyMatrix p_adj_;
    AdjacencyMatrix h_adj_;
    std::vector<Vertex> map_;
    std::vector<char> used_;
};

}  // namespace detail

/// Injective map m from V(pattern) into V(host) with m(x)m(y) an arc of host
/// exactly when xy is an arc of pattern. Returns the lexicographically least
/// image tuple (indexed by pattern vertex), or nullopt.
inline std::optional<std::vector<Vertex>> find_induced_subdigraph(const Digraph& pattern, const Digraph& host) {
    return detail::InducedMatcher(pattern, host).run();
}

/// Induced-subgraph search for undirected graphs.
inline std::optional<std::vector<Vertex>> find_induced_subgraph(const UndirectedGraph& pattern,
                                                                const UndirectedGraph& host) {
    return find_induced_subdigraph(symmetric_digraph(pattern), symmetric_digraph(host));
}

/// Surjection class: V(h) -> V(g) witnessing that h is an extension of g
/// (classes independent, x->y in h iff class(x)->class(y) in g), or nullopt.
/// Vertex 0 of h is tried against g's vertices in ascending order first, so
/// the result is deterministic.
inline std::optional<std::vector<Vertex>> is_extension_of(const Digraph& h, const Digraph& g) {
    const std::size_t n = h.vertex_count();
    const std::size_t m = g.vertex_count();
    if (m > n || (m == 0 && n > 0)) return std::nullopt;
    if (n == 0) return std::vector<Vertex>{};

    const AdjacencyMatrix ha(h), ga(g);
    std::vector<Vertex> cls(n, -1);
    std::vector<std::size_t> class_size(m, 0);
    std::size_t unused = m;

    auto consistent = [&](std::size_t x, Vertex c) {
        for (std::size_t y = 0; y < x; ++y) {
            const auto xv = static_cast<Vertex>(x), yv = static_cast<Vertex>(y);
            if (ha(xv, yv) != ga(c, cls[y]) || ha(yv, xv) != ga(cls[y], c)) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, std::size_t x) -> bool {
        if (x == n) return unused == 0;
        if (n - x < unused) return false;
        for (std::size_t c = 0; c < m; ++c) {
            const auto cv = static_cast<Vertex>(c);
            if (!consistent(x, cv)) continue;
            cls[x] = cv;
            if (class_size[c]++ == 0) --unused;
            if (self(self, x + 1)) return true;
            if (--class_size[c] == 0) ++unused;
        }
        cls[x] = -1;
        return false;
    };
    if (search(search, 0)) return cls;
    return std::nullopt;
}

}  // namespace minhom
