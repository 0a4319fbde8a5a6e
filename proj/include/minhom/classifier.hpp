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
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "minhom/digraph.hpp"
#include "minhom/error.hpp"
#include "minhom/forbidden.hpp"
#include "minhom/induced.hpp"
#include "minhom/ordering.hpp"

namespace minhom {

struct Polynomial {
    /// Shape that made the target tractable: "bipartite", "TT_k",
    /// "TT-_k" or "C3-extension".
    std::string structure;
    /// Components of UN(H), each with its ordering (same index). Empty for
    /// the classify-only multipartite shapes.
    std::vector<std::vector<Vertex>> components;
    std::vector<KMinMaxOrdering> orderings;

    int k() const {
        int best = 0;
        for (const auto& o : orderings) best = std::max(best, o.k);
        return best;
    }
};

struct NpHard {
    std::optional<ForbiddenWitness> witness;
    std::string reason;
};

using Classification = std::variant<Polynomial, NpHard>;

inline bool is_polynomial(const Classification& c) { return std::holds_alternative<Polynomial>(c); }

/// Dichotomy for a semicomplete bipartite target: NP-hard with a witness
/// if any forbidden pattern occurs, otherwise an ordering per component of
/// UN(H).
inline Classification classify_bipartite(const BipartitionedDigraph& h,
                                         const PatternCatalog& catalog = PatternCatalog::standard()) {
    if (auto w = detect_forbidden(h, catalog)) {
        const std::string reason = std::string("contains ") + forbidden_kind_name(w->kind);
        return NpHard{std::move(w), reason};
    }
    Polynomial poly{"bipartite", {}, {}};
    for (auto& comp : weak_components(h.graph())) {
        const BipartitionedDigraph sub = h.induced(comp);
        auto ord = construct_ordering(sub);
        if (!ord) throw InconsistencyError("component has a forbidden pattern the whole target did not show");
        for (auto& cls : ord->classes)
            for (Vertex& v : cls) v = comp[static_cast<std::size_t>(v)];
        poly.components.push_back(std::move(comp));
        poly.orderings.push_back(std::move(*ord));
    }
    return poly;
}

/// Acyclic tournament on p vertices, arcs i -> j for i < j.
inline Digraph transitive_tournament(std::size_t p) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j) arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Digraph(p, std::move(arcs));
}

/// TT_p without the arc from its source to its sink.
inline Digraph transitive_tournament_minus(std::size_t p) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = i + 1; j < p; ++j)
            if (!(i == 0 && j + 1 == p)) arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Digraph(p, std::move(arcs));
}

/// Throws InputError unless `parts` partitions V(h) into independent sets
/// with every cross pair adjacent.
inline void check_semicomplete_multipartite(const Digraph& h, const std::vector<std::vector<Vertex>>& parts) {
    std::vector<int> part(h.vertex_count(), -1);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (Vertex v : parts[p]) {
            if (v < 0 || static_cast<std::size_t>(v) >= h.vertex_count() || part[static_cast<std::size_t>(v)] >= 0)
                throw InputError("not-semicomplete-multipartite: parts do not partition the vertices");
            part[static_cast<std::size_t>(v)] = static_cast<int>(p);
        }
    for (int p : part)
        if (p < 0) throw InputError("not-semicomplete-multipartite: parts do not partition the vertices");
    for (std::size_t a = 0; a < h.vertex_count(); ++a)
        for (std::size_t b = a + 1; b < h.vertex_count(); ++b) {
            const bool same = part[a] == part[b];
            const bool adj = h.adjacent(static_cast<Vertex>(a), static_cast<Vertex>(b));
            if (same && adj)
                throw InputError("not-semicomplete-multipartite: arc inside part " + std::to_string(part[a]));
            if (!same && !adj)
                throw InputError("not-semicomplete-multipartite: vertices " + std::to_string(a) + " and " +
                                 std::to_string(b) + " are not adjacent");
        }
}

/// Dichotomy for a semicomplete k-partite target. k = 2 goes through the
/// bipartite classifier. For k >= 3 the target is tractable exactly when it
/// extends TT_k, TT-_{k+1} or the directed 3-cycle; only the last comes
/// with an ordering (k = 3).
inline Classification classify_multipartite(const Digraph& h, const std::vector<std::vector<Vertex>>& parts) {
    if (parts.size() < 2) throw InputError("not-semicomplete-multipartite: need at least 2 parts");
    check_semicomplete_multipartite(h, parts);
    if (parts.size() == 2) {
        std::vector<Side> sides(h.vertex_count(), Side::V);
        for (Vertex v : parts[1]) sides[static_cast<std::size_t>(v)] = Side::U;
        return classify_bipartite(BipartitionedDigraph(h, std::move(sides)));
    }
    const std::size_t k = parts.size();
    if (is_extension_of(h, transitive_tournament(k)))
        return Polynomial{"TT_" + std::to_string(k), {}, {}};
    if (is_extension_of(h, transitive_tournament_minus(k + 1)))
        return Polynomial{"TT-_" + std::to_string(k + 1), {}, {}};
    if (auto cls = is_extension_of(h, directed_cycle(3))) {
        KMinMaxOrdering ord{3, std::vector<std::vector<Vertex>>(3)};
        std::vector<Vertex> all;
        for (std::size_t v = 0; v < cls->size(); ++v) {
            ord.classes[static_cast<std::size_t>((*cls)[v])].push_back(static_cast<Vertex>(v));
            all.push_back(static_cast<Vertex>(v));
        }
        return Polynomial{"C3-extension", {std::move(all)}, {std::move(ord)}};
    }
    return NpHard{std::nullopt, "not an extension of TT_" + std::to_string(k) + ", TT-_" + std::to_string(k + 1) +
                                    " or the directed 3-cycle"};
}

}  // namespace minhom
