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
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minhom/digraph.hpp"
#include "minhom/error.hpp"
#include "minhom/oracle.hpp"
#include "minhom/solver.hpp"

namespace minhom {

/// Independent-set reductions onto the five directed forbidden targets.
enum class GadgetKind : std::uint8_t { c4_prime, c4_double_prime, h_star, n1, n2 };

inline constexpr GadgetKind kAllGadgets[] = {GadgetKind::c4_prime, GadgetKind::c4_double_prime,
                                             GadgetKind::h_star, GadgetKind::n1, GadgetKind::n2};

/// CLI spelling: c4p, c4pp, hstar, n1, n2.
inline const char* gadget_name(GadgetKind k) {
    switch (k) {
        case GadgetKind::c4_prime: return "c4p";
        case GadgetKind::c4_double_prime: return "c4pp";
        case GadgetKind::h_star: return "hstar";
        case GadgetKind::n1: return "n1";
        case GadgetKind::n2: return "n2";
    }
    return "?";
}

inline std::optional<GadgetKind> parse_gadget(std::string_view s) {
    for (GadgetKind k : kAllGadgets)
        if (s == gadget_name(k)) return k;
    return std::nullopt;
}

/// Fresh vertices each arc of D receives.
inline std::size_t gadget_internal_count(GadgetKind k) {
    switch (k) {
        case GadgetKind::c4_prime: return 3;
        case GadgetKind::c4_double_prime: return 1;
        case GadgetKind::h_star: return 5;
        case GadgetKind::n1: return 3;
        case GadgetKind::n2: return 3;
    }
    return 0;
}

/// The reduction target with colours 1..n stored as ids 0..n-1 (labels
/// carry the 1-based names).
inline Digraph gadget_target(GadgetKind k) {
    auto build = [](std::size_t n, std::initializer_list<std::pair<int, int>> one_based) {
        std::vector<Arc> arcs;
        for (auto [a, b] : one_based) arcs.push_back({a - 1, b - 1});
        std::vector<std::string> labels;
        for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
        return Digraph(n, std::move(arcs), std::move(labels));
    };
    switch (k) {
        case GadgetKind::c4_prime: return build(4, {{1, 2}, {2, 1}, {2, 3}, {3, 4}, {4, 1}});
        case GadgetKind::c4_double_prime: return build(4, {{1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 4}, {4, 1}});
        case GadgetKind::h_star: return build(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {3, 5}});
        case GadgetKind::n1:
            return build(6, {{1, 2}, {2, 1}, {3, 4}, {4, 3}, {5, 6}, {6, 5},
                             {2, 3}, {2, 5}, {1, 4}, {1, 6}, {5, 4}, {3, 6}});
        case GadgetKind::n2:
            return build(6, {{1, 2}, {3, 4}, {4, 3}, {5, 6}, {6, 5}, {2, 3},
                             {2, 5}, {1, 4}, {1, 6}, {5, 4}, {3, 6}});
    }
    throw InputError("unknown gadget kind");
}

struct GadgetInstance {
    GadgetKind kind = GadgetKind::c4_prime;
    Digraph target;
    Digraph dprime;
    CostTable costs;
    /// Vertex x of D is vertex original_vertices[x] of D' (always x).
    std::vector<Vertex> original_vertices;
};

/// Replaces every arc uv of D by a fresh copy of the kind's gadget and sets
/// the costs of the matching hardness argument.
inline GadgetInstance reduce(GadgetKind kind, const Digraph& d) {
    const std::size_t n = d.vertex_count();
    const std::size_t g = gadget_internal_count(kind);
    const std::size_t total = n + g * d.arc_count();
    GadgetInstance inst{kind, gadget_target(kind), Digraph(), CostTable(), {}};
    const std::size_t nh = inst.target.vertex_count();
    CostTable costs(total, nh, 0);
    std::vector<Arc> arcs;

    // Colours are 1-based in the tables below.
    auto set = [&](Vertex v, int colour, Cost c) { costs.set(v, colour - 1, c); };
    const auto big = static_cast<Cost>(2 * n + 1);

    for (std::size_t x = 0; x < n; ++x) {
        const auto v = static_cast<Vertex>(x);
        inst.original_vertices.push_back(v);
        switch (kind) {
            case GadgetKind::c4_prime:
                for (int c = 1; c <= 4; ++c) set(v, c, c == 3 ? 0 : 1);
                break;
            case GadgetKind::c4_double_prime:
                for (int c = 1; c <= 4; ++c) set(v, c, c == 4 ? 0 : 1);
                break;
            case GadgetKind::h_star:
                for (int c = 1; c <= 5; ++c) set(v, c, c == 4 ? 0 : 1);
                break;
            case GadgetKind::n1:
                for (int c = 1; c <= 6; ++c) set(v, c, c == 2 ? 1 : c == 6 ? 0 : big);
                break;
            case GadgetKind::n2:
                for (int c = 1; c <= 6; ++c) set(v, c, c == 1 ? 1 : c == 5 ? 0 : big);
                break;
        }
    }

    auto next = static_cast<Vertex>(n);
    for (const Arc& a : d.arcs()) {
        const Vertex u = a.tail, v = a.head;
        switch (kind) {
            case GadgetKind::c4_prime: {
                const Vertex x = next++, y = next++, z = next++;
                arcs.insert(arcs.end(), {{u, x}, {x, y}, {y, z}, {v, z}});
                break;
            }
            case GadgetKind::c4_double_prime: {
                const Vertex x = next++;
                arcs.insert(arcs.end(), {{u, x}, {x, v}});
                break;
            }
            case GadgetKind::h_star: {
                // v1..v5 fresh; u = v6, v = v7
                const Vertex v1 = next++, v2 = next++, v3 = next++, v4 = next++, v5 = next++;
                arcs.insert(arcs.end(),
                            {{v1, v2}, {v2, v3}, {v3, v4}, {v4, v1}, {v5, u}, {v5, v}, {v1, u}, {v3, v}});
                break;
            }
            case GadgetKind::n1: {
                const Vertex x = next++, y = next++, z = next++;
                arcs.insert(arcs.end(), {{u, x}, {v, z}, {x, y}, {y, z}});
                set(y, 6, big);
                break;
            }
            case GadgetKind::n2: {
                const Vertex x = next++, y = next++, z = next++;
                arcs.insert(arcs.end(), {{u, x}, {v, z}, {x, y}, {z, y}});
                set(x, 4, big);
                set(z, 6, big);
                break;
            }
        }
    }
    inst.dprime = Digraph(total, std::move(arcs));
    inst.costs = std::move(costs);
    return inst;
}

/// Maximum independent set size of D (no two members adjacent in either
/// direction), by branching on the lowest undecided vertex.
inline std::size_t max_independent_set(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    if (n > 64) throw InputError("max_independent_set supports at most 64 vertices");
    std::vector<std::uint64_t> nbr(n, 0);
    for (const Arc& a : d.arcs()) {
        nbr[static_cast<std::size_t>(a.tail)] |= std::uint64_t{1} << a.head;
        nbr[static_cast<std::size_t>(a.head)] |= std::uint64_t{1} << a.tail;
    }
    auto rec = [&](auto&& self, std::uint64_t candidates) -> std::size_t {
        if (candidates == 0) return 0;
        const int v = __builtin_ctzll(candidates);
        const std::uint64_t bit = std::uint64_t{1} << v;
        const std::size_t with = 1 + self(self, candidates & ~bit & ~nbr[static_cast<std::size_t>(v)]);
        const std::size_t without = self(self, candidates & ~bit);
        return std::max(with, without);
    };
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return rec(rec, all);
}

/// Whether the exhaustive optimum of the gadget instance is |V(D)| - alpha.
inline bool verify_reduction(const GadgetInstance& g, std::size_t alpha, std::uint64_t budget = 200'000'000) {
    OracleOptions opt;
    opt.budget = budget;
    opt.separator = g.original_vertices;
    const auto best = brute_force_minhom(g.dprime, g.costs, g.target, opt);
    if (!best) return false;
    return best->cost == static_cast<Cost>(g.original_vertices.size()) - static_cast<Cost>(alpha);
}

}  // namespace minhom
