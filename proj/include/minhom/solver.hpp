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

#include <cstdint>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "minhom/digraph.hpp"
#include "minhom/error.hpp"
#include "minhom/max_flow.hpp"
#include "minhom/ordering.hpp"

namespace minhom {

using Cost = std::int64_t;

/// c(u, h): cost of mapping input vertex u to target vertex h.
class CostTable {
 public:
    CostTable() = default;
    CostTable(std::size_t rows, std::size_t cols, Cost fill = 0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {
        if (fill < 0) throw InputError("costs must be nonnegative");
    }
    CostTable(std::size_t rows, std::size_t cols, std::vector<Cost> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) throw InputError("cost table data does not match its dimensions");
        for (Cost c : data_)
            if (c < 0) throw InputError("costs must be nonnegative");
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Cost operator()(Vertex u, Vertex h) const { return data_[index(u, h)]; }
    void set(Vertex u, Vertex h, Cost c) {
        if (c < 0) throw InputError("costs must be nonnegative");
        data_[index(u, h)] = c;
    }
    const std::vector<Cost>& data() const { return data_; }

    /// Sum of all entries; throws OverflowError past 64 bits.
    Cost total() const {
        Cost sum = 0;
        for (Cost c : data_)
            if (__builtin_add_overflow(sum, c, &sum)) throw OverflowError("cost table sum exceeds 64 bits");
        return sum;
    }

    friend bool operator==(const CostTable&, const CostTable&) = default;

 private:
    std::size_t index(Vertex u, Vertex h) const {
        return static_cast<std::size_t>(u) * cols_ + static_cast<std::size_t>(h);
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Cost> data_;
};

inline void check_dimensions(const Digraph& d, const CostTable& costs, const Digraph& h) {
    if (costs.rows() != d.vertex_count() || costs.cols() != h.vertex_count())
        throw InputError("cost table is " + std::to_string(costs.rows()) + "x" + std::to_string(costs.cols()) +
                         " but D has " + std::to_string(d.vertex_count()) + " vertices and H has " +
                         std::to_string(h.vertex_count()));
}

inline bool is_homomorphism(const Digraph& d, const Digraph& h, const std::vector<Vertex>& f) {
    if (f.size() != d.vertex_count()) return false;
    for (Vertex x : f)
        if (x < 0 || static_cast<std::size_t>(x) >= h.vertex_count()) return false;
    for (const Arc& a : d.arcs())
        if (!h.has_arc(f[static_cast<std::size_t>(a.tail)], f[static_cast<std::size_t>(a.head)])) return false;
    return true;
}

inline Cost homomorphism_cost(const CostTable& costs, const std::vector<Vertex>& f) {
    Cost sum = 0;
    for (std::size_t u = 0; u < f.size(); ++u)
        if (__builtin_add_overflow(sum, costs(static_cast<Vertex>(u), f[u]), &sum))
            throw OverflowError("homomorphism cost exceeds 64 bits");
    return sum;
}

struct Homomorphism {
    std::vector<Vertex> map;
    Cost cost = 0;
};

/// Level of every vertex of D in 0..k-1 (-1: not part of this assignment).
struct LevelAssignment {
    int k = 2;
    std::vector<int> level;
};

/// Base levels of D per weak component; every component admits exactly k
/// cyclic shifts, chosen independently.
struct LevelPartition {
    int k = 2;
    std::vector<std::vector<Vertex>> components;
    std::vector<int> base;

    /// Levels of one component under shift s; other vertices get -1.
    LevelAssignment shifted(std::size_t component, int s) const {
        LevelAssignment lv{k, std::vector<int>(base.size(), -1)};
        for (Vertex x : components[component])
            lv.level[static_cast<std::size_t>(x)] = (base[static_cast<std::size_t>(x)] + s) % k;
        return lv;
    }
};

/// Levels with level(y) = level(x) + 1 mod k along every arc xy, found by
/// traversal from the least vertex of each weak component (which gets
/// level 0). nullopt if some component has no such levelling.
inline std::optional<LevelPartition> level_partitions(const Digraph& d, int k) {
    if (k < 2) throw InputError("level partitions need k >= 2");
    LevelPartition lp{k, weak_components(d), std::vector<int>(d.vertex_count(), -1)};
    for (const auto& comp : lp.components) {
        std::queue<Vertex> q;
        lp.base[static_cast<std::size_t>(comp.front())] = 0;
        q.push(comp.front());
        while (!q.empty()) {
            const Vertex x = q.front();
            q.pop();
            const int lx = lp.base[static_cast<std::size_t>(x)];
            auto visit = [&](Vertex y, int want) {
                int& ly = lp.base[static_cast<std::size_t>(y)];
                if (ly < 0) {
                    ly = want;
                    q.push(y);
                    return true;
                }
                return ly == want;
            };
            for (Vertex y : d.out_neighbors(x))
                if (!visit(y, (lx + 1) % k)) return std::nullopt;
            for (Vertex y : d.in_neighbors(x))
                if (!visit(y, (lx + k - 1) % k)) return std::nullopt;
        }
    }
    return lp;
}

/// The layered s-t network. Node (x, p) for the 0-based position p of x's
/// level class stands for "f(x) is at position p or later"; position
/// l(level) is the sink.
struct CutNetwork {
    FlowNetwork flow;
    int source = 0;
    int sink = 1;
    Cost big_m = 0;
    int k = 2;
    std::vector<Vertex> members;   // vertices of D in this network
    std::vector<int> level;        // per member
    std::vector<int> first_node;   // per member, node id of (x, 0)
    std::vector<int> chain_length; // per member, size of its level class
    std::size_t chain_arc_count = 0;

    int node(std::size_t member, int pos) const {
        return pos >= chain_length[member] ? sink : first_node[member] + pos;
    }
};

/// Big constant: 1 + sum of every cost entry.
inline Cost big_m_for(const CostTable& costs) {
    Cost m = costs.total();
    if (__builtin_add_overflow(m, Cost{1}, &m)) throw OverflowError("M exceeds 64 bits");
    return m;
}

namespace detail {

// lower/upper as in ImplicationTable. With `unary` set, positions without
// an out-arc (in-arc) are also barred for vertices of D that have one.
inline CutNetwork build_network(const Digraph& d, const CostTable& costs, const Digraph& h,
                                const KMinMaxOrdering& ord, const std::vector<std::vector<int>>& lower,
                                const std::vector<std::vector<int>>& upper, const ImplicationTable* unary,
                                const LevelAssignment& lv, std::optional<Cost> big_m) {
    check_dimensions(d, costs, h);
    if (lv.k != ord.k || lv.level.size() != d.vertex_count())
        throw InputError("level assignment does not match the ordering or D");
    const auto k = static_cast<std::size_t>(ord.k);
    if (lower.size() != k || upper.size() != k) throw InputError("bound table does not match the ordering");
    for (std::size_t j = 0; j < k; ++j)
        if (lower[j].size() != ord.classes[j].size() || upper[j].size() != ord.classes[j].size())
            throw InputError("bound table does not match the ordering");

    CutNetwork net;
    net.k = ord.k;
    net.big_m = big_m ? *big_m : big_m_for(costs);
    std::vector<int> member_of(d.vertex_count(), -1);
    int next_node = 2;
    for (std::size_t x = 0; x < d.vertex_count(); ++x) {
        const int l = lv.level[x];
        if (l < 0) continue;
        if (l >= ord.k) throw InputError("level out of range");
        member_of[x] = static_cast<int>(net.members.size());
        net.members.push_back(static_cast<Vertex>(x));
        net.level.push_back(l);
        net.first_node.push_back(next_node);
        const int len = static_cast<int>(ord.class_size(l));
        net.chain_length.push_back(len);
        next_node += len;
    }
    net.flow = FlowNetwork(static_cast<std::size_t>(next_node));

    for (std::size_t m = 0; m < net.members.size(); ++m) {
        const Vertex x = net.members[m];
        const auto l = static_cast<std::size_t>(net.level[m]);
        const auto& cls = ord.classes[l];
        net.flow.add_infinite_arc(net.source, net.node(m, 0));
        for (int p = 0; p < net.chain_length[m]; ++p) {
            Cost cap;
            if (__builtin_add_overflow(costs(x, cls[static_cast<std::size_t>(p)]), net.big_m, &cap))
                throw OverflowError("chain capacity exceeds 64 bits");
            net.flow.add_arc(net.node(m, p), net.node(m, p + 1), cap);
            ++net.chain_arc_count;
        }
        if (!unary) continue;
        const bool needs_out = d.out_degree(x) > 0, needs_in = d.in_degree(x) > 0;
        for (int p = 0; p < net.chain_length[m]; ++p) {
            const auto up = static_cast<std::size_t>(p);
            if ((needs_out && !unary->has_out[l][up]) || (needs_in && !unary->has_in[l][up]))
                net.flow.add_infinite_arc(net.node(m, p), net.node(m, p + 1));
        }
    }

    for (const Arc& a : d.arcs()) {
        const int mx = member_of[static_cast<std::size_t>(a.tail)];
        const int my = member_of[static_cast<std::size_t>(a.head)];
        if (mx < 0 && my < 0) continue;
        if (mx < 0 || my < 0) throw InputError("arc joins a levelled and an unlevelled vertex");
        const auto ux = static_cast<std::size_t>(mx), uy = static_cast<std::size_t>(my);
        const int j = net.level[ux];
        if (net.level[uy] != (j + 1) % ord.k) throw InputError("arc does not advance one level");
        const auto& lrow = lower[static_cast<std::size_t>(j)];
        const auto& urow = upper[static_cast<std::size_t>(j)];
        for (int p = 0; p < net.chain_length[ux]; ++p) {
            const int from = net.node(ux, p);
            const int to_y = net.node(uy, lrow[static_cast<std::size_t>(p)]);
            if (from != to_y) net.flow.add_infinite_arc(from, to_y);
            const int from_y = net.node(uy, urow[static_cast<std::size_t>(p)] + 1);
            const int to_x = net.node(ux, p + 1);
            if (from_y != net.sink && from_y != to_x) net.flow.add_infinite_arc(from_y, to_x);
        }
    }
    return net;
}

}  // namespace detail

/// Builds the network for the vertices with lv.level >= 0. Chain arcs
/// (x,p) -> (x,p+1) weigh c(x, v_p) + M; every arc xy of D between
/// levelled vertices contributes, per position p of x, the infinite arcs
/// (x,p) -> (y,L) and (y,R-1) -> (x,p+1) (0-based L, R as in the interval
/// table). Arcs leaving the sink are dropped.
inline CutNetwork build_network(const Digraph& d, const CostTable& costs, const Digraph& h,
                                const KMinMaxOrdering& ord, const IntervalTable& tbl, const LevelAssignment& lv,
                                std::optional<Cost> big_m = std::nullopt) {
    const auto k = static_cast<std::size_t>(ord.k);
    if (tbl.left.size() != k || tbl.right.size() != k) throw InputError("interval table does not match the ordering");
    std::vector<std::vector<int>> upper = tbl.right;
    for (auto& row : upper)
        for (int& r : row) r -= 2;
    return detail::build_network(d, costs, h, ord, tbl.left, upper, nullptr, lv, big_m);
}

/// Same network from implication bounds, for orderings without interval
/// tables: arcs (x,p) -> (y, lower[p]) and (y, upper[p]+1) -> (x,p+1), plus
/// an infinite chain arc at every position whose vertex lacks the out-arc
/// (in-arc) that x needs. Equals the interval version when tables exist.
inline CutNetwork build_network(const Digraph& d, const CostTable& costs, const Digraph& h,
                                const KMinMaxOrdering& ord, const ImplicationTable& tbl, const LevelAssignment& lv,
                                std::optional<Cost> big_m = std::nullopt) {
    return detail::build_network(d, costs, h, ord, tbl.lower, tbl.upper, &tbl, lv, big_m);
}

struct CutResult {
    std::vector<char> source_side;
    Cost weight = 0;
};

/// Minimum s-t cut; nullopt when every cut has infinite weight.
inline std::optional<CutResult> min_cut_solve(CutNetwork& net) {
    const auto w = net.flow.max_flow(net.source, net.sink);
    if (!w) return std::nullopt;
    return CutResult{net.flow.source_side(), *w};
}

/// Reads f(x) off the cut: the last chain position of x on the source side.
/// The source side must be a chain prefix for every member, and the result
/// must preserve every arc of D among the members.
inline Homomorphism recover_homomorphism(const CutNetwork& net, const CutResult& cut, const Digraph& d,
                                         const Digraph& h, const KMinMaxOrdering& ord, const CostTable& costs) {
    Homomorphism f{std::vector<Vertex>(d.vertex_count(), -1), 0};
    for (std::size_t m = 0; m < net.members.size(); ++m) {
        const int len = net.chain_length[m];
        int last = -1;
        for (int p = 0; p < len; ++p) {
            const bool in_s = cut.source_side[static_cast<std::size_t>(net.node(m, p))] != 0;
            if (in_s && last != p - 1)
                throw InconsistencyError("source side is not a chain prefix for vertex " +
                                         std::to_string(net.members[m]));
            if (in_s) last = p;
        }
        if (last < 0) throw InconsistencyError("chain start not on the source side");
        const Vertex x = net.members[m];
        f.map[static_cast<std::size_t>(x)] = ord.classes[static_cast<std::size_t>(net.level[m])][static_cast<std::size_t>(last)];
        f.cost += costs(x, f.map[static_cast<std::size_t>(x)]);
    }
    for (const Arc& a : d.arcs()) {
        const Vertex fx = f.map[static_cast<std::size_t>(a.tail)], fy = f.map[static_cast<std::size_t>(a.head)];
        if (fx < 0 && fy < 0) continue;
        if (fx < 0 || fy < 0 || !h.has_arc(fx, fy))
            throw InconsistencyError("recovered map breaks arc " + std::to_string(a.tail) + "->" +
                                     std::to_string(a.head));
    }
    return f;
}

struct MinHomSolution {
    std::vector<Vertex> map;
    Cost cost = 0;
    /// Sum of the chosen cut weights plus c_min(x) + M per isolated vertex.
    Cost cut_weight = 0;
    Cost big_m = 0;
    /// False when the ordering has no interval tables and implication
    /// bounds were used instead.
    bool interval_tables = true;
};

/// Minimum-cost homomorphism D -> H through the cut networks, one per weak
/// component and shift; isolated vertices take their cheapest colour
/// (least id on ties). nullopt if no homomorphism exists.
inline std::optional<MinHomSolution> solve_minhom(const Digraph& d, const CostTable& costs, const Digraph& h,
                                                  const KMinMaxOrdering& ord) {
    check_dimensions(d, costs, h);
    if (!validate_k_min_max(h, ord)) throw InputError("ordering is not a k-Min-Max ordering of H");
    std::optional<IntervalTable> tbl;
    std::optional<ImplicationTable> bounds;
    try {
        tbl = interval_table(h, ord);
    } catch (const IntervalError&) {
        bounds = implication_table(h, ord);
    }
    const auto lp = level_partitions(d, ord.k);
    if (!lp) return std::nullopt;

    MinHomSolution sol{std::vector<Vertex>(d.vertex_count(), -1), 0, 0, big_m_for(costs), tbl.has_value()};
    const Cost m = sol.big_m;
    auto add = [](Cost& acc, Cost v) {
        if (__builtin_add_overflow(acc, v, &acc)) throw OverflowError("cut weight exceeds 64 bits");
    };

    for (std::size_t ci = 0; ci < lp->components.size(); ++ci) {
        const auto& comp = lp->components[ci];
        if (comp.size() == 1) {
            const Vertex x = comp.front();
            if (h.vertex_count() == 0) return std::nullopt;
            Vertex best = 0;
            for (Vertex c = 1; static_cast<std::size_t>(c) < h.vertex_count(); ++c)
                if (costs(x, c) < costs(x, best)) best = c;
            sol.map[static_cast<std::size_t>(x)] = best;
            add(sol.cost, costs(x, best));
            add(sol.cut_weight, costs(x, best));
            add(sol.cut_weight, m);
            continue;
        }

        Cost threshold;
        if (__builtin_mul_overflow(static_cast<Cost>(comp.size() + 1), m, &threshold))
            throw OverflowError("feasibility threshold exceeds 64 bits");
        std::optional<Homomorphism> best;
        Cost best_weight = 0;
        for (int s = 0; s < ord.k; ++s) {
            CutNetwork net = tbl ? build_network(d, costs, h, ord, *tbl, lp->shifted(ci, s), m)
                                 : build_network(d, costs, h, ord, *bounds, lp->shifted(ci, s), m);
            const auto cut = min_cut_solve(net);
            if (!cut || cut->weight >= threshold) continue;
            if (best && cut->weight >= best_weight) continue;
            Homomorphism f = recover_homomorphism(net, *cut, d, h, ord, costs);
            if (f.cost != cut->weight - static_cast<Cost>(comp.size()) * m)
                throw InconsistencyError("cut weight and recovered cost disagree");
            best = std::move(f);
            best_weight = cut->weight;
        }
        if (!best) return std::nullopt;
        for (Vertex x : comp) sol.map[static_cast<std::size_t>(x)] = best->map[static_cast<std::size_t>(x)];
        add(sol.cost, best->cost);
        add(sol.cut_weight, best_weight);
    }
    if (!is_homomorphism(d, h, sol.map)) throw InconsistencyError("combined map is not a homomorphism");
    return sol;
}

}  // namespace minhom
