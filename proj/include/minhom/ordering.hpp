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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "minhom/digraph.hpp"
#include "minhom/error.hpp"
#include "minhom/forbidden.hpp"
#include "minhom/induced.hpp"

namespace minhom {

/// A k-partition V_0..V_{k-1} of V(H) with an order inside every class.
/// Arcs must run from V_j to V_{j+1 mod k}.
struct KMinMaxOrdering {
    int k = 2;
    std::vector<std::vector<Vertex>> classes;

    std::size_t class_size(int j) const { return classes[static_cast<std::size_t>(j)].size(); }
    friend bool operator==(const KMinMaxOrdering&, const KMinMaxOrdering&) = default;
};

/// Out-neighbourhood intervals. For the vertex at 1-based position i of
/// class j, N+ is the run of 1-based positions left+1 .. right-1 of class
/// j+1. Stored 0-based by position: left[j][i-1], right[j][i-1]. A vertex
/// with no out-neighbour has left = 0, right = 1.
struct IntervalTable {
    std::vector<std::vector<int>> left;
    std::vector<std::vector<int>> right;
};

class IntervalError : public Error {
 public:
    enum class Reason { non_interval, non_monotone };
    IntervalError(Reason reason, const std::string& what) : Error(what), reason_(reason) {}
    Reason reason() const { return reason_; }

 private:
    Reason reason_;
};

/// Directed 4-cycle 0 -> 1 -> 2 -> 3 -> 0.
inline Digraph directed_cycle(std::size_t length) {
    std::vector<Arc> arcs;
    for (std::size_t i = 0; i < length; ++i)
        arcs.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % length)});
    return Digraph(length, std::move(arcs));
}

/// Whether `order` (a permutation of V(h)) is a Min-Max ordering of h: for
/// arcs v_i v_r, v_j v_s with i < j and s < r, both v_i v_s and v_j v_r are
/// arcs.
inline bool is_min_max_ordering(const Digraph& h, std::span<const Vertex> order) {
    if (order.size() != h.vertex_count()) return false;
    std::vector<int> pos(h.vertex_count(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        auto v = static_cast<std::size_t>(order[i]);
        if (order[i] < 0 || v >= pos.size() || pos[v] >= 0) return false;
        pos[v] = static_cast<int>(i);
    }
    const auto& arcs = h.arcs();
    for (const Arc& a : arcs)
        for (const Arc& b : arcs) {
            if (pos[static_cast<std::size_t>(a.tail)] < pos[static_cast<std::size_t>(b.tail)] &&
                pos[static_cast<std::size_t>(b.head)] < pos[static_cast<std::size_t>(a.head)] &&
                (!h.has_arc(a.tail, b.head) || !h.has_arc(b.tail, a.head)))
                return false;
        }
    return true;
}

namespace detail {

struct ClassIndex {
    std::vector<int> cls;  // class of each vertex
    std::vector<int> pos;  // 0-based position inside its class
};

inline std::optional<ClassIndex> index_classes(const Digraph& h, const KMinMaxOrdering& ord) {
    if (ord.k < 2 || ord.classes.size() != static_cast<std::size_t>(ord.k)) return std::nullopt;
    ClassIndex ix{std::vector<int>(h.vertex_count(), -1), std::vector<int>(h.vertex_count(), -1)};
    for (std::size_t j = 0; j < ord.classes.size(); ++j)
        for (std::size_t i = 0; i < ord.classes[j].size(); ++i) {
            const Vertex v = ord.classes[j][i];
            if (v < 0 || static_cast<std::size_t>(v) >= h.vertex_count()) return std::nullopt;
            if (ix.cls[static_cast<std::size_t>(v)] >= 0) return std::nullopt;
            ix.cls[static_cast<std::size_t>(v)] = static_cast<int>(j);
            ix.pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
        }
    for (int c : ix.cls)
        if (c < 0) return std::nullopt;
    return ix;
}

}  // namespace detail

/// Checks both clauses of a k-Min-Max ordering: every arc goes from some
/// V_j to V_{j+1}, and for every j the (V_j, V_{j+1})-arcs are Min-Max
/// under the order V_j followed by V_{j+1}.
///
/// Only the (V_j, V_{j+1})-arcs enter the Min-Max clause. For k >= 3 that
/// is all of H[V_j u V_{j+1}]; for k = 2 the arcs V_{j+1} -> V_j are
/// checked separately under the swapped concatenation.
inline bool validate_k_min_max(const Digraph& h, const KMinMaxOrdering& ord) {
    const auto ix = detail::index_classes(h, ord);
    if (!ix) return false;
    const auto k = ord.k;
    std::vector<std::vector<Arc>> by_class(static_cast<std::size_t>(k));
    for (const Arc& a : h.arcs()) {
        const int ct = ix->cls[static_cast<std::size_t>(a.tail)];
        if (ix->cls[static_cast<std::size_t>(a.head)] != (ct + 1) % k) return false;
        by_class[static_cast<std::size_t>(ct)].push_back(a);
    }
    for (const auto& arcs : by_class)
        for (const Arc& a : arcs)
            for (const Arc& b : arcs) {
                if (ix->pos[static_cast<std::size_t>(a.tail)] < ix->pos[static_cast<std::size_t>(b.tail)] &&
                    ix->pos[static_cast<std::size_t>(b.head)] < ix->pos[static_cast<std::size_t>(a.head)] &&
                    (!h.has_arc(a.tail, b.head) || !h.has_arc(b.tail, a.head)))
                    return false;
            }
    return true;
}

/// Interval tables for a valid k-Min-Max ordering. Throws IntervalError if
/// some out-neighbourhood is not a run of consecutive vertices or the
/// bounds are not non-decreasing along a class; InputError if an arc does
/// not advance one class.
inline IntervalTable interval_table(const Digraph& h, const KMinMaxOrdering& ord) {
    const auto ix = detail::index_classes(h, ord);
    if (!ix) throw InputError("ordering classes do not partition the vertex set");
    const auto k = static_cast<std::size_t>(ord.k);
    IntervalTable t;
    t.left.resize(k);
    t.right.resize(k);
    for (std::size_t j = 0; j < k; ++j) {
        const int next = static_cast<int>((j + 1) % k);
        const auto& cls = ord.classes[j];
        t.left[j].resize(cls.size());
        t.right[j].resize(cls.size());
        for (std::size_t i = 0; i < cls.size(); ++i) {
            const Vertex v = cls[i];
            int lo = 0, hi = -1, count = 0;
            for (Vertex w : h.out_neighbors(v)) {
                if (ix->cls[static_cast<std::size_t>(w)] != next)
                    throw InputError("arc " + std::to_string(v) + "->" + std::to_string(w) +
                                     " does not advance one class");
                const int p = ix->pos[static_cast<std::size_t>(w)];
                lo = count == 0 ? p : std::min(lo, p);
                hi = std::max(hi, p);
                ++count;
            }
            if (count == 0) {
                t.left[j][i] = 0;
                t.right[j][i] = 1;
            } else if (hi - lo + 1 != count) {
                throw IntervalError(IntervalError::Reason::non_interval,
                                    "out-neighbourhood of vertex " + std::to_string(v) +
                                        " is not consecutive in class " + std::to_string(next));
            } else {
                t.left[j][i] = lo;
                t.right[j][i] = hi + 2;
            }
            // Sinks included: (0, 1) after a non-empty interval is a decrease.
            if (i > 0 && (t.left[j][i] < t.left[j][i - 1] || t.right[j][i] < t.right[j][i - 1]))
                throw IntervalError(IntervalError::Reason::non_monotone,
                                    "interval bounds decrease at position " + std::to_string(i + 1) +
                                        " of class " + std::to_string(j));
        }
    }
    return t;
}

inline bool has_interval_table(const Digraph& h, const KMinMaxOrdering& ord) {
    try {
        interval_table(h, ord);
        return true;
    } catch (const IntervalError&) {
        return false;
    } catch (const InputError&) {
        return false;
    }
}

/// Bounds that hold for any k-Min-Max ordering, interval tables or not.
/// For the 0-based position p of class j, arcs from class j go to class
/// j+1 and:
///   lower[j][p]  least head position over arcs from positions >= p
///                (size of class j+1 if there is none),
///   upper[j][p]  greatest head position over arcs from positions <= p
///                (-1 if none),
///   has_out[j][p], has_in[j][p]  whether that vertex has an out-arc, in-arc.
/// The arc relation between consecutive classes is closed under pairwise
/// min and max, so a pair (a, b) is an arc iff a has an out-arc, b has an
/// in-arc, lower[a] <= b and b <= upper[a].
struct ImplicationTable {
    std::vector<std::vector<int>> lower;
    std::vector<std::vector<int>> upper;
    std::vector<std::vector<char>> has_out;
    std::vector<std::vector<char>> has_in;
};

inline ImplicationTable implication_table(const Digraph& h, const KMinMaxOrdering& ord) {
    const auto ix = detail::index_classes(h, ord);
    if (!ix) throw InputError("ordering classes do not partition the vertex set");
    const auto k = static_cast<std::size_t>(ord.k);
    ImplicationTable t;
    t.lower.resize(k);
    t.upper.resize(k);
    t.has_out.resize(k);
    t.has_in.resize(k);
    for (std::size_t j = 0; j < k; ++j) t.has_in[j].assign(ord.classes[j].size(), 0);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t next = (j + 1) % k;
        const auto& cls = ord.classes[j];
        const int n = static_cast<int>(cls.size());
        const int none_lo = static_cast<int>(ord.classes[next].size());
        std::vector<int> lo(cls.size(), none_lo), hi(cls.size(), -1);
        t.has_out[j].assign(cls.size(), 0);
        for (int i = 0; i < n; ++i) {
            for (Vertex w : h.out_neighbors(cls[static_cast<std::size_t>(i)])) {
                if (static_cast<std::size_t>(ix->cls[static_cast<std::size_t>(w)]) != next)
                    throw InputError("arc " + std::to_string(cls[static_cast<std::size_t>(i)]) + "->" +
                                     std::to_string(w) + " does not advance one class");
                const int p = ix->pos[static_cast<std::size_t>(w)];
                lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], p);
                hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], p);
                t.has_out[j][static_cast<std::size_t>(i)] = 1;
                t.has_in[next][static_cast<std::size_t>(p)] = 1;
            }
        }
        for (int i = n - 2; i >= 0; --i)
            lo[static_cast<std::size_t>(i)] = std::min(lo[static_cast<std::size_t>(i)], lo[static_cast<std::size_t>(i + 1)]);
        for (int i = 1; i < n; ++i)
            hi[static_cast<std::size_t>(i)] = std::max(hi[static_cast<std::size_t>(i)], hi[static_cast<std::size_t>(i - 1)]);
        t.lower[j] = std::move(lo);
        t.upper[j] = std::move(hi);
    }
    return t;
}

/// V side then U side, each sorted by out-degree ascending, ties broken by
/// in-degree descending, remaining ties by vertex id. Not validated.
inline KMinMaxOrdering order_by_degrees(const BipartitionedDigraph& h) {
    const Digraph& g = h.graph();
    auto sorted_side = [&](Side s) {
        auto vs = h.side_vertices(s);
        std::stable_sort(vs.begin(), vs.end(), [&](Vertex a, Vertex b) {
            if (g.out_degree(a) != g.out_degree(b)) return g.out_degree(a) < g.out_degree(b);
            return g.in_degree(a) > g.in_degree(b);
        });
        return vs;
    };
    return KMinMaxOrdering{2, {sorted_side(Side::V), sorted_side(Side::U)}};
}

/// If h is an extension of the directed 4-cycle, the 4 extension classes
/// (ascending ids inside each class); nullopt otherwise.
inline std::optional<KMinMaxOrdering> decompose_c4_extension(const BipartitionedDigraph& h) {
    const auto cls = is_extension_of(h.graph(), directed_cycle(4));
    if (!cls) return std::nullopt;
    KMinMaxOrdering ord{4, std::vector<std::vector<Vertex>>(4)};
    for (std::size_t v = 0; v < cls->size(); ++v)
        ord.classes[static_cast<std::size_t>((*cls)[v])].push_back(static_cast<Vertex>(v));
    return ord;
}

/// Exhaustive search over 2-class orderings (V side, U side) for one that
/// satisfies `accept`. Every V order is tried; U orders are built
/// incrementally under the precedence constraints that V order forces.
/// With `require_intervals`, orders in which some out-neighbourhood is not
/// a run are pruned early (accept must then imply interval tables).
/// Throws BudgetExceeded after `budget` search nodes.
inline std::optional<KMinMaxOrdering> search_two_class_ordering(
    const BipartitionedDigraph& h, const std::function<bool(const KMinMaxOrdering&)>& accept,
    std::uint64_t budget = 50'000'000, bool require_intervals = true) {
    const Digraph& g = h.graph();
    const AdjacencyMatrix adj(g);
    std::vector<Vertex> vs = h.side_vertices(Side::V);
    const std::vector<Vertex> us = h.side_vertices(Side::U);
    const std::size_t nu = us.size();
    std::vector<int> upos_of(g.vertex_count(), -1);
    for (std::size_t i = 0; i < nu; ++i) upos_of[static_cast<std::size_t>(us[i])] = static_cast<int>(i);

    std::vector<Arc> forward, backward;
    for (const Arc& a : g.arcs()) (h.side(a.tail) == Side::V ? forward : backward).push_back(a);

    std::uint64_t nodes = 0;
    std::vector<int> vpos(g.vertex_count(), -1);
    std::vector<std::vector<char>> before(nu, std::vector<char>(nu, 0));  // before[a][b]: a precedes b
    std::vector<Vertex> tau;
    std::vector<char> placed(nu, 0);
    // Per V vertex: 0 = none of N+(v) placed yet, 1 = run open, 2 = run closed.
    std::vector<int> run_state(g.vertex_count(), 0);

    auto dfs = [&](auto&& self) -> std::optional<KMinMaxOrdering> {
        if (++nodes > budget) throw BudgetExceeded("two-class ordering search exceeded its node budget");
        if (tau.size() == nu) {
            KMinMaxOrdering ord{2, {vs, tau}};
            if (accept(ord)) return ord;
            return std::nullopt;
        }
        for (std::size_t c = 0; c < nu; ++c) {
            if (placed[c]) continue;
            bool ready = true;
            for (std::size_t p = 0; p < nu && ready; ++p)
                if (before[p][c] && !placed[p]) ready = false;
            if (!ready) continue;

            const Vertex u = us[c];
            std::vector<std::pair<Vertex, int>> saved;
            bool ok = true;
            for (Vertex v : vs) {
                if (!require_intervals) break;
                const bool member = adj(v, u);
                int& st = run_state[static_cast<std::size_t>(v)];
                if (member) {
                    if (st == 2) {
                        ok = false;
                        break;
                    }
                    if (st == 0) saved.emplace_back(v, st), st = 1;
                } else if (st == 1) {
                    saved.emplace_back(v, st), st = 2;
                }
            }
            if (ok) {
                placed[c] = 1;
                tau.push_back(u);
                auto found = self(self);
                tau.pop_back();
                placed[c] = 0;
                if (found) return found;
            }
            for (auto it = saved.rbegin(); it != saved.rend(); ++it)
                run_state[static_cast<std::size_t>(it->first)] = it->second;
        }
        return std::nullopt;
    };

    std::sort(vs.begin(), vs.end());
    do {
        for (std::size_t i = 0; i < vs.size(); ++i) vpos[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);

        // Out-neighbourhoods of U vertices must be runs in the V order.
        bool runs = true;
        for (Vertex u : us) {
            int lo = 1 << 30, hi = -1, cnt = 0;
            for (Vertex w : g.out_neighbors(u)) {
                lo = std::min(lo, vpos[static_cast<std::size_t>(w)]);
                hi = std::max(hi, vpos[static_cast<std::size_t>(w)]);
                ++cnt;
            }
            if (require_intervals && cnt > 0 && hi - lo + 1 != cnt) runs = false;
        }
        if (!runs) continue;

        for (auto& row : before) std::fill(row.begin(), row.end(), 0);
        // Crossing V->U arcs a->b, c->d with a before c: d before b is only
        // allowed when a->d and c->b exist.
        for (const Arc& x : forward)
            for (const Arc& y : forward)
                if (vpos[static_cast<std::size_t>(x.tail)] < vpos[static_cast<std::size_t>(y.tail)] &&
                    x.head != y.head && !(adj(x.tail, y.head) && adj(y.tail, x.head)))
                    before[static_cast<std::size_t>(upos_of[static_cast<std::size_t>(x.head)])]
                          [static_cast<std::size_t>(upos_of[static_cast<std::size_t>(y.head)])] = 1;
        // Crossing U->V arcs u->v, u'->v' with v' before v: u before u' is
        // only allowed when u->v' and u'->v exist.
        for (const Arc& x : backward)
            for (const Arc& y : backward)
                if (x.tail != y.tail &&
                    vpos[static_cast<std::size_t>(y.head)] < vpos[static_cast<std::size_t>(x.head)] &&
                    !(adj(x.tail, y.head) && adj(y.tail, x.head)))
                    before[static_cast<std::size_t>(upos_of[static_cast<std::size_t>(y.tail)])]
                          [static_cast<std::size_t>(upos_of[static_cast<std::size_t>(x.tail)])] = 1;

        std::fill(run_state.begin(), run_state.end(), 0);
        if (auto found = dfs(dfs)) return found;
    } while (std::next_permutation(vs.begin(), vs.end()));
    return std::nullopt;
}

/// Whether every V vertex dominates every U vertex (view = forward) or the
/// reverse (view = backward).
inline bool side_view_complete(const BipartitionedDigraph& h, SideView view) {
    const Side from = view == SideView::forward ? Side::V : Side::U;
    for (Vertex a : h.side_vertices(from))
        for (Vertex b : h.side_vertices(opposite(from)))
            if (!h.graph().has_arc(a, b)) return false;
    return true;
}

/// A k-Min-Max ordering (k = 2 or 4) of a connected semicomplete bipartite
/// digraph, or nullopt if h contains a member of the forbidden family.
/// Arc-free inputs get the trivial ordering (V side, U side).
///
/// An ordering that also admits interval tables is preferred. Strong
/// targets always have one. Some non-strong targets have none at all; for
/// those a plain validated ordering is returned and the solver falls back
/// to implication bounds (see implication_table).
///
/// Recipes, each validated before acceptance: extension classes when h
/// contains an induced directed 4-cycle; otherwise a lifted degree order of
/// H<- (when UN(H->) is complete) or of H-> (when UN(H<-) is complete); the
/// degree order of h; finally the exhaustive search. Throws
/// InconsistencyError if nothing is found although no forbidden witness
/// exists.
inline std::optional<KMinMaxOrdering> construct_ordering(const BipartitionedDigraph& h,
                                                         std::uint64_t search_budget = 50'000'000) {
    const Digraph& g = h.graph();
    if (g.arc_count() == 0) return KMinMaxOrdering{2, {h.side_vertices(Side::V), h.side_vertices(Side::U)}};
    if (detect_forbidden(h)) return std::nullopt;

    auto accept = [&](const KMinMaxOrdering& o) { return validate_k_min_max(g, o) && has_interval_table(g, o); };

    if (find_induced_subdigraph(directed_cycle(4), g)) {
        auto ord = decompose_c4_extension(h);
        if (!ord || !accept(*ord))
            throw InconsistencyError(
                "no forbidden subdigraph and an induced directed 4-cycle, but not an extension of it");
        return ord;
    }

    if (side_view_complete(h, SideView::forward)) {
        auto lifted = order_by_degrees({arc_subdigraph(h, SideView::backward), h.sides()});
        if (accept(lifted)) return lifted;
    }
    if (side_view_complete(h, SideView::backward)) {
        auto lifted = order_by_degrees({arc_subdigraph(h, SideView::forward), h.sides()});
        if (accept(lifted)) return lifted;
    }
    if (auto by_degree = order_by_degrees(h); accept(by_degree)) return by_degree;
    if (auto found = search_two_class_ordering(h, accept, search_budget)) return found;

    auto valid = [&](const KMinMaxOrdering& o) { return validate_k_min_max(g, o); };
    if (auto found = search_two_class_ordering(h, valid, search_budget, false)) return found;

    throw InconsistencyError("no forbidden subdigraph, yet no 2-Min-Max ordering exists");
}

}  // namespace minhom
