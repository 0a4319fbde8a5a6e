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
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "minhom/digraph.hpp"
#include "minhom/error.hpp"
#include "minhom/solver.hpp"

namespace minhom {

struct OracleOptions {
    /// Maximum number of search nodes before BudgetExceeded.
    std::uint64_t budget = 200'000'000;
    /// Vertices searched directly. Components of D minus this set are
    /// solved separately for each assignment of their neighbours in it.
    /// Empty means all vertices.
    std::vector<Vertex> separator;
};

namespace detail {

class ExhaustiveMinHom {
 public:
    ExhaustiveMinHom(const Digraph& d, const CostTable& costs, const Digraph& h, const OracleOptions& opt)
        : d_(d), costs_(costs), h_(h), adj_(h), budget_(opt.budget), nh_(h.vertex_count()) {
        const std::size_t n = d.vertex_count();
        in_sep_.assign(n, 0);
        if (opt.separator.empty()) {
            for (std::size_t x = 0; x < n; ++x) in_sep_[x] = 1;
        } else {
            for (Vertex x : opt.separator) {
                if (x < 0 || static_cast<std::size_t>(x) >= n) throw InputError("separator vertex out of range");
                in_sep_[static_cast<std::size_t>(x)] = 1;
            }
        }
        order_separator();
        split_components();
    }

    std::optional<Homomorphism> run() {
        const std::size_t n = d_.vertex_count();
        f_.assign(n, -1);
        best_cost_ = kNone;
        Cost base = 0;
        for (auto& comp : comps_)
            if (comp.boundary.empty()) {
                const Cost c = comp_value(comp);
                if (c == kNone) return std::nullopt;
                base += c;
            }
        search(0, base);
        if (best_cost_ == kNone) return std::nullopt;
        // Re-expand the components under the best separator assignment.
        f_ = best_;
        for (auto& comp : comps_) {
            comp_value(comp);
            const auto& inner = comp.best_inner.at(boundary_key(comp));
            for (std::size_t i = 0; i < comp.inner.size(); ++i) f_[static_cast<std::size_t>(comp.inner[i])] = inner[i];
        }
        Homomorphism out{f_, homomorphism_cost(costs_, f_)};
        if (out.cost != best_cost_ || !is_homomorphism(d_, h_, out.map))
            throw InconsistencyError("oracle reconstruction disagrees with its search");
        return out;
    }

 private:
    static constexpr Cost kNone = std::numeric_limits<Cost>::max();

    struct Component {
        std::vector<Vertex> inner;     // search order
        std::vector<Vertex> boundary;  // separator neighbours, ascending
        std::unordered_map<std::uint64_t, Cost> value;
        std::unordered_map<std::uint64_t, std::vector<Vertex>> best_inner;
    };

    void tick() {
        if (++nodes_ > budget_) throw BudgetExceeded("oracle search exceeded its node budget");
    }

    // Separator vertices in BFS order over D so arc checks prune early.
    void order_separator() {
        const std::size_t n = d_.vertex_count();
        std::vector<char> seen(n, 0);
        for (std::size_t r = 0; r < n; ++r) {
            if (!in_sep_[r] || seen[r]) continue;
            std::vector<Vertex> queue{static_cast<Vertex>(r)};
            seen[r] = 1;
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                const Vertex x = queue[qi];
                sep_order_.push_back(x);
                auto visit = [&](Vertex y) {
                    if (in_sep_[static_cast<std::size_t>(y)] && !seen[static_cast<std::size_t>(y)]) {
                        seen[static_cast<std::size_t>(y)] = 1;
                        queue.push_back(y);
                    }
                };
                for (Vertex y : d_.out_neighbors(x)) visit(y);
                for (Vertex y : d_.in_neighbors(x)) visit(y);
            }
        }
        min_cost_suffix_.assign(sep_order_.size() + 1, 0);
        for (std::size_t i = sep_order_.size(); i-- > 0;) {
            Cost lo = kNone;
            for (std::size_t c = 0; c < nh_; ++c) lo = std::min(lo, costs_(sep_order_[i], static_cast<Vertex>(c)));
            if (nh_ == 0) lo = 0;
            min_cost_suffix_[i] = min_cost_suffix_[i + 1] + lo;
        }
    }

    void split_components() {
        const std::size_t n = d_.vertex_count();
        std::vector<int> comp_of(n, -1);
        std::vector<int> sep_index(n, -1);
        for (std::size_t i = 0; i < sep_order_.size(); ++i) sep_index[static_cast<std::size_t>(sep_order_[i])] = static_cast<int>(i);
        closes_at_.assign(sep_order_.size(), {});
        for (std::size_t r = 0; r < n; ++r) {
            if (in_sep_[r] || comp_of[r] >= 0) continue;
            Component comp;
            std::vector<char> is_boundary(n, 0);
            std::vector<Vertex> queue{static_cast<Vertex>(r)};
            comp_of[r] = static_cast<int>(comps_.size());
            for (std::size_t qi = 0; qi < queue.size(); ++qi) {
                const Vertex x = queue[qi];
                comp.inner.push_back(x);
                auto visit = [&](Vertex y) {
                    const auto uy = static_cast<std::size_t>(y);
                    if (in_sep_[uy]) {
                        if (!is_boundary[uy]) is_boundary[uy] = 1, comp.boundary.push_back(y);
                    } else if (comp_of[uy] < 0) {
                        comp_of[uy] = static_cast<int>(comps_.size());
                        queue.push_back(y);
                    }
                };
                for (Vertex y : d_.out_neighbors(x)) visit(y);
                for (Vertex y : d_.in_neighbors(x)) visit(y);
            }
            std::sort(comp.boundary.begin(), comp.boundary.end());
            if (!comp.boundary.empty()) {
                int last = 0;
                for (Vertex b : comp.boundary) last = std::max(last, sep_index[static_cast<std::size_t>(b)]);
                closes_at_[static_cast<std::size_t>(last)].push_back(comps_.size());
            }
            comps_.push_back(std::move(comp));
        }
    }

    std::uint64_t boundary_key(const Component& comp) const {
        std::uint64_t key = 0;
        for (Vertex b : comp.boundary) key = key * nh_ + static_cast<std::uint64_t>(f_[static_cast<std::size_t>(b)]);
        return key;
    }

    bool consistent(Vertex x, Vertex c) const {
        for (Vertex y : d_.out_neighbors(x)) {
            const Vertex fy = f_[static_cast<std::size_t>(y)];
            if (fy >= 0 && !adj_(c, fy)) return false;
        }
        for (Vertex y : d_.in_neighbors(x)) {
            const Vertex fy = f_[static_cast<std::size_t>(y)];
            if (fy >= 0 && !adj_(fy, c)) return false;
        }
        return true;
    }

    // Cheapest completion of `comp` given the current boundary colours.
    Cost comp_value(Component& comp) {
        const std::uint64_t key = boundary_key(comp);
        if (auto it = comp.value.find(key); it != comp.value.end()) return it->second;
        Cost best = kNone;
        std::vector<Vertex> best_inner;
        auto rec = [&](auto&& self, std::size_t i, Cost acc) -> void {
            tick();
            if (best != kNone && acc >= best) return;
            if (i == comp.inner.size()) {
                best = acc;
                best_inner.clear();
                for (Vertex x : comp.inner) best_inner.push_back(f_[static_cast<std::size_t>(x)]);
                return;
            }
            const Vertex x = comp.inner[i];
            for (std::size_t c = 0; c < nh_; ++c) {
                const auto cv = static_cast<Vertex>(c);
                if (!consistent(x, cv)) continue;
                f_[static_cast<std::size_t>(x)] = cv;
                self(self, i + 1, acc + costs_(x, cv));
                f_[static_cast<std::size_t>(x)] = -1;
            }
        };
        rec(rec, 0, 0);
        comp.value.emplace(key, best);
        if (best != kNone) comp.best_inner.emplace(key, std::move(best_inner));
        return best;
    }

    void search(std::size_t i, Cost acc) {
        tick();
        if (best_cost_ != kNone && acc + min_cost_suffix_[i] >= best_cost_) return;
        if (i == sep_order_.size()) {
            best_cost_ = acc;
            best_ = f_;
            return;
        }
        const Vertex x = sep_order_[i];
        for (std::size_t c = 0; c < nh_; ++c) {
            const auto cv = static_cast<Vertex>(c);
            if (!consistent(x, cv)) continue;
            f_[static_cast<std::size_t>(x)] = cv;
            Cost next = acc + costs_(x, cv);
            bool feasible = true;
            for (std::size_t ci : closes_at_[i]) {
                const Cost v = comp_value(comps_[ci]);
                if (v == kNone) {
                    feasible = false;
                    break;
                }
                next += v;
            }
            if (feasible) search(i + 1, next);
            f_[static_cast<std::size_t>(x)] = -1;
        }
    }

    const Digraph& d_;
    const CostTable& costs_;
    const Digraph& h_;
    AdjacencyMatrix adj_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::size_t nh_;
    std::vector<char> in_sep_;
    std::vector<Vertex> sep_order_;
    std::vector<Cost> min_cost_suffix_;
    std::vector<Component> comps_;
    std::vector<std::vector<std::size_t>> closes_at_;
    std::vector<Vertex> f_;
    std::vector<Vertex> best_;
    Cost best_cost_ = kNone;
};

}  // namespace detail

/// Exhaustive minimum-cost homomorphism D -> H, independent of any ordering
/// of H. Intended as a verification oracle for small instances.
inline std::optional<Homomorphism> brute_force_minhom(const Digraph& d, const CostTable& costs, const Digraph& h,
                                                      const OracleOptions& options = {}) {
    check_dimensions(d, costs, h);
    return detail::ExhaustiveMinHom(d, costs, h, options).run();
}

}  // namespace minhom
