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
#include <queue>
#include <vector>

#include "minhom/error.hpp"

namespace minhom {

/// Integer s-t flow network solved with Dinic's algorithm. Arcs added with
/// add_infinite_arc are never saturated; a network whose source reaches the
/// sink along infinite arcs alone has no finite cut.
class FlowNetwork {
 public:
    using Capacity = std::int64_t;

    explicit FlowNetwork(std::size_t nodes = 0) : adj_(nodes) {}

    int add_node() {
        adj_.emplace_back();
        return static_cast<int>(adj_.size() - 1);
    }
    std::size_t node_count() const { return adj_.size(); }
    std::size_t arc_count() const { return edges_.size() / 2; }
    Capacity finite_capacity_total() const { return finite_total_; }

    void add_arc(int from, int to, Capacity cap) {
        if (cap < 0) throw InputError("negative arc capacity");
        if (__builtin_add_overflow(finite_total_, cap, &finite_total_))
            throw OverflowError("total finite capacity exceeds 64 bits");
        push_edge(from, to, cap, false);
    }
    void add_infinite_arc(int from, int to) { push_edge(from, to, 0, true); }

    /// Maximum flow value from s to t, or nullopt if some s-t path uses only
    /// infinite arcs. May be called once per network.
    std::optional<Capacity> max_flow(int s, int t) {
        source_ = s;
        if (s == t || infinite_path(s, t)) return std::nullopt;
        Capacity total = 0;
        level_.assign(adj_.size(), -1);
        iter_.assign(adj_.size(), 0);
        while (bfs(s, t)) {
            std::fill(iter_.begin(), iter_.end(), 0);
            total += blocking_flow(s, t);
        }
        solved_ = true;
        return total;
    }

    /// Nodes reachable from the source in the residual network after
    /// max_flow; the source side of a minimum cut.
    std::vector<char> source_side() const {
        if (!solved_) throw InconsistencyError("source_side requested before a finite max_flow");
        std::vector<char> seen(adj_.size(), 0);
        std::vector<int> stack{source_};
        seen[static_cast<std::size_t>(source_)] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int e : adj_[static_cast<std::size_t>(u)]) {
                const int v = edges_[static_cast<std::size_t>(e)].to;
                if (!seen[static_cast<std::size_t>(v)] && residual(e) > 0) {
                    seen[static_cast<std::size_t>(v)] = 1;
                    stack.push_back(v);
                }
            }
        }
        return seen;
    }

 private:
    static constexpr Capacity kUnbounded = std::numeric_limits<Capacity>::max();

    struct Edge {
        int to;
        Capacity cap;
        Capacity flow;
        bool infinite;
    };

    void push_edge(int from, int to, Capacity cap, bool infinite) {
        const auto n = static_cast<int>(adj_.size());
        if (from < 0 || to < 0 || from >= n || to >= n) throw InputError("flow arc endpoint out of range");
        adj_[static_cast<std::size_t>(from)].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({to, cap, 0, infinite});
        adj_[static_cast<std::size_t>(to)].push_back(static_cast<int>(edges_.size()));
        edges_.push_back({from, 0, 0, false});
    }

    // Edge e ^ 1 is the reverse of e.
    Capacity residual(int e) const {
        const Edge& ed = edges_[static_cast<std::size_t>(e)];
        if (ed.infinite) return kUnbounded;
        return ed.cap - ed.flow;
    }

    bool infinite_path(int s, int t) const {
        std::vector<char> seen(adj_.size(), 0);
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            if (u == t) return true;
            for (int e : adj_[static_cast<std::size_t>(u)]) {
                const Edge& ed = edges_[static_cast<std::size_t>(e)];
                if (ed.infinite && !seen[static_cast<std::size_t>(ed.to)]) {
                    seen[static_cast<std::size_t>(ed.to)] = 1;
                    stack.push_back(ed.to);
                }
            }
        }
        return false;
    }

    bool bfs(int s, int t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[static_cast<std::size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int e : adj_[static_cast<std::size_t>(u)]) {
                const int v = edges_[static_cast<std::size_t>(e)].to;
                if (level_[static_cast<std::size_t>(v)] < 0 && residual(e) > 0) {
                    level_[static_cast<std::size_t>(v)] = level_[static_cast<std::size_t>(u)] + 1;
                    q.push(v);
                }
            }
        }
        return level_[static_cast<std::size_t>(t)] >= 0;
    }

    // Iterative DFS over the level graph, augmenting along each s-t path
    // found and retreating to the first saturated edge.
    Capacity blocking_flow(int s, int t) {
        Capacity pushed_total = 0;
        std::vector<int> path;
        int u = s;
        while (true) {
            if (u == t) {
                Capacity bottleneck = kUnbounded;
                for (int e : path) bottleneck = std::min(bottleneck, residual(e));
                if (bottleneck == kUnbounded) throw InconsistencyError("augmenting path of infinite arcs");
                std::size_t cut_at = path.size();
                for (std::size_t i = 0; i < path.size(); ++i) {
                    const int e = path[i];
                    edges_[static_cast<std::size_t>(e)].flow += bottleneck;
                    edges_[static_cast<std::size_t>(e ^ 1)].flow -= bottleneck;
                    if (cut_at == path.size() && residual(e) == 0) cut_at = i;
                }
                pushed_total += bottleneck;
                path.resize(cut_at);
                u = path.empty() ? s : edges_[static_cast<std::size_t>(path.back())].to;
                continue;
            }
            auto& it = iter_[static_cast<std::size_t>(u)];
            const auto& out = adj_[static_cast<std::size_t>(u)];
            bool advanced = false;
            for (; it < out.size(); ++it) {
                const int e = out[it];
                const int v = edges_[static_cast<std::size_t>(e)].to;
                if (residual(e) > 0 && level_[static_cast<std::size_t>(v)] == level_[static_cast<std::size_t>(u)] + 1) {
                    path.push_back(e);
                    u = v;
                    advanced = true;
                    break;
                }
            }
            if (advanced) continue;
            if (u == s) break;
            level_[static_cast<std::size_t>(u)] = -1;
            path.pop_back();
            u = path.empty() ? s : edges_[static_cast<std::size_t>(path.back())].to;
            ++iter_[static_cast<std::size_t>(u)];
        }
        return pushed_total;
    }

    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;
    std::vector<int> level_;
    std::vector<std::size_t> iter_;
    Capacity finite_total_ = 0;
    int source_ = 0;
    bool solved_ = false;
};

}  // namespace minhom
