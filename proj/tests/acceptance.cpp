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


// Acceptance run: one PASS/FAIL line per criterion 1-7. Exit status is
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "minhom/minhom.hpp"
#include "test_support.hpp"

namespace minhom {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Report {
    int failed = 0;
    void line(int n, bool ok, const std::string& detail) {
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << detail << std::endl;
        if (!ok) ++failed;
    }
};

// Checks a criterion body, turning stray exceptions into a failure line.
template <class F>
void run(Report& rep, int n, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        rep.line(n, false, std::string("exception: ") + e.what());
    }
}

struct Solved {
    Cost cut_weight, big_m, cost;
    std::size_t n;
};

std::vector<Solved> criterion_1(Report& rep) {
    testing::Rng rng(20261);
    std::uniform_int_distribution<int> side(1, 3);
    const auto t0 = Clock::now();
    int instances = 0, mismatches = 0, without_tables = 0;
    std::vector<Solved> solved;
    while (instances < 600) {
        const int a = side(rng), b = side(rng);
        const auto h = testing::random_semicomplete_bipartite(rng, a, b);
        if (detect_forbidden(h)) continue;
        const auto ord = construct_ordering(h);
        const std::size_t n = 1 + static_cast<std::size_t>(instances % 8);
        const double density = 0.05 + 0.1 * (instances % 9);
        const Digraph d = instances % 2 ? testing::planted_digraph(rng, h.graph(), n, std::min(1.0, density + 0.2))
                                        : testing::random_digraph(rng, n, density);
        const CostTable costs = testing::random_costs(rng, n, h.graph().vertex_count(), 0, 9);
        const auto sol = solve_minhom(d, costs, h.graph(), *ord);
        const auto oracle = brute_force_minhom(d, costs, h.graph());
        ++instances;
        if (sol.has_value() != oracle.has_value() || (sol && sol->cost != oracle->cost)) {
            ++mismatches;
            continue;
        }
        if (sol) {
            without_tables += !sol->interval_tables;
            solved.push_back({sol->cut_weight, sol->big_m, sol->cost, n});
        }
    }
    const double secs = seconds_since(t0);
    std::ostringstream d1;
    d1 << instances << " instances, " << solved.size() << " with a homomorphism (" << without_tables
       << " on orderings without interval tables), " << mismatches << " mismatches, " << secs << " s";
    rep.line(1, mismatches == 0 && secs < 60, d1.str());
    return solved;
}

void criterion_4(Report& rep, const std::vector<Solved>& solved) {
    int bad = 0;
    for (const auto& s : solved)
        if (s.cut_weight - static_cast<Cost>(s.n) * s.big_m != s.cost) ++bad;
    std::ostringstream d4;
    d4 << solved.size() << " solved instances, " << bad << " violate weight - |V(D)|*M = cost";
    rep.line(4, bad == 0 && !solved.empty(), d4.str());
}

template <class F>
void for_each_small_target(F&& f) {
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b) {
            int limit = 1;
            for (int i = 0; i < a * b; ++i) limit *= 3;
            std::vector<int> st(static_cast<std::size_t>(a * b));
            for (int code = 0; code < limit; ++code) {
                int c = code;
                for (int& s : st) s = c % 3, c /= 3;
                f(testing::semicomplete_from_states(a, b, st));
            }
        }
}

void criterion_2(Report& rep) {
    const auto t0 = Clock::now();
    long total = 0, tractable = 0, disagreements = 0;
    for_each_small_target([&](const BipartitionedDigraph& h) {
        ++total;
        const bool none = !detect_forbidden(h);
        const bool ordered = testing::exhaustive_k_minmax(h.graph()).has_value();
        tractable += none;
        disagreements += none != ordered;
    });
    std::ostringstream d;
    d << total << " targets, " << tractable << " without forbidden patterns, " << disagreements
      << " disagreements with exhaustive ordering search, " << seconds_since(t0) << " s";
    rep.line(2, disagreements == 0, d.str());
}

std::size_t alpha_by_subsets(const Digraph& d) {
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << d.vertex_count()); ++mask) {
        bool ok = true;
        for (const Arc& a : d.arcs())
            if ((mask >> a.tail & 1) && (mask >> a.head & 1)) ok = false;
        if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return best;
}

void criterion_3(Report& rep) {
    testing::Rng rng(20263);
    const auto t0 = Clock::now();
    int checked = 0, wrong = 0;
    std::string where;
    for (GadgetKind k : kAllGadgets)
        for (int trial = 0; trial < 60; ++trial) {
            const Digraph d = testing::random_digraph(rng, 1 + static_cast<std::size_t>(trial % 7), 0.1 + 0.05 * (trial % 5));
            const auto g = reduce(k, d);
            ++checked;
            if (!verify_reduction(g, alpha_by_subsets(d))) {
                ++wrong;
                where = gadget_name(k);
            }
        }
    std::ostringstream det;
    det << checked << " reductions over 5 gadgets, " << wrong << " optima differ from |V(D)| - alpha";
    if (wrong) det << " (last: " << where << ")";
    det << ", " << seconds_since(t0) << " s";
    rep.line(3, wrong == 0, det.str());
}

// Tables checked from the definition, not through interval_table.
bool consecutive_and_monotone(const Digraph& h, const KMinMaxOrdering& ord) {
    for (int j = 0; j < ord.k; ++j) {
        const auto& nxt = ord.classes[static_cast<std::size_t>((j + 1) % ord.k)];
        int prev_l = -1, prev_r = -1;
        for (Vertex v : ord.classes[static_cast<std::size_t>(j)]) {
            std::vector<int> ps;
            for (std::size_t q = 0; q < nxt.size(); ++q)
                if (h.has_arc(v, nxt[q])) ps.push_back(static_cast<int>(q) + 1);
            int l = 0, r = 1;
            if (!ps.empty()) {
                if (ps.back() - ps.front() + 1 != static_cast<int>(ps.size())) return false;
                l = ps.front() - 1, r = ps.back() + 1;
            }
            if (l < prev_l || r < prev_r) return false;
            prev_l = l, prev_r = r;
        }
    }
    return true;
}

void criterion_5(Report& rep) {
    long tractable = 0, strong = 0, strong_ok = 0, lacking = 0, lacking_nonstrong = 0, lacking_none_exist = 0,
         disagree = 0;
    for_each_small_target([&](const BipartitionedDigraph& h) {
        const auto ord = construct_ordering(h);
        if (!ord) return;
        ++tractable;
        const bool is_strong = strong_components(h.graph()).size() == 1;
        const bool ok = consecutive_and_monotone(h.graph(), *ord);
        disagree += ok != has_interval_table(h.graph(), *ord);
        strong += is_strong;
        if (ok) {
            strong_ok += is_strong;
            return;
        }
        ++lacking;
        lacking_nonstrong += !is_strong;
        lacking_none_exist += !testing::exhaustive_k_minmax(h.graph(), [&](int k, const std::vector<std::vector<Vertex>>& c) {
            return consecutive_and_monotone(h.graph(), KMinMaxOrdering{k, c});
        });
    });
    std::ostringstream d;
    d << tractable << " tractable targets; strong: " << strong_ok << "/" << strong
      << " orderings have consecutive, monotone tables; " << lacking << " targets without tables ("
      << lacking_nonstrong << " non-strong, " << lacking_none_exist
      << " confirmed by exhaustive search to admit no such ordering at all)";
    if (disagree) d << "; interval_table disagrees with the definition on " << disagree;
    rep.line(5, lacking == 0 && disagree == 0, d.str());
}

void criterion_6(Report& rep) {
    testing::Rng rng(20266);
    const Digraph h = testing::c4_extension({3, 3, 3, 3});
    const auto ord = decompose_c4_extension({h, *infer_sides(h)});
    const std::size_t n = 10'000, m = 40'000;
    std::vector<int> level(n);
    std::vector<std::vector<Vertex>> by_level(4);
    std::uniform_int_distribution<int> lv(0, 3);
    for (std::size_t x = 0; x < n; ++x) {
        level[x] = lv(rng);
        by_level[static_cast<std::size_t>(level[x])].push_back(static_cast<Vertex>(x));
    }
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<Arc> arcs;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    while (arcs.size() < m) {
        const auto x = static_cast<Vertex>(pick(rng));
        const auto& next = by_level[static_cast<std::size_t>((level[static_cast<std::size_t>(x)] + 1) % 4)];
        const Vertex y = next[std::uniform_int_distribution<std::size_t>(0, next.size() - 1)(rng)];
        if (seen.insert({x, y}).second) arcs.push_back({x, y});
    }
    const Digraph d(n, arcs);
    const CostTable costs = testing::random_costs(rng, n, h.vertex_count());

    const auto t0 = Clock::now();
    const auto sol = solve_minhom(d, costs, h, *ord);
    const double secs = seconds_since(t0);
    bool ok = sol.has_value() && secs < 10.0;
    if (sol) ok = ok && is_homomorphism(d, h, sol->map) && sol->cut_weight - static_cast<Cost>(n) * sol->big_m == sol->cost;

    // Spot checks: 6 vertices grown from a random vertex along arcs.
    int spot_ok = 0;
    for (int s = 0; s < 20; ++s) {
        std::vector<Vertex> sub{static_cast<Vertex>(pick(rng))};
        std::set<Vertex> in(sub.begin(), sub.end());
        while (sub.size() < 6) {
            const Vertex from = sub[std::uniform_int_distribution<std::size_t>(0, sub.size() - 1)(rng)];
            std::vector<Vertex> nb(d.out_neighbors(from).begin(), d.out_neighbors(from).end());
            nb.insert(nb.end(), d.in_neighbors(from).begin(), d.in_neighbors(from).end());
            const Vertex y = nb[std::uniform_int_distribution<std::size_t>(0, nb.size() - 1)(rng)];
            if (in.insert(y).second) sub.push_back(y);
        }
        const Digraph ds = d.induced(sub);
        CostTable cs(6, h.vertex_count());
        for (std::size_t i = 0; i < 6; ++i)
            for (Vertex c = 0; static_cast<std::size_t>(c) < h.vertex_count(); ++c) cs.set(static_cast<Vertex>(i), c, costs(sub[i], c));
        const auto a = solve_minhom(ds, cs, h, *ord);
        const auto b = brute_force_minhom(ds, cs, h);
        if (a && b && a->cost == b->cost) ++spot_ok;
    }
    std::ostringstream det;
    det << "|V(D)| = " << n << ", |A(D)| = " << d.arc_count() << ", solved in " << secs << " s";
    if (sol) det << " (cost " << sol->cost << ")";
    det << "; " << spot_ok << "/20 six-vertex sub-instances match the oracle";
    rep.line(6, ok && spot_ok == 20, det.str());
}

void criterion_7(Report& rep) {
    const BipartitionedDigraph c4p(Digraph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}, {2, 0}}),
                                   {Side::V, Side::V, Side::U, Side::U});
    const auto a = classify_bipartite(c4p);
    const bool a_ok = !is_polynomial(a) && std::get<NpHard>(a).witness &&
                      std::get<NpHard>(a).witness->kind == ForbiddenKind::c4_prime;
    const auto b = classify_bipartite({directed_cycle(4), {Side::V, Side::U, Side::V, Side::U}});
    const bool b_ok = is_polynomial(b) && std::get<Polynomial>(b).k() == 4;
    const bool c_ok = is_polynomial(classify_multipartite(transitive_tournament(3), {{0}, {1}, {2}}));
    const bool d_ok = is_polynomial(classify_multipartite(directed_cycle(3), {{0}, {1}, {2}}));
    std::ostringstream det;
    det << "C4' np-hard " << (a_ok ? "yes" : "NO") << ", C4 polynomial k=4 " << (b_ok ? "yes" : "NO")
        << ", TT_3 polynomial " << (c_ok ? "yes" : "NO") << ", C3 polynomial " << (d_ok ? "yes" : "NO");
    rep.line(7, a_ok && b_ok && c_ok && d_ok, det.str());
}

}  // namespace
}  // namespace minhom

int main() {
    using namespace minhom;
    Report rep;
    std::vector<Solved> solved;
    run(rep, 1, [&] { solved = criterion_1(rep); });
    run(rep, 2, [&] { criterion_2(rep); });
    run(rep, 3, [&] { criterion_3(rep); });
    run(rep, 4, [&] { criterion_4(rep, solved); });
    run(rep, 5, [&] { criterion_5(rep); });
    run(rep, 6, [&] { criterion_6(rep); });
    run(rep, 7, [&] { criterion_7(rep); });
    std::cout << (rep.failed ? "acceptance: " + std::to_string(rep.failed) + " criterion line(s) failed" : std::string("acceptance: all criteria passed")) << std::endl;
    return rep.failed ? 1 : 0;
}
