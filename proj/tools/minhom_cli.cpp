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

// minhom: classify targets, build orderings, solve and reduce instances.
//
// Exit codes: 0 success, 2 no homomorphism, 3 input error, 4 internal
// inconsistency.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "minhom/json_io.hpp"
#include "minhom/minhom.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNoHomomorphism = 2;
constexpr int kInputError = 3;
constexpr int kInconsistency = 4;

using namespace minhom;

void print_vertices(std::ostream& out, const std::vector<Vertex>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? " " : "") << vs[i];
}

void print_ordering(std::ostream& out, const KMinMaxOrdering& o) {
    out << "k=" << o.k;
    for (const auto& cls : o.classes) {
        out << " [";
        print_vertices(out, cls);
        out << "]";
    }
    out << "\n";
}

void print_witness(std::ostream& out, const ForbiddenWitness& w) {
    out << forbidden_kind_name(w.kind);
    if (w.side_view) out << " in " << side_view_name(*w.side_view);
    out << " on vertices ";
    print_vertices(out, w.vertices);
    out << "\n";
}

Classification classify_file(const std::string& h_file, const std::string& parts_file) {
    const ParsedDigraph h = read_digraph_file(h_file);
    if (!parts_file.empty()) return classify_multipartite(h.graph, read_parts_file(parts_file));
    return classify_bipartite(as_bipartitioned(h));
}

int cmd_classify(const std::string& h_file, const std::string& parts_file, const std::string& format) {
    const Classification c = classify_file(h_file, parts_file);
    if (format == "json") {
        std::cout << to_json(c).dump(2) << "\n";
        return kOk;
    }
    if (const auto* p = std::get_if<Polynomial>(&c)) {
        std::cout << "polynomial (" << p->structure << ")\n";
        for (std::size_t i = 0; i < p->orderings.size(); ++i) {
            std::cout << "component " << i << ": ";
            print_ordering(std::cout, p->orderings[i]);
        }
    } else {
        const auto& hard = std::get<NpHard>(c);
        std::cout << "np-hard: " << hard.reason << "\n";
        if (hard.witness) {
            std::cout << "witness: ";
            print_witness(std::cout, *hard.witness);
        }
    }
    return kOk;
}

int cmd_order(const std::string& h_file, bool json) {
    const BipartitionedDigraph h = as_bipartitioned(read_digraph_file(h_file));
    if (auto w = detect_forbidden(h)) {
        std::cerr << "target is NP-hard, no ordering: ";
        print_witness(std::cerr, *w);
        return kInputError;
    }
    if (weak_components(h.graph()).size() > 1 && h.graph().arc_count() > 0)
        throw InputError("target must be connected");
    const auto ord = construct_ordering(h);
    if (!ord) throw InconsistencyError("no ordering although no forbidden pattern was found");
    std::optional<IntervalTable> tbl;
    try {
        tbl = interval_table(h.graph(), *ord);
    } catch (const IntervalError& e) {
        std::cerr << "note: no interval tables (" << e.what() << "); solve uses implication bounds\n";
    }
    if (json) {
        auto j = to_json(*ord);
        j["L"] = tbl ? nlohmann::json(tbl->left) : nlohmann::json(nullptr);
        j["R"] = tbl ? nlohmann::json(tbl->right) : nlohmann::json(nullptr);
        std::cout << j.dump(2) << "\n";
        return kOk;
    }
    print_ordering(std::cout, *ord);
    if (!tbl) return kOk;
    for (std::size_t c = 0; c < ord->classes.size(); ++c)
        for (std::size_t i = 0; i < ord->classes[c].size(); ++i)
            std::cout << "class " << c << " pos " << i + 1 << " vertex " << ord->classes[c][i] << " L=" << tbl->left[c][i]
                      << " R=" << tbl->right[c][i] << "\n";
    return kOk;
}

// Ordering to solve with: C3 extensions for multipartite targets, else the
// bipartite constructor.
KMinMaxOrdering solving_ordering(const ParsedDigraph& h, const std::string& parts_file) {
    if (!parts_file.empty()) {
        const Classification c = classify_multipartite(h.graph, read_parts_file(parts_file));
        const auto* p = std::get_if<Polynomial>(&c);
        if (!p) throw InputError("target is NP-hard: " + std::get<NpHard>(c).reason);
        if (p->orderings.size() != 1)
            throw InputError("no solver for " + p->structure + " targets; classification only");
        return p->orderings.front();
    }
    const BipartitionedDigraph hb = as_bipartitioned(h);
    if (auto w = detect_forbidden(hb))
        throw InputError(std::string("target is NP-hard: contains ") + forbidden_kind_name(w->kind));
    const auto ord = construct_ordering(hb);
    if (!ord) throw InconsistencyError("no ordering although no forbidden pattern was found");
    return *ord;
}

void print_assignment(const std::vector<Vertex>& map) {
    for (std::size_t x = 0; x < map.size(); ++x) std::cout << x << " -> " << map[x] << "\n";
}

int cmd_solve(const std::string& h_file, const std::string& d_file, const std::string& c_file,
              const std::string& parts_file, bool json) {
    const ParsedDigraph h = read_digraph_file(h_file);
    const ParsedDigraph d = read_digraph_file(d_file);
    const CostTable costs = read_costs_file(c_file);
    check_dimensions(d.graph, costs, h.graph);
    const KMinMaxOrdering ord = solving_ordering(h, parts_file);
    const auto sol = solve_minhom(d.graph, costs, h.graph, ord);
    if (json) {
        nlohmann::json j = sol ? to_json(*sol) : nlohmann::json{{"cost", nullptr}};
        j["homomorphism"] = sol.has_value();
        j["ordering"] = to_json(ord);
        std::cout << j.dump(2) << "\n";
    } else if (sol) {
        std::cout << "cost " << sol->cost << "\n";
        print_assignment(sol->map);
    } else {
        std::cout << "no homomorphism\n";
    }
    return sol ? kOk : kNoHomomorphism;
}

int cmd_oracle(const std::string& h_file, const std::string& d_file, const std::string& c_file,
               std::uint64_t budget, bool json) {
    const ParsedDigraph h = read_digraph_file(h_file);
    const ParsedDigraph d = read_digraph_file(d_file);
    const CostTable costs = read_costs_file(c_file);
    OracleOptions opt;
    opt.budget = budget;
    const auto f = brute_force_minhom(d.graph, costs, h.graph, opt);
    if (json) {
        nlohmann::json j = f ? to_json(*f) : nlohmann::json{{"cost", nullptr}};
        j["homomorphism"] = f.has_value();
        std::cout << j.dump(2) << "\n";
    } else if (f) {
        std::cout << "cost " << f->cost << "\n";
        print_assignment(f->map);
    } else {
        std::cout << "no homomorphism\n";
    }
    return f ? kOk : kNoHomomorphism;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path.string() + "'");
    out << text;
}

int cmd_reduce(const std::string& gadget, const std::string& d_file, const std::string& out_dir) {
    const auto kind = parse_gadget(gadget);
    if (!kind) throw InputError("unknown gadget '" + gadget + "'");
    const ParsedDigraph d = read_digraph_file(d_file);
    const GadgetInstance g = reduce(*kind, d.graph);

    const std::filesystem::path dir(out_dir);
    std::filesystem::create_directories(dir);
    std::ostringstream target, dprime, costs;
    write_digraph(target, g.target, infer_sides(g.target));
    write_digraph(dprime, g.dprime);
    write_costs(costs, g.costs);
    write_file(dir / "target.txt", target.str());
    write_file(dir / "dprime.txt", dprime.str());
    write_file(dir / "costs.txt", costs.str());

    nlohmann::json manifest{{"gadget", gadget_name(*kind)},
                            {"target", "target.txt"},
                            {"dprime", "dprime.txt"},
                            {"costs", "costs.txt"},
                            {"original_vertices", g.original_vertices},
                            {"dprime_vertices", g.dprime.vertex_count()},
                            {"dprime_arcs", g.dprime.arc_count()}};
    write_file(dir / "manifest.json", manifest.dump(2) + "\n");
    std::cout << "wrote " << (dir / "manifest.json").string() << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum cost homomorphisms to semicomplete bipartite digraphs"};
    app.require_subcommand(1);

    std::string h_file, d_file, c_file, parts_file, format = "text", gadget, out_dir;
    bool json = false;
    std::uint64_t budget = OracleOptions{}.budget;

    auto* classify = app.add_subcommand("classify", "Decide whether MinHOM(H) is polynomial or NP-hard");
    classify->add_option("H", h_file, "target digraph file")->required();
    classify->add_option("--multipartite", parts_file, "parts file; classify as semicomplete multipartite");
    classify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* order = app.add_subcommand("order", "Print a k-Min-Max ordering and its interval tables");
    order->add_option("H", h_file, "target digraph file")->required();
    order->add_flag("--json", json, "JSON output");

    auto* solve = app.add_subcommand("solve", "Minimum cost homomorphism of D to H");
    solve->add_option("H", h_file, "target digraph file")->required();
    solve->add_option("D", d_file, "input digraph file")->required();
    solve->add_option("costs", c_file, "cost table file")->required();
    solve->add_option("--multipartite", parts_file, "parts file for a multipartite target");
    solve->add_flag("--json", json, "JSON output");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum cost homomorphism (small inputs)");
    oracle->add_option("H", h_file, "target digraph file")->required();
    oracle->add_option("D", d_file, "input digraph file")->required();
    oracle->add_option("costs", c_file, "cost table file")->required();
    oracle->add_option("--budget", budget, "search node budget");
    oracle->add_flag("--json", json, "JSON output");

    auto* red = app.add_subcommand("reduce", "Build an independent-set reduction instance");
    red->add_option("--gadget", gadget, "c4p, c4pp, hstar, n1 or n2")
        ->required()
        ->check(CLI::IsMember({"c4p", "c4pp", "hstar", "n1", "n2"}));
    red->add_option("D", d_file, "input digraph file")->required();
    red->add_option("-o,--out", out_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*classify) return cmd_classify(h_file, parts_file, format);
        if (*order) return cmd_order(h_file, json);
        if (*solve) return cmd_solve(h_file, d_file, c_file, parts_file, json);
        if (*oracle) return cmd_oracle(h_file, d_file, c_file, budget, json);
        if (*red) return cmd_reduce(gadget, d_file, out_dir);
    } catch (const InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return kInconsistency;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
