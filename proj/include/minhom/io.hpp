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

// Text formats.
//
//   digraph <n>
//   sides <V|U> ... (optional, n entries)
//   <u> <v>          (one arc per line)
//
//   costs <nD> <nH>
//   <nH integers>    (nD rows)
//
//   parts <k>
//   <ids...>         (k rows, one part each)
//
// Lines whose first non-blank character is '#' and blank lines are ignored.

#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "minhom/digraph.hpp"
#include "minhom/error.hpp"
#include "minhom/solver.hpp"

namespace minhom {

struct ParsedDigraph {
    Digraph graph;
    std::optional<std::vector<Side>> sides;
};

namespace detail {

class LineReader {
 public:
    LineReader(std::istream& in, std::string source) : in_(in), source_(std::move(source)) {}

    // Next meaningful line split into tokens; false at end of input.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            const auto first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            std::istringstream ss(line);
            tokens.clear();
            for (std::string t; ss >> t;) tokens.push_back(t);
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError(source_ + ":" + std::to_string(line_no_) + ": " + what);
    }

    long long integer(const std::string& tok, long long lo, long long hi) const {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            fail("expected an integer, got '" + tok + "'");
        }
        if (used != tok.size()) fail("expected an integer, got '" + tok + "'");
        if (v < lo || v > hi) fail("value " + tok + " out of range");
        return v;
    }

 private:
    std::istream& in_;
    std::string source_;
    std::size_t line_no_ = 0;
};

constexpr long long kMaxVertices = 100'000'000;

}  // namespace detail

inline ParsedDigraph parse_digraph(std::istream& in, const std::string& source = "<digraph>") {
    detail::LineReader r(in, source);
    std::vector<std::string> tok;
    if (!r.next(tok) || tok.size() != 2 || tok[0] != "digraph") r.fail("expected 'digraph <n>'");
    const auto n = static_cast<std::size_t>(r.integer(tok[1], 0, detail::kMaxVertices));
    ParsedDigraph out;
    std::vector<Arc> arcs;
    bool first = true;
    while (r.next(tok)) {
        if (tok[0] == "sides") {
            if (!first) r.fail("'sides' must directly follow the header");
            if (tok.size() != n + 1) r.fail("'sides' needs exactly " + std::to_string(n) + " entries");
            std::vector<Side> sides;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (tok[i] == "V") sides.push_back(Side::V);
                else if (tok[i] == "U") sides.push_back(Side::U);
                else r.fail("side must be V or U, got '" + tok[i] + "'");
            }
            out.sides = std::move(sides);
        } else {
            if (tok.size() != 2) r.fail("expected '<u> <v>'");
            const auto hi = static_cast<long long>(n) - 1;
            arcs.push_back({static_cast<Vertex>(r.integer(tok[0], 0, hi)), static_cast<Vertex>(r.integer(tok[1], 0, hi))});
        }
        first = false;
    }
    try {
        out.graph = Digraph(n, std::move(arcs));
    } catch (const InputError& e) {
        throw InputError(source + ": " + e.what());
    }
    return out;
}

inline void write_digraph(std::ostream& out, const Digraph& g, const std::optional<std::vector<Side>>& sides = {}) {
    out << "digraph " << g.vertex_count() << '\n';
    if (sides) {
        out << "sides";
        for (Side s : *sides) out << ' ' << side_char(s);
        out << '\n';
    }
    for (const Arc& a : g.arcs()) out << a.tail << ' ' << a.head << '\n';
}

inline CostTable parse_costs(std::istream& in, const std::string& source = "<costs>") {
    detail::LineReader r(in, source);
    std::vector<std::string> tok;
    if (!r.next(tok) || tok.size() != 3 || tok[0] != "costs") r.fail("expected 'costs <nD> <nH>'");
    const auto rows = static_cast<std::size_t>(r.integer(tok[1], 0, detail::kMaxVertices));
    const auto cols = static_cast<std::size_t>(r.integer(tok[2], 0, detail::kMaxVertices));
    std::vector<Cost> data;
    data.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!r.next(tok)) r.fail("expected " + std::to_string(rows) + " cost rows");
        if (tok.size() != cols) r.fail("expected " + std::to_string(cols) + " costs in this row");
        for (const auto& t : tok) data.push_back(r.integer(t, 0, std::numeric_limits<long long>::max()));
    }
    if (r.next(tok)) r.fail("unexpected content after the cost rows");
    return CostTable(rows, cols, std::move(data));
}

inline void write_costs(std::ostream& out, const CostTable& c) {
    out << "costs " << c.rows() << ' ' << c.cols() << '\n';
    for (std::size_t u = 0; u < c.rows(); ++u) {
        for (std::size_t h = 0; h < c.cols(); ++h) {
            if (h) out << ' ';
            out << c(static_cast<Vertex>(u), static_cast<Vertex>(h));
        }
        out << '\n';
    }
}

inline std::vector<std::vector<Vertex>> parse_parts(std::istream& in, const std::string& source = "<parts>") {
    detail::LineReader r(in, source);
    std::vector<std::string> tok;
    if (!r.next(tok) || tok.size() != 2 || tok[0] != "parts") r.fail("expected 'parts <k>'");
    const auto k = static_cast<std::size_t>(r.integer(tok[1], 0, detail::kMaxVertices));
    std::vector<std::vector<Vertex>> parts;
    for (std::size_t i = 0; i < k; ++i) {
        if (!r.next(tok)) r.fail("expected " + std::to_string(k) + " part rows");
        std::vector<Vertex> part;
        for (const auto& t : tok) part.push_back(static_cast<Vertex>(r.integer(t, 0, detail::kMaxVertices)));
        parts.push_back(std::move(part));
    }
    if (r.next(tok)) r.fail("unexpected content after the part rows");
    return parts;
}

inline std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return in;
}

inline ParsedDigraph read_digraph_file(const std::string& path) {
    auto in = open_input(path);
    return parse_digraph(in, path);
}

inline CostTable read_costs_file(const std::string& path) {
    auto in = open_input(path);
    return parse_costs(in, path);
}

inline std::vector<std::vector<Vertex>> read_parts_file(const std::string& path) {
    auto in = open_input(path);
    return parse_parts(in, path);
}

/// Sides from the file, else a 2-colouring of UN(G).
inline BipartitionedDigraph as_bipartitioned(const ParsedDigraph& p) {
    if (p.sides) return BipartitionedDigraph(p.graph, *p.sides);
    auto sides = infer_sides(p.graph);
    if (!sides) throw InputError("digraph is not bipartite");
    return BipartitionedDigraph(p.graph, std::move(*sides));
}

}  // namespace minhom
