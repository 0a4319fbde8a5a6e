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

#include <variant>

#include "json.hpp"
#include "minhom/classifier.hpp"
#include "minhom/forbidden.hpp"
#include "minhom/ordering.hpp"
#include "minhom/solver.hpp"

namespace minhom {

inline nlohmann::json to_json(const ForbiddenWitness& w) {
    nlohmann::json j{{"kind", forbidden_kind_name(w.kind)},
                     {"side_view", w.side_view ? side_view_name(*w.side_view) : "none"},
                     {"vertices", w.vertices}};
    if (w.cycle_length) j["cycle_length"] = *w.cycle_length;
    return j;
}

inline nlohmann::json to_json(const KMinMaxOrdering& o) {
    return nlohmann::json{{"k", o.k}, {"classes", o.classes}};
}

inline nlohmann::json to_json(const Classification& c) {
    if (const auto* p = std::get_if<Polynomial>(&c)) {
        nlohmann::json orderings = nlohmann::json::array();
        for (const auto& o : p->orderings) orderings.push_back(to_json(o));
        nlohmann::json j{{"verdict", "polynomial"}, {"structure", p->structure}, {"orderings", orderings}};
        if (!p->orderings.empty()) j["k"] = p->k();
        return j;
    }
    const auto& h = std::get<NpHard>(c);
    nlohmann::json j{{"verdict", "np-hard"}, {"reason", h.reason}};
    j["witness"] = h.witness ? to_json(*h.witness) : nlohmann::json(nullptr);
    return j;
}

inline nlohmann::json to_json(const MinHomSolution& s) {
    return nlohmann::json{{"cost", s.cost}, {"cut_weight", s.cut_weight}, {"M", s.big_m}, {"interval_tables", s.interval_tables}, {"assignment", s.map}};
}

inline nlohmann::json to_json(const Homomorphism& f) {
    return nlohmann::json{{"cost", f.cost}, {"assignment", f.map}};
}

}  // namespace minhom
