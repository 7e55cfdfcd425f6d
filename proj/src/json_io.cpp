#include "rslab/json_io.hpp"

#include <stdexcept>

namespace rslab {

Json to_json(const LinkPattern& p) {
    return Json{{"n", p.n()}, {"match", p.match()}};
}

LinkPattern link_pattern_from_json(const Json& j) {
    return LinkPattern(j.at("n").get<int>(), j.at("match").get<std::vector<int>>());
}

Json to_json(const Asm& a) {
    return Json{{"n", a.n()}, {"rows", a.rows()}};
}

Asm asm_from_json(const Json& j) {
    return Asm(j.at("n").get<int>(), j.at("rows").get<std::vector<std::vector<int>>>());
}

Json edge_to_json(const Edge& e) {
    return Json::array({Json::array({e.r, e.c}),
                        e.horizontal ? Json::array({e.r, e.c + 1}) : Json::array({e.r + 1, e.c})});
}

Edge edge_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("edge: expected endpoint pair");
    const int r1 = j[0].at(0).get<int>(), c1 = j[0].at(1).get<int>();
    const int r2 = j[1].at(0).get<int>(), c2 = j[1].at(1).get<int>();
    if (r1 == r2 && c2 == c1 + 1) return Edge{r1, c1, true};
    if (c1 == c2 && r2 == r1 + 1) return Edge{r1, c1, false};
    if (r1 == r2 && c1 == c2 + 1) return Edge{r1, c2, true};
    if (c1 == c2 && r1 == r2 + 1) return Edge{r2, c1, false};
    throw std::invalid_argument("edge: endpoints are not grid-adjacent");
}

Json edges_to_json(const std::vector<Edge>& edges) {
    Json arr = Json::array();
    for (const Edge& e : edges) arr.push_back(edge_to_json(e));
    return arr;
}

std::vector<Edge> edges_from_json(const Json& j) {
    const Json& arr = j.is_object() && j.contains("edges") ? j.at("edges") : j;
    std::vector<Edge> out;
    for (const auto& item : arr) out.push_back(edge_from_json(item));
    return out;
}

Json to_json(const Fpl& f, bool with_edges) {
    Json j{{"n", f.n()}, {"asm", fpl_to_asm(f).rows()}};
    if (with_edges) j["edges"] = edges_to_json(f.edge_list());
    return j;
}

Fpl fpl_from_json(const Json& j) {
    const Asm a(j.at("n").get<int>(), j.at("asm").get<std::vector<std::vector<int>>>());
    return asm_to_fpl(a);
}

Json bigint_to_json(const BigInt& v) {
    static const BigInt kMaxExact = (BigInt(1) << 53);
    if (v >= -kMaxExact && v <= kMaxExact) return Json(static_cast<std::int64_t>(v));
    return Json(v.str());
}

Json to_json(const RsRecord& r) {
    Json details = Json::array();
    for (const auto& e : r.entries)
        details.push_back(Json{{"k", e.k},
                               {"psi", bigint_to_json(e.psi)},
                               {"count", e.fpl_count},
                               {"pass", e.pass}});
    return Json{{"n", r.n}, {"kind", "rs"}, {"pass", r.pass}, {"details", details}};
}

Json to_json(const HarmonicReport& r) {
    Json details = Json::array();
    for (const auto& e : r.entries)
        details.push_back(Json{{"k", e.k}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"pass", e.pass}});
    return Json{{"n", r.n}, {"kind", "harmonic"}, {"pass", r.pass}, {"details", details}};
}

Json to_json(const std::vector<SetEquinumeracyRecord>& records) {
    bool pass = true;
    Json details = Json::array();
    int n = 0;
    for (const auto& rec : records) {
        n = rec.n;
        if (!rec.pass) pass = false;
        Json d{{"k", rec.k}, {"size_a", rec.size_a}, {"size_b", rec.size_b}, {"pass", rec.pass}};
        if (!rec.set_a.empty() || !rec.set_b.empty()) {
            Json sa = Json::array(), sb = Json::array();
            for (const auto& [i, fi] : rec.set_a) sa.push_back(Json::array({i, fi}));
            for (const auto& [jj, gi] : rec.set_b) sb.push_back(Json::array({jj, gi}));
            d["set_a"] = sa;
            d["set_b"] = sb;
        }
        details.push_back(std::move(d));
    }
    return Json{{"n", n}, {"kind", "sets"}, {"pass", pass}, {"details", details}};
}

Json to_json(const RelationReport& r) {
    Json details = Json::array();
    for (const auto& c : r.checks)
        details.push_back(Json{{"relation", c.relation}, {"pass", c.pass}});
    return Json{{"n", r.n}, {"kind", "tl"}, {"pass", r.all_pass()}, {"details", details}};
}

Json to_json(const GyrationRecord& r) {
    Json details = Json::array();
    details.push_back(Json{{"direction", r.direction},
                           {"checked", r.checked},
                           {"failures", r.failures}});
    return Json{{"n", r.n}, {"kind", "gyration"}, {"pass", r.pass}, {"details", details}};
}

Json to_json(const CountingHistogram& h) {
    Json counts = Json::object();
    for (const auto& [key, cnt] : h.counts) counts[key] = cnt;
    Json ambiguous = Json::array();
    for (const auto& e : h.ambiguous) {
        Json cands = Json::array();
        for (const auto& c : e.candidates) cands.push_back(edges_to_json(c));
        ambiguous.push_back(Json{{"f", e.fpl_key}, {"i", e.i}, {"candidates", cands}});
    }
    Json not_found = Json::array();
    for (const auto& e : h.not_found)
        not_found.push_back(Json{{"f", e.fpl_key}, {"i", e.i}, {"limit_hit", e.limit_hit}});
    Json j{{"n", h.n},
           {"strategy", h.strategy},
           {"counts", counts},
           {"ambiguous", ambiguous},
           {"not_found", not_found},
           {"pass_2n_test", h.pass_2n}};
    if (!h.inconsistencies.empty()) {
        Json inc = Json::array();
        for (const auto& e : h.inconsistencies)
            inc.push_back(Json{{"f", e.fpl_key}, {"i", e.i}, {"detail", e.detail}});
        j["inconsistencies"] = inc;
    }
    return j;
}

Json to_json(const AuditReport& r) {
    Json collisions = Json::array();
    for (const auto& c : r.collisions) {
        Json inputs = Json::array();
        for (const auto& [fkey, i] : c.inputs) inputs.push_back(Json{{"f", fkey}, {"i", i}});
        collisions.push_back(Json{{"g", c.g_key}, {"j", c.j}, {"inputs", inputs}});
    }
    Json per_k = Json::array();
    for (const auto& pk : r.per_k)
        per_k.push_back(Json{{"k", pk.k},
                             {"resolved_inputs", pk.resolved_inputs},
                             {"size_b", pk.size_b},
                             {"match", pk.match}});
    return Json{{"n", r.n},
                {"strategy", r.strategy},
                {"resolved", r.resolved},
                {"ambiguous", r.ambiguous},
                {"not_found", r.not_found},
                {"injective", r.injective},
                {"collisions", collisions},
                {"join_condition_violations", r.join_condition_violations},
                {"e_i_condition_violations", r.e_i_condition_violations},
                {"e_j_condition_violations", r.e_j_condition_violations},
                {"per_k", per_k},
                {"strategy_canonical", r.strategy_canonical}};
}

} // namespace rslab
