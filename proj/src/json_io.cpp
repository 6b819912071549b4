#include "splines/json_io.hpp"

#include "splines/errors.hpp"

#include <set>
#include <string>

namespace splines::io {

json to_json(const Integer& value) {
    if (value >= -kMaxSafeInteger && value <= kMaxSafeInteger)
        return json(value.get_si());
    return json(value.get_str());
}

json to_json(std::span<const Integer> values) {
    json out = json::array();
    for (const auto& v : values)
        out.push_back(to_json(v));
    return out;
}

Integer integer_from_json(const json& j) {
    if (j.is_number_unsigned())
        return Integer(std::to_string(j.get<unsigned long long>()), 10);
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<long long>()), 10);
    if (j.is_string())
        return parse_integer(j.get<std::string>());
    throw UsageError("expected an integer, got " + j.dump());
}

std::vector<Integer> integers_from_json(const json& j) {
    if (!j.is_array())
        throw UsageError("expected an array of integers, got " + j.dump());
    std::vector<Integer> out;
    out.reserve(j.size());
    for (const auto& item : j)
        out.push_back(integer_from_json(item));
    return out;
}

namespace {

void require_object(const json& j, const char* what) {
    if (!j.is_object())
        throw UsageError(std::string(what) + " document must be a JSON object");
}

void require_fields(const json& j, std::initializer_list<const char*> allowed) {
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, _] : j.items())
        if (!ok.contains(key))
            throw UsageError("unknown field '" + key + "'");
    for (const auto* key : allowed)
        if (!j.contains(key))
            throw UsageError(std::string("missing field '") + key + "'");
}

std::size_t size_from_json(const json& j) {
    const Integer v = integer_from_json(j);
    if (v < 0 || !v.fits_ulong_p())
        throw UsageError("expected a vertex index, got " + j.dump());
    return v.get_ui();
}

} // namespace

EdgeLabeledGraph graph_from_json(const json& j) {
    require_object(j, "graph");
    if (!j.contains("family") || !j.at("family").is_string())
        throw UsageError("graph document needs a string 'family'");
    const auto family = j.at("family").get<std::string>();

    if (family == "cycle") {
        require_fields(j, {"family", "labels"});
        return make_cycle(integers_from_json(j.at("labels")));
    }
    if (family == "star") {
        require_fields(j, {"family", "labels"});
        return make_star(integers_from_json(j.at("labels")));
    }
    if (family == "wheel") {
        require_fields(j, {"family", "rim", "spokes"});
        return make_wheel(integers_from_json(j.at("rim")), integers_from_json(j.at("spokes")));
    }
    if (family == "complete") {
        require_fields(j, {"family", "c3", "stars"});
        if (!j.at("stars").is_array())
            throw UsageError("'stars' must be an array of label arrays");
        std::vector<std::vector<Integer>> stars;
        for (const auto& star : j.at("stars"))
            stars.push_back(integers_from_json(star));
        return make_complete(integers_from_json(j.at("c3")), std::move(stars));
    }
    if (family == "general") {
        require_fields(j, {"family", "vertices", "edges"});
        const std::size_t n = size_from_json(j.at("vertices"));
        if (!j.at("edges").is_array())
            throw UsageError("'edges' must be an array of [u,v,label] triples");
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 3)
                throw UsageError("edge must be [u,v,label], got " + e.dump());
            edges.push_back({size_from_json(e[0]), size_from_json(e[1]), integer_from_json(e[2])});
        }
        return EdgeLabeledGraph::general(n, std::move(edges));
    }
    throw UsageError("unknown graph family '" + family + "'");
}

json graph_to_json(const EdgeLabeledGraph& g) {
    json out;
    out["family"] = family_name(g.family());
    std::visit(
        [&](const auto& p) {
            using P = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<P, CycleParams> || std::is_same_v<P, StarParams>) {
                out["labels"] = to_json(p.labels);
            } else if constexpr (std::is_same_v<P, WheelParams>) {
                out["rim"] = to_json(p.rim);
                out["spokes"] = to_json(p.spokes);
            } else if constexpr (std::is_same_v<P, CompleteParams>) {
                out["c3"] = to_json(p.c3);
                out["stars"] = json::array();
                for (const auto& star : p.stars)
                    out["stars"].push_back(to_json(star));
            } else {
                out["vertices"] = g.vertex_count();
                out["edges"] = json::array();
                for (const auto& e : g.edges())
                    out["edges"].push_back(json::array({e.u, e.v, to_json(e.label)}));
            }
        },
        g.params());
    return out;
}

Spline spline_from_json(const json& j) {
    require_object(j, "spline");
    require_fields(j, {"values"});
    return Spline(integers_from_json(j.at("values")));
}

json spline_to_json(const Spline& s) { return json{{"values", to_json(s.values())}}; }

json verdict_to_json(const Verdict& v) {
    if (v.valid())
        return json{{"valid", true}};
    const auto& bad = *v.violation;
    return json{{"valid", false}, {"edge", bad.edge}, {"u", bad.u}, {"v", bad.v}, {"label", to_json(bad.label)}};
}

json basis_to_json(const FlowUpBasis& basis) {
    json rows = json::array();
    for (const auto& cls : basis.classes)
        rows.push_back(to_json(cls.spline.values()));
    return json{{"labels", to_json(basis.labels)}, {"basis", std::move(rows)}};
}

json decomposition_to_json(const DecompositionResult& d) {
    return json{{"coefficients", to_json(d.coefficients)}};
}

json enumeration_to_json(const EnumerationReport& report) {
    json rows = json::array();
    for (const auto& s : report.splines)
        rows.push_back(to_json(s.values()));
    return json{{"bound", report.bound}, {"count", report.count}, {"splines", std::move(rows)}};
}

json crt_to_json(const std::optional<CrtSolution>& solution, const char* value_key) {
    if (!solution)
        return json{{"solvable", false}};
    return json{{"solvable", true}, {value_key, to_json(solution->value)}, {"modulus", to_json(solution->modulus)}};
}

} // namespace splines::io
