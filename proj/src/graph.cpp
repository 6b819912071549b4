#include "splines/graph.hpp"

#include "splines/errors.hpp"

#include <set>
#include <string>
#include <utility>

namespace splines {

const char* family_name(Family f) noexcept {
    switch (f) {
    case Family::cycle: return "cycle";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::complete: return "complete";
    case Family::general: return "general";
    }
    return "unknown";
}

void require_labels(std::span<const Integer> labels, const char* what) {
    for (const auto& l : labels)
        if (l < 1)
            throw DomainError(std::string(what) + ": edge labels must be positive, got " + l.get_str());
}

EdgeLabeledGraph::EdgeLabeledGraph(std::size_t n, std::vector<Edge> edges, Family family, FamilyParams params)
    : vertex_count_(n), edges_(std::move(edges)), family_(family), params_(std::move(params)) {
    if (vertex_count_ < 1)
        throw DomainError("graph needs at least one vertex");
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (const auto& e : edges_) {
        if (e.u < 1 || e.u > vertex_count_ || e.v < 1 || e.v > vertex_count_)
            throw DomainError("edge endpoint out of range [1, " + std::to_string(vertex_count_) + "]");
        if (e.u == e.v)
            throw DomainError("self-loop at vertex " + std::to_string(e.u));
        if (e.label < 1)
            throw DomainError("edge labels must be positive, got " + e.label.get_str());
        if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second)
            throw DomainError("multiple edges between vertices " + std::to_string(e.u) + " and " +
                              std::to_string(e.v));
    }
}

EdgeLabeledGraph EdgeLabeledGraph::general(std::size_t vertex_count, std::vector<Edge> edges) {
    return EdgeLabeledGraph(vertex_count, std::move(edges), Family::general, GeneralParams{});
}

std::vector<std::size_t> EdgeLabeledGraph::incident_edges(std::size_t vertex) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].u == vertex || edges_[i].v == vertex)
            out.push_back(i);
    return out;
}

namespace {

void append_cycle_edges(std::vector<Edge>& edges, std::span<const Integer> labels) {
    const std::size_t n = labels.size();
    for (std::size_t i = 1; i < n; ++i)
        edges.push_back({i, i + 1, labels[i - 1]});
    edges.push_back({1, n, labels[n - 1]});
}

} // namespace

EdgeLabeledGraph make_cycle(std::vector<Integer> labels) {
    if (labels.size() < 3)
        throw DomainError("cycle needs at least 3 edges, got " + std::to_string(labels.size()));
    require_labels(labels, "make_cycle");
    std::vector<Edge> edges;
    append_cycle_edges(edges, labels);
    const std::size_t n = labels.size();
    return EdgeLabeledGraph(n, std::move(edges), Family::cycle, CycleParams{std::move(labels)});
}

EdgeLabeledGraph make_star(std::vector<Integer> labels) {
    if (labels.size() < 2)
        throw DomainError("star needs at least 2 edges, got " + std::to_string(labels.size()));
    require_labels(labels, "make_star");
    const std::size_t n = labels.size();
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= n; ++i)
        edges.push_back({i, n + 1, labels[i - 1]});
    return EdgeLabeledGraph(n + 1, std::move(edges), Family::star, StarParams{std::move(labels)});
}

EdgeLabeledGraph make_wheel(std::vector<Integer> rim, std::vector<Integer> spokes) {
    if (rim.size() < 3)
        throw DomainError("wheel rim needs at least 3 edges, got " + std::to_string(rim.size()));
    if (rim.size() != spokes.size())
        throw DomainError("wheel needs one spoke per rim vertex: " + std::to_string(rim.size()) + " rim vs " +
                          std::to_string(spokes.size()) + " spokes");
    require_labels(rim, "make_wheel");
    require_labels(spokes, "make_wheel");
    const std::size_t n = rim.size();
    std::vector<Edge> edges;
    append_cycle_edges(edges, rim);
    for (std::size_t i = 1; i <= n; ++i)
        edges.push_back({i, n + 1, spokes[i - 1]});
    return EdgeLabeledGraph(n + 1, std::move(edges), Family::wheel, WheelParams{std::move(rim), std::move(spokes)});
}

EdgeLabeledGraph make_complete(std::vector<Integer> c3, std::vector<std::vector<Integer>> stars) {
    if (c3.size() != 3)
        throw DomainError("complete graph base must be a triangle (3 labels), got " + std::to_string(c3.size()));
    require_labels(c3, "make_complete");
    std::vector<Edge> edges;
    append_cycle_edges(edges, c3);
    for (std::size_t j = 0; j < stars.size(); ++j) {
        const std::size_t size = 3 + j;
        if (stars[j].size() != size)
            throw DomainError("star " + std::to_string(j + 1) + " of complete graph needs " + std::to_string(size) +
                              " labels, got " + std::to_string(stars[j].size()));
        require_labels(stars[j], "make_complete");
        for (std::size_t v = 1; v <= size; ++v)
            edges.push_back({v, size + 1, stars[j][v - 1]});
    }
    const std::size_t n = 3 + stars.size();
    return EdgeLabeledGraph(n, std::move(edges), Family::complete, CompleteParams{std::move(c3), std::move(stars)});
}

} // namespace splines
