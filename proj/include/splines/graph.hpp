#pragma once

#include "splines/arith.hpp"

#include <cstddef>
#include <variant>
#include <vector>

namespace splines {

/// Edge between 1-based vertices u and v, congruence modulus `label`.
struct Edge {
    std::size_t u;
    std::size_t v;
    Integer label;

    bool operator==(const Edge&) const = default;
};

enum class Family { cycle, star, wheel, complete, general };

const char* family_name(Family f) noexcept;

struct CycleParams {
    std::vector<Integer> labels;
    bool operator==(const CycleParams&) const = default;
};
struct StarParams {
    std::vector<Integer> labels;
    bool operator==(const StarParams&) const = default;
};
struct WheelParams {
    std::vector<Integer> rim;
    std::vector<Integer> spokes;
    bool operator==(const WheelParams&) const = default;
};
struct CompleteParams {
    std::vector<Integer> c3;
    std::vector<std::vector<Integer>> stars;
    bool operator==(const CompleteParams&) const = default;
};
struct GeneralParams {
    bool operator==(const GeneralParams&) const = default;
};

using FamilyParams = std::variant<CycleParams, StarParams, WheelParams, CompleteParams, GeneralParams>;

/// Immutable edge-labeled graph. Vertices are 1..vertex_count(); edges keep
/// the family's canonical order so violation reports are deterministic.
///
/// Numbering per family:
///   cycle    e_i = (v_i, v_{i+1}) for i < n, e_n = (v_1, v_n)
///   star     leaf v_i joined to center v_{n+1} by edge i
///   wheel    rim cycle edges first, then spoke i joining v_i to hub v_{n+1}
///   complete C_3 edges, then for each added star S_i the edges (v_j, v_{i+1}), j = 1..i
class EdgeLabeledGraph {
public:
    /// Arbitrary simple graph. Rejects self-loops, repeated vertex pairs,
    /// out-of-range endpoints and labels < 1.
    static EdgeLabeledGraph general(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    Family family() const noexcept { return family_; }
    const FamilyParams& params() const noexcept { return params_; }

    /// Edges incident to a 1-based vertex, as indices into edges().
    std::vector<std::size_t> incident_edges(std::size_t vertex) const;

    bool operator==(const EdgeLabeledGraph&) const = default;

private:
    EdgeLabeledGraph(std::size_t n, std::vector<Edge> edges, Family family, FamilyParams params);

    friend EdgeLabeledGraph make_cycle(std::vector<Integer> labels);
    friend EdgeLabeledGraph make_star(std::vector<Integer> labels);
    friend EdgeLabeledGraph make_wheel(std::vector<Integer> rim, std::vector<Integer> spokes);
    friend EdgeLabeledGraph make_complete(std::vector<Integer> c3, std::vector<std::vector<Integer>> stars);

    std::size_t vertex_count_;
    std::vector<Edge> edges_;
    Family family_;
    FamilyParams params_;
};

EdgeLabeledGraph make_cycle(std::vector<Integer> labels);
EdgeLabeledGraph make_star(std::vector<Integer> labels);
EdgeLabeledGraph make_wheel(std::vector<Integer> rim, std::vector<Integer> spokes);
EdgeLabeledGraph make_complete(std::vector<Integer> c3, std::vector<std::vector<Integer>> stars);

/// Throws DomainError unless every label is >= 1.
void require_labels(std::span<const Integer> labels, const char* what);

} // namespace splines
