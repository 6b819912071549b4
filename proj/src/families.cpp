#include "splines/families.hpp"

#include "splines/errors.hpp"

#include <string>

namespace splines {

std::optional<CenterSolution> star_center(std::span<const Integer> labels, std::span<const Integer> leaves) {
    if (labels.size() != leaves.size())
        throw DomainError("star has " + std::to_string(labels.size()) + " edges but " +
                          std::to_string(leaves.size()) + " leaf values");
    if (labels.size() < 2)
        throw DomainError("star needs at least 2 edges");
    require_labels(labels, "star_center");
    std::vector<Congruence> system;
    system.reserve(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i)
        system.emplace_back(leaves[i], labels[i]);
    return crt_system(system);
}

namespace {

Verdict check_edges(const std::vector<Edge>& edges, std::size_t first, std::size_t last, const Spline& s) {
    for (std::size_t i = first; i < last; ++i) {
        const auto& e = edges[i];
        if (!congruent(s.at(e.u), s.at(e.v), e.label))
            return Verdict{Violation{i + 1, e.u, e.v, e.label}};
    }
    return Verdict::ok();
}

void require_family(const EdgeLabeledGraph& g, Family f) {
    if (g.family() != f)
        throw DomainError(std::string("expected a ") + family_name(f) + " graph, got " + family_name(g.family()));
}

void require_length(const EdgeLabeledGraph& g, const Spline& s) {
    if (s.size() != g.vertex_count())
        throw DomainError("spline has " + std::to_string(s.size()) + " entries but graph has " +
                          std::to_string(g.vertex_count()) + " vertices");
}

} // namespace

Verdict wheel_verify(const EdgeLabeledGraph& wheel, const Spline& s) {
    require_family(wheel, Family::wheel);
    require_length(wheel, s);
    const auto& params = std::get<WheelParams>(wheel.params());
    const std::size_t n = params.rim.size();

    std::vector<Integer> rim(s.values().begin(), s.values().begin() + static_cast<std::ptrdiff_t>(n));
    if (auto rim_verdict = verify(make_cycle(params.rim), Spline(rim)); !rim_verdict.valid())
        return rim_verdict;
    // spokes: rim vertex i against the hub, edges n+1..2n
    return check_edges(wheel.edges(), n, 2 * n, s);
}

std::optional<CenterSolution> wheel_extend(std::span<const Integer> rim_labels, std::span<const Integer> spoke_labels,
                                           const Spline& rim_spline) {
    const auto rim = make_cycle({rim_labels.begin(), rim_labels.end()});
    if (spoke_labels.size() != rim_labels.size())
        throw DomainError("wheel needs one spoke per rim vertex");
    if (auto verdict = verify(rim, rim_spline); !verdict.valid())
        throw DomainError("rim labeling is not a spline: fails edge " + std::to_string(verdict.violation->edge));
    return star_center(spoke_labels, rim_spline.values());
}

Verdict complete_verify(const EdgeLabeledGraph& complete, const Spline& s) {
    require_family(complete, Family::complete);
    require_length(complete, s);
    const auto& params = std::get<CompleteParams>(complete.params());

    std::vector<Integer> tri(s.values().begin(), s.values().begin() + 3);
    if (auto verdict = verify(make_cycle(params.c3), Spline(tri)); !verdict.valid())
        return verdict;
    std::size_t offset = 3;
    for (const auto& star : params.stars) {
        if (auto verdict = check_edges(complete.edges(), offset, offset + star.size(), s); !verdict.valid())
            return verdict;
        offset += star.size();
    }
    return Verdict::ok();
}

std::optional<CompleteExtension> complete_extend(const EdgeLabeledGraph& complete, const Spline& s,
                                                 std::span<const Integer> new_star_labels) {
    require_family(complete, Family::complete);
    if (new_star_labels.size() != complete.vertex_count())
        throw DomainError("new vertex of K_" + std::to_string(complete.vertex_count() + 1) + " needs " +
                          std::to_string(complete.vertex_count()) + " edge labels, got " +
                          std::to_string(new_star_labels.size()));
    if (auto verdict = complete_verify(complete, s); !verdict.valid())
        throw DomainError("labeling is not a spline on the complete graph: fails edge " +
                          std::to_string(verdict.violation->edge));

    auto center = star_center(new_star_labels, s.values());
    if (!center)
        return std::nullopt;

    auto params = std::get<CompleteParams>(complete.params());
    params.stars.emplace_back(new_star_labels.begin(), new_star_labels.end());
    auto values = s.values();
    values.push_back(center->value);
    return CompleteExtension{make_complete(std::move(params.c3), std::move(params.stars)), Spline(std::move(values)),
                             std::move(*center)};
}

} // namespace splines
