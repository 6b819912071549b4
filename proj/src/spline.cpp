#include "splines/spline.hpp"

#include "splines/errors.hpp"

#include <algorithm>

namespace splines {

Spline::Spline(std::initializer_list<long> values) {
    values_.reserve(values.size());
    for (long v : values)
        values_.emplace_back(v);
}

bool Spline::is_zero() const {
    return std::all_of(values_.begin(), values_.end(), [](const Integer& v) { return v == 0; });
}

std::string Spline::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i)
            out += ",";
        out += values_[i].get_str();
    }
    return out + ")";
}

Verdict verify(const EdgeLabeledGraph& graph, const Spline& s) {
    if (s.size() != graph.vertex_count())
        throw DomainError("spline has " + std::to_string(s.size()) + " entries but graph has " +
                          std::to_string(graph.vertex_count()) + " vertices");
    const auto& edges = graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (!congruent(s.at(e.u), s.at(e.v), e.label))
            return Verdict{Violation{i + 1, e.u, e.v, e.label}};
    }
    return Verdict::ok();
}

namespace {

void require_same_length(const Spline& a, const Spline& b) {
    if (a.size() != b.size())
        throw DomainError("spline length mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
}

} // namespace

Spline add(const Spline& a, const Spline& b) {
    require_same_length(a, b);
    std::vector<Integer> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a.values()[i] + b.values()[i];
    return Spline(std::move(out));
}

Spline scale(const Integer& c, const Spline& s) {
    std::vector<Integer> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        out[i] = c * s.values()[i];
    return Spline(std::move(out));
}

Spline subtract_multiple(const Spline& a, const Integer& c, const Spline& b) {
    require_same_length(a, b);
    std::vector<Integer> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] = a.values()[i] - c * b.values()[i];
    return Spline(std::move(out));
}

} // namespace splines
