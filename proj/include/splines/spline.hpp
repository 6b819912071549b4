#pragma once

#include "splines/arith.hpp"
#include "splines/graph.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace splines {

/// Vertex labeling; values()[i] is the label on vertex v_{i+1}.
/// Entries may be negative: splines form a module over all of Z.
class Spline {
public:
    Spline() = default;
    explicit Spline(std::vector<Integer> values) : values_(std::move(values)) {}
    Spline(std::initializer_list<long> values);

    static Spline zero(std::size_t n) { return Spline(std::vector<Integer>(n, Integer(0))); }
    static Spline constant(std::size_t n, const Integer& c) { return Spline(std::vector<Integer>(n, c)); }

    std::size_t size() const noexcept { return values_.size(); }
    const std::vector<Integer>& values() const noexcept { return values_; }

    /// 1-based access matching vertex numbering.
    const Integer& at(std::size_t vertex) const { return values_.at(vertex - 1); }

    bool is_zero() const;

    bool operator==(const Spline&) const = default;

    std::string to_string() const;

private:
    std::vector<Integer> values_;
};

/// First edge (canonical order) whose congruence fails. `edge` is 1-based.
struct Violation {
    std::size_t edge;
    std::size_t u;
    std::size_t v;
    Integer label;

    bool operator==(const Violation&) const = default;
};

struct Verdict {
    std::optional<Violation> violation;

    bool valid() const noexcept { return !violation.has_value(); }
    static Verdict ok() { return {}; }
};

/// Checks g_u = g_v (mod label) on every edge. Throws DomainError when the
/// spline length differs from the vertex count.
Verdict verify(const EdgeLabeledGraph& graph, const Spline& s);

Spline add(const Spline& a, const Spline& b);
Spline scale(const Integer& c, const Spline& s);

/// a - c*b, the peel step used by decompositions.
Spline subtract_multiple(const Spline& a, const Integer& c, const Spline& b);

} // namespace splines
