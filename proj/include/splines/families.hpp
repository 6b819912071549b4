#pragma once

#include "splines/arith.hpp"
#include "splines/graph.hpp"
#include "splines/spline.hpp"

#include <optional>
#include <span>
#include <vector>

namespace splines {

/// Least nonnegative center value and the lcm of the star's labels.
using CenterSolution = CrtSolution;

/// Solves x = leaves[i] (mod labels[i]) for the center of a star.
/// Solvable iff leaves[i] = leaves[j] (mod gcd(labels[i], labels[j])) for
/// every pair; a single global gcd is not sufficient.
std::optional<CenterSolution> star_center(std::span<const Integer> labels, std::span<const Integer> leaves);

/// Rim cycle congruences, then hub against each spoke. Same verdict
/// (including the reported edge) as verify() on the wheel.
Verdict wheel_verify(const EdgeLabeledGraph& wheel, const Spline& s);

/// Hub residue class for a rim spline, or empty when no hub value works.
std::optional<CenterSolution> wheel_extend(std::span<const Integer> rim_labels, std::span<const Integer> spoke_labels,
                                           const Spline& rim_spline);

/// Triangle congruences, then each added star's apex against its leaves.
Verdict complete_verify(const EdgeLabeledGraph& complete, const Spline& s);

struct CompleteExtension {
    EdgeLabeledGraph graph;
    Spline spline;
    CenterSolution center;
};

/// Adds vertex v_{n+1} joined to every existing vertex with new_star_labels
/// and gives it the least nonnegative admissible value.
std::optional<CompleteExtension> complete_extend(const EdgeLabeledGraph& complete, const Spline& s,
                                                 std::span<const Integer> new_star_labels);

} // namespace splines
