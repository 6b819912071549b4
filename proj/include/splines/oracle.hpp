#pragma once

#include "splines/arith.hpp"
#include "splines/cycle_basis.hpp"
#include "splines/graph.hpp"
#include "splines/spline.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace splines {

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

/// Every spline with entries in [0, bound), lexicographically sorted.
struct EnumerationReport {
    std::uint64_t bound = 0;
    std::vector<Spline> splines;
    std::uint64_t count = 0;
};

/// Depth-first search over v_1..v_n. Each vertex's constraints from
/// already-placed neighbours are merged by CRT into one residue class, so
/// only admissible values are ever visited. `budget` caps the number of
/// visited candidates; exceeding it throws ResourceError.
EnumerationReport enumerate_splines(const EdgeLabeledGraph& graph, std::uint64_t bound,
                                    std::uint64_t budget = kDefaultSearchBudget);

struct MinimalityVerdict {
    std::optional<Spline> counterexample;

    bool minimal() const noexcept { return !counterexample.has_value(); }
};

/// Looks for a flow-up class with the same k leading zeros, nonnegative
/// entries below `bound`, that is <= the candidate in every coordinate and
/// strictly below it in at least one. Returns the lexicographically first.
/// For k = 0 the competitors are the positive constant splines.
MinimalityVerdict minimality_scan(std::span<const Integer> labels, std::size_t k, const FlowUpClass& candidate,
                                  std::uint64_t bound, std::uint64_t budget = kDefaultSearchBudget);

struct SpanVerdict {
    std::uint64_t checked = 0;
    std::optional<Spline> failure;

    bool spanned() const noexcept { return !failure.has_value(); }
};

/// Decomposes every spline of enumerate_splines(cycle, bound) in the
/// flow-up basis; a failure is an inexact peel, a nonzero residual or a
/// recombination that does not reproduce the input.
SpanVerdict span_check(std::span<const Integer> labels, std::uint64_t bound,
                       std::uint64_t budget = kDefaultSearchBudget);

} // namespace splines
