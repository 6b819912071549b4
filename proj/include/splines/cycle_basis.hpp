#pragma once

#include "splines/arith.hpp"
#include "splines/spline.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <shared_mutex>
#include <span>
#include <vector>

namespace splines {

/// Flow-up class with k leading zeros on a cycle. For k = 0 it is a
/// multiple of the all-ones spline; for k >= 1 entry k+1 is nonzero.
struct FlowUpClass {
    std::size_t k;
    Spline spline;

    /// Entry at vertex k+1.
    const Integer& leading() const { return spline.at(k + 1); }

    bool operator==(const FlowUpClass&) const = default;
};

/// Smallest flow-up classes G_0..G_{n-1}, position == leading-zero count.
struct FlowUpBasis {
    std::vector<Integer> labels;
    std::vector<FlowUpClass> classes;

    std::size_t size() const noexcept { return classes.size(); }
    const FlowUpClass& operator[](std::size_t k) const { return classes.at(k); }
};

struct DecompositionResult {
    std::vector<Integer> coefficients;

    bool operator==(const DecompositionResult&) const = default;
};

/// Labels and a spline on the cycle they describe.
struct CycleSpline {
    std::vector<Integer> labels;
    Spline spline;

    bool operator==(const CycleSpline&) const = default;
};

/// Throws DomainError unless there are >= 3 labels, all >= 1.
void require_cycle_labels(std::span<const Integer> labels);

/// gcd(l_i, ..., l_n) for i = 1..n, returned 0-based (index i-1).
std::vector<Integer> suffix_gcds(std::span<const Integer> labels);

/// Number of leading zero entries of s.
std::size_t leading_zeros(const Spline& s);

/// lcm(l_k, gcd(l_{k+1}, ..., l_n)) for 1 <= k <= n-1: the least positive
/// value at vertex k+1 of any spline with k leading zeros. Every such
/// spline's entry at k+1 is a multiple of it.
Integer smallest_leading_entry(std::span<const Integer> labels, std::size_t k);

/// Greedy construction. k = 0 gives (1, ..., 1). For k >= 1 vertex k+1
/// gets the smallest leading entry and each later vertex i the least
/// nonnegative x with x = g_{i-1} (mod l_{i-1}) and x = 0 (mod gcd(l_i..l_n)).
/// The second congruence is exactly the condition for the remaining path
/// back to v_1 to close, so the walk never dead-ends.
FlowUpClass smallest_flowup(std::span<const Integer> labels, std::size_t k);

FlowUpBasis flowup_basis(std::span<const Integer> labels);

/// Peels y into basis coefficients: c_0 = y_1, then c_k is the (exact)
/// quotient of the current entry at vertex k+1 by G_k's leading entry.
/// DomainError if y is not a spline on the cycle; ConsistencyError if a
/// division leaves a remainder or the final residual is nonzero.
DecompositionResult decompose(const FlowUpBasis& basis, const Spline& y);
DecompositionResult decompose(std::span<const Integer> labels, const Spline& y);

/// sum c_k * G_k.
Spline recombine(const FlowUpBasis& basis, std::span<const Integer> coefficients);
Spline recombine(std::span<const Integer> labels, std::span<const Integer> coefficients);

/// (0, 0, g_3, ..., g_n) on C_n  ->  (0, g_3, ..., g_n) on C_{n-1} with
/// labels (l_2, ..., l_n). Requires n >= 4: a contracted triangle is a
/// two-vertex multigraph.
CycleSpline contract_first_edge(std::span<const Integer> labels, const Spline& s);

/// (0, g_2, ...) on C_{n-1}  ->  (0, 0, g_2, ...) on C_n with new_label
/// prepended. Inverse of contract_first_edge.
CycleSpline add_leading_zero(std::span<const Integer> labels, const Spline& s, const Integer& new_label);

/// Thread-safe memo of flowup_basis keyed by label list.
class BasisCache {
public:
    std::shared_ptr<const FlowUpBasis> get(std::span<const Integer> labels);
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::vector<Integer>, std::shared_ptr<const FlowUpBasis>> entries_;
};

} // namespace splines
