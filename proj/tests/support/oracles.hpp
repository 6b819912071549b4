#pragma once

// Test-only brute-force references. Everything here works on plain 64-bit
// integers and never calls into the library's arithmetic, so the library
// is checked against an independent route.

#include "splines/arith.hpp"
#include "splines/graph.hpp"
#include "splines/spline.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace splines::testing {

using Int = std::int64_t;

inline std::vector<Integer> big(const std::vector<Int>& xs) {
    std::vector<Integer> out;
    out.reserve(xs.size());
    for (Int x : xs)
        out.emplace_back(static_cast<long>(x));
    return out;
}

inline std::vector<Int> small(const std::vector<Integer>& xs) {
    std::vector<Int> out;
    out.reserve(xs.size());
    for (const auto& x : xs)
        out.push_back(x.get_si());
    return out;
}

inline Spline spline_of(const std::vector<Int>& xs) { return Spline(big(xs)); }

inline Int floor_mod(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

/// Largest d dividing every value, by scanning downwards.
inline Int divisor_scan_gcd(const std::vector<Int>& values) {
    Int top = *std::min_element(values.begin(), values.end());
    for (Int d = top; d > 1; --d)
        if (std::all_of(values.begin(), values.end(), [d](Int v) { return v % d == 0; }))
            return d;
    return 1;
}

/// Smallest m >= 1 that every value divides, by scanning multiples of the max.
inline Int multiple_scan_lcm(const std::vector<Int>& values) {
    Int top = *std::max_element(values.begin(), values.end());
    for (Int m = top;; m += top)
        if (std::all_of(values.begin(), values.end(), [m](Int v) { return m % v == 0; }))
            return m;
}

struct SmallCongruence {
    Int residue;
    Int modulus;
};

/// Least x in [0, period) with x = r_i (mod m_i) for all i, where period is
/// computed by multiple_scan_lcm.
inline std::optional<Int> crt_linear_scan(const std::vector<SmallCongruence>& system, Int* period = nullptr) {
    std::vector<Int> moduli;
    for (const auto& c : system)
        moduli.push_back(c.modulus);
    const Int l = multiple_scan_lcm(moduli);
    if (period)
        *period = l;
    for (Int x = 0; x < l; ++x) {
        bool ok = true;
        for (const auto& c : system)
            if (floor_mod(x - c.residue, c.modulus) != 0) {
                ok = false;
                break;
            }
        if (ok)
            return x;
    }
    return std::nullopt;
}

struct SmallEdge {
    std::size_t u, v; // 1-based
    Int label;
};

inline std::vector<SmallEdge> small_edges(const EdgeLabeledGraph& g) {
    std::vector<SmallEdge> out;
    for (const auto& e : g.edges())
        out.push_back({e.u, e.v, e.label.get_si()});
    return out;
}

inline bool edges_hold(const std::vector<SmallEdge>& edges, const std::vector<Int>& g) {
    for (const auto& e : edges)
        if ((g[e.u - 1] - g[e.v - 1]) % e.label != 0)
            return false;
    return true;
}

/// Product scan of [0, bound)^n, keeping the labelings that satisfy every
/// edge. Lexicographic order.
inline std::vector<std::vector<Int>> naive_enumerate(const EdgeLabeledGraph& graph, Int bound) {
    const auto edges = small_edges(graph);
    const std::size_t n = graph.vertex_count();
    std::vector<std::vector<Int>> out;
    std::vector<Int> g(n, 0);
    while (true) {
        if (edges_hold(edges, g))
            out.push_back(g);
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++g[i] < bound)
                break;
            g[i] = 0;
            if (i == 0)
                return out;
        }
    }
}

/// Least positive x such that some spline on the cycle has k leading zeros
/// and x at vertex k+1. Works with residue sets modulo the lcm of all
/// labels: B_i is the set of values at v_i that can still walk back to a
/// zero at v_1 along edges l_i, ..., l_n.
inline Int leading_entry_by_reachability(const std::vector<Int>& labels, std::size_t k) {
    const std::size_t n = labels.size();
    const Int period = multiple_scan_lcm(labels);
    std::vector<char> reach(period, 0);
    // v_n must be 0 mod l_n.
    for (Int r = 0; r < period; r += labels[n - 1])
        reach[r] = 1;
    // Pull back through edge l_i (between v_i and v_{i+1}) for i = n-1 .. k+1.
    for (std::size_t i = n - 1; i > k; --i) {
        const Int l = labels[i - 1];
        std::vector<char> classes(l, 0);
        for (Int r = 0; r < period; ++r)
            if (reach[r])
                classes[r % l] = 1;
        for (Int r = 0; r < period; ++r)
            reach[r] = classes[r % l];
    }
    const Int below = labels[k - 1];
    for (Int x = 1;; ++x)
        if (x % below == 0 && reach[x % period])
            return x;
}

/// Uniform labels in [lo, hi].
inline std::vector<Int> random_labels(std::mt19937_64& rng, std::size_t n, Int lo, Int hi) {
    std::uniform_int_distribution<Int> d(lo, hi);
    std::vector<Int> out(n);
    for (auto& x : out)
        x = d(rng);
    return out;
}

} // namespace splines::testing
