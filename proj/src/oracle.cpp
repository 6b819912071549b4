#include "splines/oracle.hpp"

#include "splines/errors.hpp"

#include <functional>
#include <string>

namespace splines {

namespace {

struct Neighbour {
    std::size_t vertex; // 0-based, earlier than the current one
    Integer label;
};

/// Range of values allowed at one vertex: [lo, hi).
struct Window {
    Integer lo;
    Integer hi;
};

class PrunedSearch {
public:
    PrunedSearch(const EdgeLabeledGraph& graph, std::vector<Window> windows, std::uint64_t budget)
        : windows_(std::move(windows)), budget_(budget), earlier_(graph.vertex_count()),
          values_(graph.vertex_count()) {
        for (const auto& e : graph.edges()) {
            const std::size_t a = std::min(e.u, e.v) - 1;
            const std::size_t b = std::max(e.u, e.v) - 1;
            earlier_[b].push_back({a, e.label});
        }
    }

    /// Visits solutions in lexicographic order until `visit` returns false.
    void run(const std::function<bool(const std::vector<Integer>&)>& visit) {
        visit_ = &visit;
        descend(0);
    }

private:
    bool descend(std::size_t v) {
        if (v == values_.size())
            return (*visit_)(values_);

        // Merge the constraints from placed neighbours into x = r (mod m).
        CrtSolution cls{0, 1};
        for (const auto& nb : earlier_[v]) {
            auto merged = crt_pair(Congruence(cls.value, cls.modulus), Congruence(values_[nb.vertex], nb.label));
            if (!merged)
                return true;
            cls = std::move(*merged);
        }

        const auto& w = windows_[v];
        Integer x = w.lo + mod_floor(cls.value - w.lo, cls.modulus);
        for (; x < w.hi; x += cls.modulus) {
            if (++visited_ > budget_)
                throw ResourceError("enumeration exceeded budget of " + std::to_string(budget_) + " candidates");
            values_[v] = x;
            if (!descend(v + 1))
                return false;
        }
        return true;
    }

    std::vector<Window> windows_;
    std::uint64_t budget_;
    std::uint64_t visited_ = 0;
    std::vector<std::vector<Neighbour>> earlier_;
    std::vector<Integer> values_;
    const std::function<bool(const std::vector<Integer>&)>* visit_ = nullptr;
};

} // namespace

EnumerationReport enumerate_splines(const EdgeLabeledGraph& graph, std::uint64_t bound, std::uint64_t budget) {
    if (bound < 1)
        throw DomainError("enumeration bound must be >= 1");
    const Integer hi(static_cast<unsigned long>(bound));
    PrunedSearch search(graph, std::vector<Window>(graph.vertex_count(), Window{0, hi}), budget);

    EnumerationReport report;
    report.bound = bound;
    search.run([&](const std::vector<Integer>& values) {
        report.splines.emplace_back(values);
        return true;
    });
    report.count = report.splines.size();
    return report;
}

MinimalityVerdict minimality_scan(std::span<const Integer> labels, std::size_t k, const FlowUpClass& candidate,
                                  std::uint64_t bound, std::uint64_t budget) {
    require_cycle_labels(labels);
    const std::size_t n = labels.size();
    const Spline& c = candidate.spline;
    if (k >= n)
        throw DomainError("flow-up index k=" + std::to_string(k) + " out of range");
    if (c.size() != n || leading_zeros(c) != k)
        throw DomainError("candidate " + c.to_string() + " does not have exactly " + std::to_string(k) +
                          " leading zeros");
    for (const auto& v : c.values())
        if (v < 0)
            throw DomainError("candidate must have nonnegative entries: " + c.to_string());
    if (bound < 1)
        throw DomainError("scan bound must be >= 1");

    MinimalityVerdict verdict;
    if (k == 0) {
        // G_0 competitors are positive multiples of (1, ..., 1).
        for (const auto& v : c.values())
            if (v != c.at(1))
                throw DomainError("a k = 0 class must be constant: " + c.to_string());
        if (c.at(1) > 1 && bound > 1)
            verdict.counterexample = Spline::constant(n, 1);
        return verdict;
    }

    // A dominating competitor is <= the candidate entrywise, so each
    // vertex only ranges up to the candidate's own entry.
    const Integer cap(static_cast<unsigned long>(bound));
    std::vector<Window> windows;
    windows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Integer hi = c.values()[i] + 1;
        if (hi > cap)
            hi = cap;
        if (i < k)
            windows.push_back({0, 1});
        else if (i == k)
            windows.push_back({1, hi});
        else
            windows.push_back({0, hi});
    }

    PrunedSearch search(make_cycle({labels.begin(), labels.end()}), std::move(windows), budget);
    search.run([&](const std::vector<Integer>& values) {
        if (values != c.values()) {
            verdict.counterexample = Spline(values);
            return false;
        }
        return true;
    });
    return verdict;
}

SpanVerdict span_check(std::span<const Integer> labels, std::uint64_t bound, std::uint64_t budget) {
    const auto basis = flowup_basis(labels);
    const auto report = enumerate_splines(make_cycle(basis.labels), bound, budget);

    SpanVerdict verdict;
    for (const auto& y : report.splines) {
        ++verdict.checked;
        try {
            const auto coeffs = decompose(basis, y);
            if (recombine(basis, coeffs.coefficients) != y) {
                verdict.failure = y;
                break;
            }
        } catch (const ConsistencyError&) {
            verdict.failure = y;
            break;
        }
    }
    return verdict;
}

} // namespace splines
