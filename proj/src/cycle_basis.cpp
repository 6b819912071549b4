#include "splines/cycle_basis.hpp"

#include "splines/errors.hpp"

#include <mutex>
#include <string>

namespace splines {

void require_cycle_labels(std::span<const Integer> labels) {
    if (labels.size() < 3)
        throw DomainError("cycle needs at least 3 labels, got " + std::to_string(labels.size()));
    require_labels(labels, "cycle");
}

std::vector<Integer> suffix_gcds(std::span<const Integer> labels) {
    std::vector<Integer> out(labels.size());
    Integer g = 0;
    for (std::size_t i = labels.size(); i-- > 0;) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), labels[i].get_mpz_t());
        out[i] = g;
    }
    return out;
}

std::size_t leading_zeros(const Spline& s) {
    std::size_t k = 0;
    while (k < s.size() && s.values()[k] == 0)
        ++k;
    return k;
}

namespace {

void require_k(std::size_t n, std::size_t k, std::size_t lo) {
    if (k < lo || k >= n)
        throw DomainError("flow-up index k=" + std::to_string(k) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(n - 1) + "]");
}

Integer lcm2(const Integer& a, const Integer& b) {
    Integer out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

} // namespace

Integer smallest_leading_entry(std::span<const Integer> labels, std::size_t k) {
    require_cycle_labels(labels);
    require_k(labels.size(), k, 1);
    const auto suffix = suffix_gcds(labels);
    // 1-based: lcm(l_k, D_{k+1})
    return lcm2(labels[k - 1], suffix[k]);
}

FlowUpClass smallest_flowup(std::span<const Integer> labels, std::size_t k) {
    require_cycle_labels(labels);
    const std::size_t n = labels.size();
    require_k(n, k, 0);
    if (k == 0)
        return {0, Spline::constant(n, 1)};

    const auto suffix = suffix_gcds(labels);
    std::vector<Integer> g(n, Integer(0));
    g[k] = lcm2(labels[k - 1], suffix[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
        auto step = crt_pair(Congruence(g[i - 1], labels[i - 1]), Congruence(0, suffix[i]));
        if (!step)
            throw ConsistencyError("flow-up walk dead-ended at vertex " + std::to_string(i + 1));
        g[i] = std::move(step->value);
    }
    return {k, Spline(std::move(g))};
}

FlowUpBasis flowup_basis(std::span<const Integer> labels) {
    require_cycle_labels(labels);
    FlowUpBasis basis{{labels.begin(), labels.end()}, {}};
    basis.classes.reserve(labels.size());
    for (std::size_t k = 0; k < labels.size(); ++k)
        basis.classes.push_back(smallest_flowup(labels, k));
    return basis;
}

namespace {

/// 1-based index of the first cycle edge whose congruence fails, or 0.
std::size_t first_bad_cycle_edge(std::span<const Integer> labels, const Spline& y) {
    const std::size_t n = labels.size();
    const auto& g = y.values();
    for (std::size_t i = 0; i + 1 < n; ++i)
        if (!congruent(g[i], g[i + 1], labels[i]))
            return i + 1;
    return congruent(g[0], g[n - 1], labels[n - 1]) ? 0 : n;
}

} // namespace

DecompositionResult decompose(const FlowUpBasis& basis, const Spline& y) {
    const std::size_t n = basis.size();
    if (y.size() != n)
        throw DomainError("spline has " + std::to_string(y.size()) + " entries but the cycle has " +
                          std::to_string(n) + " vertices");
    if (const auto bad = first_bad_cycle_edge(basis.labels, y); bad != 0)
        throw DomainError("not a spline on the cycle: " + y.to_string() + " fails edge " + std::to_string(bad));

    DecompositionResult out;
    out.coefficients.resize(n);
    std::vector<Integer> rest = y.values();
    for (std::size_t k = 0; k < n; ++k) {
        const auto& cls = basis[k].spline.values();
        const Integer& lead = cls[k];
        Integer& c = out.coefficients[k];
        if (mpz_divisible_p(rest[k].get_mpz_t(), lead.get_mpz_t()) == 0)
            throw ConsistencyError("peel step k=" + std::to_string(k) + ": entry " + rest[k].get_str() +
                                   " is not a multiple of leading entry " + lead.get_str());
        mpz_divexact(c.get_mpz_t(), rest[k].get_mpz_t(), lead.get_mpz_t());
        for (std::size_t i = 0; i < n; ++i)
            mpz_submul(rest[i].get_mpz_t(), c.get_mpz_t(), cls[i].get_mpz_t());
    }
    for (const auto& r : rest)
        if (r != 0)
            throw ConsistencyError("nonzero residual after peeling: " + Spline(rest).to_string());
    return out;
}

DecompositionResult decompose(std::span<const Integer> labels, const Spline& y) {
    return decompose(flowup_basis(labels), y);
}

Spline recombine(const FlowUpBasis& basis, std::span<const Integer> coefficients) {
    const std::size_t n = basis.size();
    if (coefficients.size() != n)
        throw DomainError("expected " + std::to_string(n) + " coefficients, got " +
                          std::to_string(coefficients.size()));
    std::vector<Integer> out(n, Integer(0));
    for (std::size_t k = 0; k < n; ++k) {
        const auto& cls = basis[k].spline.values();
        for (std::size_t i = 0; i < n; ++i)
            mpz_addmul(out[i].get_mpz_t(), coefficients[k].get_mpz_t(), cls[i].get_mpz_t());
    }
    return Spline(std::move(out));
}

Spline recombine(std::span<const Integer> labels, std::span<const Integer> coefficients) {
    return recombine(flowup_basis(labels), coefficients);
}

CycleSpline contract_first_edge(std::span<const Integer> labels, const Spline& s) {
    require_cycle_labels(labels);
    if (labels.size() < 4)
        throw DomainError("cannot contract an edge of a triangle");
    if (const auto verdict = verify(make_cycle({labels.begin(), labels.end()}), s); !verdict.valid())
        throw DomainError("not a spline on the cycle: " + s.to_string());
    if (s.at(1) != 0 || s.at(2) != 0)
        throw DomainError("contraction needs the first two entries to be zero: " + s.to_string());

    std::vector<Integer> shorter(labels.begin() + 1, labels.end());
    std::vector<Integer> values(s.values().begin() + 1, s.values().end());
    return {std::move(shorter), Spline(std::move(values))};
}

CycleSpline add_leading_zero(std::span<const Integer> labels, const Spline& s, const Integer& new_label) {
    require_cycle_labels(labels);
    if (new_label < 1)
        throw DomainError("edge labels must be positive, got " + new_label.get_str());
    if (const auto verdict = verify(make_cycle({labels.begin(), labels.end()}), s); !verdict.valid())
        throw DomainError("not a spline on the cycle: " + s.to_string());
    if (s.at(1) != 0)
        throw DomainError("added vertex needs a zero neighbour; leading entry is " + s.at(1).get_str());

    std::vector<Integer> longer;
    longer.reserve(labels.size() + 1);
    longer.push_back(new_label);
    longer.insert(longer.end(), labels.begin(), labels.end());
    std::vector<Integer> values;
    values.reserve(s.size() + 1);
    values.emplace_back(0);
    values.insert(values.end(), s.values().begin(), s.values().end());
    return {std::move(longer), Spline(std::move(values))};
}

std::shared_ptr<const FlowUpBasis> BasisCache::get(std::span<const Integer> labels) {
    std::vector<Integer> key(labels.begin(), labels.end());
    {
        std::shared_lock lock(mutex_);
        if (auto it = entries_.find(key); it != entries_.end())
            return it->second;
    }
    auto basis = std::make_shared<const FlowUpBasis>(flowup_basis(labels));
    std::unique_lock lock(mutex_);
    return entries_.try_emplace(std::move(key), std::move(basis)).first->second;
}

std::size_t BasisCache::size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
}

} // namespace splines
