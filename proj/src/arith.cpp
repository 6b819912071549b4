#include "splines/arith.hpp"

#include "splines/errors.hpp"

#include <cctype>

namespace splines {

namespace {

void require_positive(std::span<const Integer> values, const char* what) {
    if (values.empty())
        throw UsageError(std::string(what) + ": empty list");
    for (const auto& v : values)
        if (v < 1)
            throw DomainError(std::string(what) + ": values must be positive, got " + v.get_str());
}

} // namespace

Congruence::Congruence(Integer residue, Integer modulus)
    : residue_(std::move(residue)), modulus_(std::move(modulus)) {
    if (modulus_ < 1)
        throw DomainError("congruence modulus must be >= 1, got " + modulus_.get_str());
}

Integer mod_floor(const Integer& x, const Integer& m) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    return r;
}

bool congruent(const Integer& a, const Integer& b, const Integer& m) {
    Integer diff = a - b;
    return mpz_divisible_p(diff.get_mpz_t(), m.get_mpz_t()) != 0;
}

Integer gcd_all(std::span<const Integer> values) {
    require_positive(values, "gcd_all");
    Integer g = values.front();
    for (const auto& v : values.subspan(1))
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

Integer lcm_all(std::span<const Integer> values) {
    require_positive(values, "lcm_all");
    Integer l = values.front();
    for (const auto& v : values.subspan(1)) {
        Integer g;
        mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
        l = l / g * v;
    }
    return l;
}

std::optional<CrtSolution> crt_pair(const Congruence& a, const Congruence& b) {
    const Integer& m1 = a.modulus();
    const Integer& m2 = b.modulus();

    // g = s*m1 + t*m2
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());

    Integer diff = b.residue() - a.residue();
    if (mpz_divisible_p(diff.get_mpz_t(), g.get_mpz_t()) == 0)
        return std::nullopt;

    Integer lcm = m1 / g * m2;
    Integer x = a.residue() + m1 * s * (diff / g);
    return CrtSolution{mod_floor(x, lcm), lcm};
}

std::optional<CrtSolution> crt_system(std::span<const Congruence> congruences) {
    if (congruences.empty())
        throw UsageError("crt_system: empty congruence list");
    CrtSolution acc{mod_floor(congruences.front().residue(), congruences.front().modulus()),
                    congruences.front().modulus()};
    for (const auto& c : congruences.subspan(1)) {
        auto next = crt_pair(Congruence(acc.value, acc.modulus), c);
        if (!next)
            return std::nullopt;
        acc = std::move(*next);
    }
    return acc;
}

Integer parse_integer(const std::string& text) {
    std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (start == text.size())
        throw UsageError("not an integer: '" + text + "'");
    for (std::size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw UsageError("not an integer: '" + text + "'");
    return Integer(text, 10);
}

} // namespace splines
