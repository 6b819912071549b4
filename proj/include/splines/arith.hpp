#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>

namespace splines {

using Integer = mpz_class;

/// A single congruence x = residue (mod modulus), modulus >= 1.
class Congruence {
public:
    Congruence(Integer residue, Integer modulus);

    const Integer& residue() const noexcept { return residue_; }
    const Integer& modulus() const noexcept { return modulus_; }

private:
    Integer residue_;
    Integer modulus_;
};

/// Canonical solution of a congruence system: 0 <= value < modulus.
struct CrtSolution {
    Integer value;
    Integer modulus;

    bool operator==(const CrtSolution&) const = default;
};

/// Least nonnegative representative of x modulo m (m >= 1).
Integer mod_floor(const Integer& x, const Integer& m);

/// True iff a = b (mod m), for any sign of a, b.
bool congruent(const Integer& a, const Integer& b, const Integer& m);

Integer gcd_all(std::span<const Integer> values);
Integer lcm_all(std::span<const Integer> values);

/// Non-coprime CRT for two congruences. Empty when
/// a.residue != b.residue (mod gcd(a.modulus, b.modulus)).
std::optional<CrtSolution> crt_pair(const Congruence& a, const Congruence& b);

/// Folds crt_pair over the list. Empty when any pair is incompatible.
std::optional<CrtSolution> crt_system(std::span<const Congruence> congruences);

/// Parses a base-10 integer with optional leading '-'. Throws UsageError.
Integer parse_integer(const std::string& text);

} // namespace splines
