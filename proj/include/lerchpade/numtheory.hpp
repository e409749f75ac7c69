#pragma once

#include <vector>

#include "lerchpade/enclosure.hpp"
#include "lerchpade/rational.hpp"

namespace lerchpade {

/// a (a+1) ... (a+n-1); 1 when n = 0.
Rational pochhammer(const Rational& a, unsigned long n);

/// Least positive integer clearing every denominator of the set, i.e. the
/// lcm of the reduced denominators. Throws on an empty set.
mpz_class den_of_set(const std::vector<Rational>& s);

/// lcm(1, 2, ..., n).
mpz_class lcm_upto(unsigned long n);

/// Prime factorization by trial division, (prime, multiplicity) pairs in
/// increasing prime order. n must be >= 1.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);

/// Exact value of the form rational_part * prod q^exponent with distinct
/// primes q and fractional exponents in (0,1). Integer parts of exponents
/// are folded into rational_part on construction.
class RadicalValue {
public:
    RadicalValue() : rational_part_(1) {}
    RadicalValue(Rational rational_part, std::vector<std::pair<mpz_class, Rational>> factors);

    const Rational& rational_part() const { return rational_part_; }
    const std::vector<std::pair<mpz_class, Rational>>& radical_factors() const { return radical_factors_; }

    bool is_rational() const { return radical_factors_.empty(); }

    /// Enclosure of the natural log of the represented (positive) value.
    Enclosure log_enclosure(const Rational& tol) const;

private:
    Rational rational_part_;  // positive
    std::vector<std::pair<mpz_class, Rational>> radical_factors_;  // primes increasing, exponents in (0,1)
};

/// mu(x) = den(x) * prod_{q prime, q | den(x)} q^(1/(q-1)), for 0 <= x < 1.
RadicalValue mu_of(const Rational& x);

}  // namespace lerchpade
