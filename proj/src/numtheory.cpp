#include "lerchpade/numtheory.hpp"

#include <algorithm>

namespace lerchpade {

Rational pochhammer(const Rational& a, unsigned long n) {
    Rational acc(1);
    Rational term = a;
    for (unsigned long i = 0; i < n; ++i) {
        acc *= term;
        term += Rational(1);
    }
    return acc;
}

mpz_class den_of_set(const std::vector<Rational>& s) {
    if (s.empty()) throw std::invalid_argument("den_of_set: empty set");
    mpz_class l(1);
    for (const auto& v : s) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
    return l;
}

mpz_class lcm_upto(unsigned long n) {
    if (n < 1) throw std::invalid_argument("lcm_upto: n must be >= 1");
    mpz_class l(1);
    for (unsigned long k = 2; k <= n; ++k)
        mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), k);
    return l;
}

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
    if (n < 1) throw std::invalid_argument("factorize: n must be >= 1");
    std::vector<std::pair<mpz_class, unsigned>> out;
    mpz_class rest = n;
    for (mpz_class p = 2; p * p <= rest; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
        unsigned e = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (rest > 1) out.emplace_back(rest, 1u);
    return out;
}

RadicalValue::RadicalValue(Rational rational_part, std::vector<std::pair<mpz_class, Rational>> factors)
    : rational_part_(std::move(rational_part)) {
    if (!(Rational(0) < rational_part_))
        throw std::invalid_argument("RadicalValue: rational part must be positive");
    std::sort(factors.begin(), factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [q, e] : factors) {
        if (e.is_zero()) continue;
        if (e.is_negative()) throw std::invalid_argument("RadicalValue: negative exponent");
        // fold the integer part of the exponent into the rational part
        mpz_class whole = e.num() / e.den();
        if (whole > 0) {
            mpz_class qpow;
            mpz_pow_ui(qpow.get_mpz_t(), q.get_mpz_t(), whole.get_ui());
            rational_part_ *= Rational(qpow);
        }
        Rational frac = e - Rational(whole);
        if (!frac.is_zero()) radical_factors_.emplace_back(q, frac);
    }
}

Enclosure RadicalValue::log_enclosure(const Rational& tol) const {
    const Rational per = tol / Rational(static_cast<long>(radical_factors_.size() + 1));
    Enclosure acc = log_of(rational_part_, per);
    for (const auto& [q, e] : radical_factors_)
        acc = acc + e * log_of(Rational(q), per);
    return acc;
}

RadicalValue mu_of(const Rational& x) {
    if (x.is_negative() || x >= Rational(1))
        throw std::domain_error("mu_of: x must lie in [0,1)");
    const mpz_class d = x.den();
    std::vector<std::pair<mpz_class, Rational>> factors;
    for (const auto& [q, mult] : factorize(d)) {
        (void)mult;
        if (q == 1) continue;
        factors.emplace_back(q, Rational(1) / (Rational(q) - Rational(1)));
    }
    return RadicalValue(Rational(d), std::move(factors));
}

}  // namespace lerchpade
