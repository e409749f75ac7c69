#include "lerchpade/enclosure.hpp"

namespace lerchpade {

namespace {

// 2*atanh(u) = log((1+u)/(1-u)) for 0 <= u < 1, enclosed to width <= tol.
// Tail after the degree-(2j+1) term is bounded by the geometric series
// u^(2j+3)/((2j+3)(1-u^2)).
Enclosure two_atanh(const Rational& u, const Rational& tol) {
    if (u.is_zero()) return Enclosure(Rational(0));
    const Rational u2 = u * u;
    const Rational one_minus_u2 = Rational(1) - u2;
    Rational sum(0);
    Rational upow = u;  // u^(2j+1)
    for (long j = 0;; ++j) {
        sum += upow / Rational(2 * j + 1);
        upow *= u2;
        Rational tail = Rational(2) * upow / (Rational(2 * j + 3) * one_minus_u2);
        if (tail <= tol) {
            Rational lo = sum + sum;
            return Enclosure(lo, lo + tail);
        }
    }
}

}  // namespace

Enclosure log2_enclosure(const Rational& tol) {
    return two_atanh(Rational(1, 3), tol);
}

Enclosure log_of(const Rational& y, const Rational& tol) {
    if (!(Rational(0) < y)) throw std::domain_error("log_of: argument must be positive");
    if (y == Rational(1)) return Enclosure(Rational(0));
    if (y < Rational(1)) return -log_of(y.inv(), tol);

    // y = 2^k * y' with y' in [1,2); bit lengths give k up to one halving.
    mpz_class num = y.num(), den = y.den();
    long k = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2)) - 1;
    if (k > 0) den <<= k; else k = 0;
    Rational reduced(num, den);
    while (reduced >= Rational(2)) { reduced = reduced / Rational(2); ++k; }

    const Rational half_tol = tol / Rational(2);
    Enclosure series = two_atanh((reduced - Rational(1)) / (reduced + Rational(1)), half_tol);
    if (k == 0) return series;
    Enclosure l2 = log2_enclosure(half_tol / Rational(k));
    return Rational(k) * l2 + series;
}

}  // namespace lerchpade
