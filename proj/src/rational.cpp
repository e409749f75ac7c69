#include "lerchpade/rational.hpp"

namespace lerchpade {

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
    // mpq arithmetic keeps canonical form when inputs are canonical; raw
    // construction may not.
    v_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            return Rational(mpz_class(std::string(s)), mpz_class(1));
        }
        mpz_class num{std::string(s.substr(0, slash))};
        mpz_class den{std::string(s.substr(slash + 1))};
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
    }
}

Rational Rational::inv() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den(), num());
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? inv() : *this;
    unsigned long k = e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), k);
    mpq_class q(n, d);  // already canonical: base was
    Rational r;
    r.v_ = std::move(q);
    return r;
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

}  // namespace lerchpade
