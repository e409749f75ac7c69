#include "lerchpade/unipoly.hpp"

#include <sstream>

namespace lerchpade {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::constant(Rational v) {
    if (v.is_zero()) return UniPoly{};
    return UniPoly(std::vector<Rational>{std::move(v)});
}

UniPoly UniPoly::monomial(long k, Rational coeff) {
    if (coeff.is_zero()) return UniPoly{};
    if (k < 0) throw std::invalid_argument("UniPoly::monomial: negative degree");
    std::vector<Rational> c(k + 1, Rational(0));
    c.back() = std::move(coeff);
    return UniPoly(std::move(c));
}

const Rational& UniPoly::leading() const {
    if (c_.empty()) throw std::logic_error("UniPoly::leading: zero polynomial");
    return c_.back();
}

Rational UniPoly::coeff(long k) const {
    if (k < 0 || k >= static_cast<long>(c_.size())) return Rational(0);
    return c_[k];
}

Rational UniPoly::eval(const Rational& at) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly{};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
    return UniPoly(std::move(d));
}

UniPoly UniPoly::shifted(long k) const {
    if (is_zero()) return UniPoly{};
    if (k < 0) throw std::invalid_argument("UniPoly::shifted: negative shift");
    std::vector<Rational> c(c_.size() + k, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(unsigned long e) const {
    UniPoly acc = UniPoly::constant(Rational(1));
    UniPoly base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly{};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    if (s.is_zero()) return UniPoly{};
    std::vector<Rational> c(p.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = s * p.c_[i];
    return UniPoly(std::move(c));
}

std::string UniPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree(); k >= 0; --k) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << c_[k].str();
        if (k > 0) os << "*" << var << "^" << k;
        first = false;
    }
    return os.str();
}

Rational DividedDifference::c(long a, long b) const {
    if (a < 0 || b < 0) return Rational(0);
    long idx = a + b + 1;
    if (idx >= static_cast<long>(p_.size())) return Rational(0);
    return p_[idx];
}

Rational DividedDifference::eval(const Rational& z0, const Rational& t0) const {
    const long n = static_cast<long>(p_.size());
    Rational acc(0);
    for (long a = 0; a + 1 < n; ++a) {
        Rational inner(0);
        for (long b = n - 2 - a; b >= 0; --b) inner = inner * t0 + p_[a + b + 1];
        acc += inner * z0.pow(a);
    }
    return acc;
}

}  // namespace lerchpade
