#pragma once

#include <vector>

#include "lerchpade/rational.hpp"

namespace lerchpade {

/// Dense univariate polynomial over Rational, coefficients stored by
/// ascending degree with the top coefficient nonzero. The zero polynomial
/// stores nothing and reports degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(Rational v);
    static UniPoly monomial(long k, Rational coeff);

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const Rational& leading() const;

    /// Coefficient at degree k; zero outside the stored range.
    Rational coeff(long k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& at) const;
    UniPoly derivative() const;
    UniPoly shifted(long k) const;  // multiply by T^k
    UniPoly pow(unsigned long e) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& p);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string str(const char* var = "T") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// The table c_{a,b} with (P(z) - P(T)) / (z - T) = sum c_{a,b} z^a T^b.
/// For dense P this is the Hankel table c_{a,b} = p_{a+b+1}, so only P's
/// coefficients are stored.
class DividedDifference {
public:
    explicit DividedDifference(const UniPoly& p) : p_(p.coeffs()) {}

    /// c_{a,b} = p_{a+b+1}.
    Rational c(long a, long b) const;

    /// deg in each slot is at most deg P - 1.
    long slot_degree() const { return static_cast<long>(p_.size()) - 2; }

    Rational eval(const Rational& z0, const Rational& t0) const;

    /// Collapse the T slot through a linear functional given by its values
    /// on monomials T^b, leaving a polynomial in z.
    template <typename MonomialImage>
    UniPoly collapse_t(MonomialImage&& image) const {
        if (p_.size() < 2) return UniPoly{};
        std::vector<Rational> img(p_.size() - 1);
        for (long b = 0; b + 1 < static_cast<long>(p_.size()); ++b) img[b] = image(b);
        std::vector<Rational> out(p_.size() - 1, Rational(0));
        for (long a = 0; a + 1 < static_cast<long>(p_.size()); ++a)
            for (long b = 0; a + b + 1 < static_cast<long>(p_.size()); ++b)
                out[a] += p_[a + b + 1] * img[b];
        return UniPoly(std::move(out));
    }

private:
    std::vector<Rational> p_;
};

}  // namespace lerchpade
