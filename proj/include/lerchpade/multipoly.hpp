#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <vector>

#include "lerchpade/rational.hpp"
#include "lerchpade/unipoly.hpp"

namespace lerchpade {

/// Thrown when a multivariate expansion would exceed the configured term
/// or variable caps; callers surface it as a resource error rather than
/// falling back to an approximation.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultTermCap = 1'000'000;

/// Sparse multivariate polynomial over Rational with arity fixed at
/// construction. Terms map a dense exponent vector to a nonzero
/// coefficient.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(unsigned arity) : arity_(arity) {}

    static MultiPoly constant(unsigned arity, const Rational& v);
    static MultiPoly monomial(Exponents exps, const Rational& coeff);
    /// Embed a univariate polynomial as a polynomial in variable `var`.
    static MultiPoly from_univariate(unsigned arity, unsigned var, const UniPoly& p);

    unsigned arity() const { return arity_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponents& exps, const Rational& coeff);

    /// Largest exponent of each variable over all terms.
    Exponents max_exponents() const;

    /// Sum over terms of coeff * prod_v table[v][exp_v]: applies a
    /// product of per-variable linear functionals given by their values
    /// on monomials. table[v] must cover the maximal exponent of v.
    Rational collapse(const std::vector<std::vector<Rational>>& table) const;

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const Rational& s, const MultiPoly& p);
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

private:
    unsigned arity_;
    TermMap terms_;
};

/// Exact product, refusing once the result holds more than max_terms
/// terms. operator* uses the default cap.
MultiPoly mul(const MultiPoly& a, const MultiPoly& b, std::size_t max_terms);
inline MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) { return mul(a, b, kDefaultTermCap); }

}  // namespace lerchpade
