#pragma once

#include <string>
#include <vector>

#include "lerchpade/enclosure.hpp"
#include "lerchpade/pade.hpp"
#include "lerchpade/rational.hpp"

namespace lerchpade {

/// |beta| in one of three shapes: an exact rational, a power |base|^exponent
/// (so astronomically large values never materialize), or a point value of
/// log|beta| (an integer beta known only through its logarithm). Log-point
/// values declare denominator 1 by contract.
class BigLogNumber {
public:
    enum class Form { Exact, Power, LogPoint };

    static BigLogNumber from_rational(Rational v);
    static BigLogNumber from_power(Rational base, mpz_class exponent);
    static BigLogNumber from_log_point(Rational log_value);

    Form form() const { return form_; }
    bool is_exact() const { return form_ == Form::Exact; }
    const Rational& exact_value() const;

    /// Enclosure of log|beta| of width <= tol (width 0 for log-point form).
    Enclosure log_abs(const Rational& tol) const;

    /// Prime factorization of den(beta); exponents may be huge for the
    /// power form, hence mpz. Empty means denominator 1.
    std::vector<std::pair<mpz_class, mpz_class>> den_factorization() const;

    /// Exact trichotomy of |beta| against a positive rational: -1, 0, +1.
    int cmp_abs(const Rational& a, const Rational& tol) const;

    std::string describe() const;

private:
    BigLogNumber() = default;
    Form form_ = Form::Exact;
    Rational value_;      // Exact: the number; Power: the base; LogPoint: log|beta|
    mpz_class exponent_;  // Power form only
};

struct CriterionReport {
    bool D_exact = true;   // whether D materialized as an integer
    mpz_class D = 1;
    Enclosure log_D;
    Enclosure log_mu;
    Enclosure A_frak;
    Enclosure calA1;
    Enclosure V;
    bool independent = false;
};

/// den of {alpha_1, ..., alpha_m, beta} together with an enclosure of its
/// log; the integer itself is materialized when small enough.
struct DenCombined {
    bool exact = true;
    mpz_class D = 1;
    Enclosure log_D;
};
DenCombined combined_denominator(const std::vector<Rational>& alphas, const BigLogNumber& beta,
                                 const Rational& tol);

/// The leading quantity: log|beta| - (rm+1) log max|alpha_i|
/// - { rm (log D + r [den(x) + log(5/2)]) + r (log 3 + log mu(x)) }.
/// Requires max|alpha_i| < |beta|. den(x) enters as a raw integer addend.
Enclosure compute_A_frak(const LerchParams& params, const BigLogNumber& beta, const Rational& tol);

/// The growth quantity: rm (log D + log max(1, min|alpha_i|^{-1} |beta|)
/// + r [den(x) - log 2]) + r (log mu(x)
/// + sum_i log(2^r |alpha_i| + 3^r max(|alpha_i|, |beta|))) + log 3.
Enclosure compute_calA1(const LerchParams& params, const BigLogNumber& beta, const Rational& tol);

/// Sum of every non-beta term of the leading quantity, assuming beta is an
/// integer (denominator 1): the minimal log|beta| certifying independence.
Enclosure threshold_log_beta(const LerchParams& params, const Rational& tol);

/// Full evaluation; independent iff the lower end of V is positive. Over
/// the rationals the two growth sums cancel exactly, so V coincides with
/// the leading quantity.
CriterionReport verdict(const LerchParams& params, const BigLogNumber& beta, const Rational& tol);

/// Exact upper bound for max |Q[l][i][s](beta)| over all l, i, s at weight n:
/// max|alpha|^(rm) (3/2)^(r^2 m + r)
/// ((3/2^rm) prod_j [2^r |alpha_j| + 3^r max|alpha|])^(rn) times
/// (rho^(rm(n+1)))/(rho - 1) for rho = min|alpha|^{-1}|beta| > 1, and
/// rm(n+1) otherwise.
Rational coefficient_bound(const LerchParams& params, const Rational& beta, unsigned n);

/// Exact upper bound for max_l of the remainder at beta:
/// [max(1, max|alpha|)^(rm+1) / (|beta| - max|alpha|)] (3/2)^(r^2 m + r)
/// (max|alpha|^(rm+1) / |beta|)^n (3 (5/2)^rm)^(rn). Requires |beta| > max|alpha|.
Rational error_bound(const LerchParams& params, const Rational& beta, unsigned n);

struct IntegralityReport {
    mpz_class scale;    // lcm of all coefficient denominators of the system
    mpz_class divisor;  // (den(x) lcm(1..rmn+rm+n))^r * den(alphas)^(rmn+rm)
    bool divides = false;
};

/// Measures the denominator content of the full system against the
/// expected normalizer.
IntegralityReport integrality_normalization(const LerchParams& params);

/// Enclosure of sum_{k>=0} w^(k+1)/(k+x+1)^s of width <= tol, |w| < 1.
Enclosure eval_phi_enclosure(const Rational& x, const Rational& w, unsigned long s,
                             const Rational& tol);

/// Enclosure of P[l](beta) * Phi_s(x, alpha_i/beta) - Q[l][i][s](beta);
/// requires |alpha_i| < |beta|.
Enclosure remainder_value_enclosure(const LerchParams& params, unsigned l, unsigned i, unsigned s,
                                    const Rational& beta, const Rational& tol);

}  // namespace lerchpade
