#pragma once

#include <vector>

#include "lerchpade/multipoly.hpp"
#include "lerchpade/pade.hpp"
#include "lerchpade/rational.hpp"

namespace lerchpade {

/// Guard rails for the multivariate expansions of this module.
struct ExpansionCaps {
    unsigned max_vars = 6;
    std::size_t max_terms = kDefaultTermCap;
};

/// Exact determinant of the (rm+1) x (rm+1) matrix whose column l stacks
/// P[l](z0) over Q[l][i][s](z0), rows ordered (P; i=1,s=1..r; ...; i=m,s=1..r).
Rational delta_at(const PadeSystem& sys, const Rational& z0);

struct DeltaReport {
    Rational delta;
    std::vector<Rational> z_samples;
    bool constant_confirmed = false;
    bool nonzero = false;
    Rational reduced_value;   // prefactor times the rm x rm reduced determinant
    bool reduced_matches = false;
    bool ok = false;
};

/// Evaluates the determinant at enough points to pin it as a polynomial in
/// z (one more than the degree bound), confirms it is constant and nonzero,
/// and cross-checks the reduced rm x rm presentation.
DeltaReport delta_constant(const LerchParams& params);

/// Column of the reduced presentation, length rm: entry (i,s) is
/// phi(alpha_i, s, T^n A[l](T)), ordered (i=1,s=1..r), ..., (i=m,s=1..r).
/// Valid for 0 <= l <= rm-1.
std::vector<Rational> r_vector(const LerchParams& params, unsigned l);

/// (-1)^(rmn) ((1+rmn+rm+x)_n / n!)^r det(r_vector columns l = 0..rm-1).
Rational delta_reduced(const LerchParams& params);

bool delta_reduction_check(const LerchParams& params);

/// The coupling polynomial in the rm variables t_{i,s} (lexicographic
/// (i,s) order): prod_{i,s} [t_{i,s}^u prod_j (t_{i,s}-alpha_j)^(rn)]
/// times prod_{pairs} (t_later - t_earlier).
MultiPoly coupling_poly(unsigned n, unsigned u, unsigned m, unsigned r,
                        const std::vector<Rational>& alphas, const ExpansionCaps& caps = {});

/// Image of the coupling polynomial under the per-variable monomial map
/// t_{i,s}^k -> alpha_i^(k+1) / (k+x+1)^s.
Rational C_direct(unsigned n, unsigned u, unsigned m, unsigned r, const Rational& x,
                  const std::vector<Rational>& alphas, const ExpansionCaps& caps = {});

/// Single-block value I(v) in r variables: the image of
/// prod_s [t_s^v (t_s-1)^(rn)] * prod_{s1<s2} (t_{s2}-t_{s1}) under
/// t_s^k -> 1/(k+x+1)^s.
Rational single_block_value(unsigned n, unsigned r, const Rational& x, unsigned long v,
                            const ExpansionCaps& caps = {});

/// Closed form of the single-block value for r = 1:
/// (-1)^n n! / prod_{j=0}^n (v+x+1+j).
Rational single_block_closed_form_r1(unsigned n, const Rational& x, unsigned long v);

/// prod_{i=1}^m I(u + (i-1) r (n+1)): the block product whose absolute
/// value matches the constant of the factorization.
Rational block_product(unsigned n, unsigned u, unsigned m, unsigned r, const Rational& x,
                       const ExpansionCaps& caps = {});

struct FactorizationWitness {
    unsigned n = 0, u = 0, m = 0, r = 0;
    Rational x;
    unsigned long power_exponent = 0;       // r(u+1) + r^2 n + r(r-1)/2
    unsigned long difference_exponent = 0;  // (2n+1) r^2
    std::vector<std::vector<Rational>> alpha_samples;
    std::vector<Rational> C_values;
    std::vector<Rational> predicted_products;
    std::vector<Rational> quotients;
    Rational c_constant;        // the common quotient when consistent
    Rational block_product_value;
    int pinned_sign = 0;        // sign making c_constant = sign * |block product|
    bool quotients_consistent = false;
    bool c_nonzero = false;
    bool matches_blocks = false;
    bool ok = false;
};

/// Verifies that C splits as c * prod alpha_i^power_exponent *
/// prod (alpha_{i2}-alpha_{i1})^difference_exponent with one constant c
/// across all samples, c nonzero and equal to the block product up to sign.
FactorizationWitness factorization_check(unsigned n, unsigned u, unsigned m, unsigned r,
                                         const Rational& x,
                                         const std::vector<std::vector<Rational>>& alpha_samples,
                                         const ExpansionCaps& caps = {});

/// Deterministic small-height alpha tuples (pairwise distinct, nonzero,
/// not rescalings of each other).
std::vector<std::vector<Rational>> default_alpha_samples(unsigned m, unsigned count);

/// Exact determinant of a dense rational matrix (Gaussian elimination).
Rational det_rational(std::vector<std::vector<Rational>> a);

}  // namespace lerchpade
