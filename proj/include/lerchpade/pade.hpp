#pragma once

#include <vector>

#include "lerchpade/laurent.hpp"
#include "lerchpade/operators.hpp"
#include "lerchpade/rational.hpp"
#include "lerchpade/unipoly.hpp"

namespace lerchpade {

/// Parameters of the construction: r series depths, m evaluation points,
/// weight n, shift x in [0,1), and the m nonzero pairwise-distinct alphas.
struct LerchParams {
    unsigned r;
    unsigned m;
    unsigned n;
    Rational x;
    std::vector<Rational> alphas;

    LerchParams(unsigned r_, unsigned m_, unsigned n_, Rational x_, std::vector<Rational> alphas_);

    unsigned rm() const { return r * m; }
    const Rational& alpha(unsigned i) const { return alphas.at(i - 1); }  // 1-based
};

/// The full family of approximants: P[l] for l = 0..rm and the paired
/// polynomials Q[l][i-1][s-1] for 1 <= i <= m, 1 <= s <= r.
struct PadeSystem {
    LerchParams params;
    std::vector<UniPoly> P;
    std::vector<std::vector<std::vector<UniPoly>>> Q;

    const UniPoly& q(unsigned l, unsigned i, unsigned s) const { return Q.at(l).at(i - 1).at(s - 1); }
};

/// Per-remainder outcome of the order verification.
struct OrderEntry {
    unsigned l, i, s;
    OrdBound ord;
};

struct OrderReport {
    bool pass = false;
    bool degrees_ok = false;
    unsigned long window = 0;
    unsigned long required_order = 0;  // n + 1
    std::vector<OrderEntry> entries;
};

/// T^l prod_i (T - alpha_i)^(rn), the monic seed polynomial of degree rmn + l.
UniPoly build_A(const LerchParams& params, unsigned l);

/// P[l](z): the r-fold divided derivative of the seed, read off in z.
/// Degree exactly rmn + l, leading coefficient ((rmn+l+x+1)_n / n!)^r.
UniPoly build_P(const LerchParams& params, unsigned l);

/// Q[l][i][s](z): the evaluation functional applied in the T slot of
/// (P[l](z) - P[l](T)) / (z - T). Degree <= rmn + l - 1.
UniPoly build_Q(const LerchParams& params, unsigned l, unsigned i, unsigned s);

PadeSystem build_system(const LerchParams& params);

/// Coefficients of the series sum_{k>=0} alpha^(k+1)/(k+x+1)^s / z^(k+1)
/// for k = 0..K.
std::vector<Rational> lerch_series_coeffs(const Rational& x, const Rational& alpha,
                                          unsigned long s, unsigned long K);

/// Laurent tail of P[l](z) * (series for alpha_i, depth s) - Q[l][i][s](z):
/// the coefficient of 1/z^(k+1) is phi(alpha_i, s, T^k P[l](T)), computed
/// for k = 0..K.
LaurentTail remainder_tail(const LerchParams& params, unsigned l, unsigned i, unsigned s,
                           unsigned long K);

/// Checks deg P[l] = rmn + l and ord_infty of every remainder >= n + 1
/// within the window K (coefficients of 1/z^1 .. 1/z^(K+1)).
OrderReport verify_order(const LerchParams& params, unsigned long K);

}  // namespace lerchpade
