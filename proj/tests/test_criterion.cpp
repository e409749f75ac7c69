#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lerchpade/criterion.hpp"
#include "lerchpade/numtheory.hpp"

using namespace lerchpade;

namespace {

const Rational kTol = Rational(1) / Rational::from_string("1000000000000000000000000000000000000");

LerchParams example_one() {
    std::vector<Rational> alphas;
    for (long i = 1; i <= 10; ++i) alphas.emplace_back(1, i);
    return LerchParams(10, 10, 1, Rational(0), alphas);
}

LerchParams example_two() {
    std::vector<Rational> alphas;
    for (long i = 1; i <= 100; ++i) alphas.emplace_back(i);
    return LerchParams(100, 100, 1, Rational(0), alphas);
}

Rational abs_max(const Enclosure& e) { return max(e.lo.abs(), e.hi.abs()); }

}  // namespace

TEST_CASE("big numbers in all three forms agree on logs") {
    Rational tol(1, 1000000000L);
    BigLogNumber a = BigLogNumber::from_rational(Rational(1024));
    BigLogNumber b = BigLogNumber::from_power(Rational(2), 10);
    CHECK(intersects(a.log_abs(tol), b.log_abs(tol)));
    CHECK(intersects(b.log_abs(tol), Rational(10) * log2_enclosure(tol)));

    BigLogNumber c = BigLogNumber::from_log_point(Rational(5));
    Enclosure lc = c.log_abs(tol);
    CHECK(lc.lo == Rational(5));
    CHECK(lc.hi == Rational(5));

    CHECK(a.is_exact());
    CHECK(a.exact_value() == Rational(1024));
    CHECK_FALSE(b.is_exact());
    CHECK_THROWS_AS(b.exact_value(), std::logic_error);
    CHECK_THROWS_AS(BigLogNumber::from_rational(Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(BigLogNumber::from_power(Rational(0), 3), std::invalid_argument);
    CHECK_THROWS_AS(BigLogNumber::from_power(Rational(2), -1), std::invalid_argument);
}

TEST_CASE("exact absolute comparisons") {
    Rational tol(1, 1000000L);
    BigLogNumber p = BigLogNumber::from_power(Rational(2), 10);
    CHECK(p.cmp_abs(Rational(1024), tol) == 0);
    CHECK(p.cmp_abs(Rational(1023), tol) == 1);
    CHECK(p.cmp_abs(Rational(1025), tol) == -1);

    BigLogNumber e = BigLogNumber::from_rational(Rational(-7, 2));
    CHECK(e.cmp_abs(Rational(7, 2), tol) == 0);
    CHECK(e.cmp_abs(Rational(3), tol) == 1);

    BigLogNumber huge = BigLogNumber::from_power(Rational(3), mpz_class("2000000"));
    CHECK(huge.cmp_abs(Rational(10), tol) == 1);

    BigLogNumber unit = BigLogNumber::from_log_point(Rational(0));
    CHECK(unit.cmp_abs(Rational(1), tol) == 0);
    CHECK(BigLogNumber::from_log_point(Rational(2715)).cmp_abs(Rational(1), tol) == 1);
}

TEST_CASE("denominator bookkeeping") {
    CHECK(BigLogNumber::from_rational(Rational(3, 8)).den_factorization() ==
          std::vector<std::pair<mpz_class, mpz_class>>{{2, 3}});
    CHECK(BigLogNumber::from_power(Rational(3, 4), 5).den_factorization() ==
          std::vector<std::pair<mpz_class, mpz_class>>{{2, 10}});
    CHECK(BigLogNumber::from_log_point(Rational(100)).den_factorization().empty());

    DenCombined d = combined_denominator(example_one().alphas,
                                         BigLogNumber::from_log_point(Rational(2715)), kTol);
    CHECK(d.exact);
    CHECK(d.D == 2520);

    DenCombined d2 = combined_denominator({Rational(1, 2)},
                                          BigLogNumber::from_rational(Rational(5, 6)), kTol);
    CHECK(d2.D == 6);
    CHECK(intersects(d2.log_D, log_of(Rational(6), kTol)));
}

TEST_CASE("series evaluation encloses classical constants") {
    // Phi_1(0, 1/2) = -log(1 - 1/2) = log 2
    Enclosure phi_half = eval_phi_enclosure(Rational(0), Rational(1, 2), 1, kTol);
    CHECK(intersects(phi_half, log2_enclosure(kTol)));

    // Phi_1(0, -1/2) = -log(3/2)
    Enclosure phi_neg = eval_phi_enclosure(Rational(0), Rational(-1, 2), 1, kTol);
    CHECK(intersects(phi_neg, -log_of(Rational(3, 2), kTol)));

    // Phi_2(0, 1/2) = pi^2/12 - (log 2)^2/2 = 0.582240526465012505902656320159680...
    Enclosure dilog = eval_phi_enclosure(Rational(0), Rational(1, 2), 2, kTol);
    Rational ref = Rational::from_string("582240526465012505902656320159680") /
                   Rational::from_string("1000000000000000000000000000000000");
    Rational ulp = Rational(1) / Rational::from_string("1000000000000000000000000000000000");
    CHECK(dilog.lo <= ref + ulp);
    CHECK(ref <= dilog.hi);
    CHECK(dilog.width() <= kTol);

    CHECK(eval_phi_enclosure(Rational(1, 2), Rational(0), 3, kTol).lo == Rational(0));
    CHECK_THROWS_AS(eval_phi_enclosure(Rational(0), Rational(1), 1, kTol), std::domain_error);
}

TEST_CASE("criterion quantities for the harmonic data set") {
    LerchParams params = example_one();
    BigLogNumber beta = BigLogNumber::from_log_point(Rational(2715));
    CriterionReport report = verdict(params, beta, kTol);
    CHECK(report.D == 2520);
    CHECK(report.D_exact);
    CHECK(report.independent);
    CHECK(report.V.lo == report.A_frak.lo);
    CHECK(report.V.hi == report.A_frak.hi);
    // V = 2715 - threshold, threshold in (2710, 2711)
    CHECK(report.V.lo > Rational(4));
    CHECK(report.V.hi < Rational(5));
    // the growth quantity is positive and finite
    CHECK(report.calA1.definitely_positive());
}

TEST_CASE("threshold lands strictly inside the documented bracket") {
    Enclosure th = threshold_log_beta(example_one(), kTol);
    CHECK(th.lo > Rational(2600));
    CHECK(th.hi < Rational(2715));
    // verdict flips across the threshold
    Rational above = th.hi + Rational(1);
    Rational below = th.lo - Rational(1);
    CHECK(verdict(example_one(), BigLogNumber::from_log_point(above), kTol).independent);
    CHECK_FALSE(verdict(example_one(), BigLogNumber::from_log_point(below), kTol).independent);
}

TEST_CASE("verdict is monotone in the size of beta") {
    LerchParams params = example_one();
    CriterionReport lo = verdict(params, BigLogNumber::from_log_point(Rational(2715)), kTol);
    CriterionReport hi = verdict(params, BigLogNumber::from_log_point(Rational(2716)), kTol);
    CHECK(hi.V.lo > lo.V.lo);
    CHECK(lo.independent);
    CHECK(hi.independent);
}

TEST_CASE("tiny beta is inconclusive, never dependent") {
    CriterionReport report =
        verdict(example_one(), BigLogNumber::from_rational(Rational(2)), kTol);
    CHECK_FALSE(report.independent);
    CHECK(report.V.hi < Rational(0));
}

TEST_CASE("dominance precondition is enforced") {
    LerchParams params(1, 1, 1, Rational(0), {Rational(1)});
    CHECK_THROWS_AS(compute_A_frak(params, BigLogNumber::from_rational(Rational(1)), kTol),
                    std::domain_error);
    CHECK_THROWS_AS(verdict(params, BigLogNumber::from_rational(Rational(1, 2)), kTol),
                    std::domain_error);
}

TEST_CASE("hundredfold data set certifies at the documented size") {
    LerchParams params = example_two();
    Rational big = Rational(2) * Rational::from_string("1000000");
    CriterionReport report = verdict(params, BigLogNumber::from_log_point(big), kTol);
    CHECK(report.D == 1);
    CHECK(report.independent);

    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), 10, 6);
    CriterionReport power_report =
        verdict(params, BigLogNumber::from_power(Rational(3), 2 * e), kTol);
    CHECK(power_report.independent);

    Enclosure th = threshold_log_beta(params, kTol);
    CHECK(th.hi < big);
    CHECK(th.lo > Rational(1962456));
    CHECK(th.hi < Rational(1962457));
}

TEST_CASE("coefficient bound dominates the exact values") {
    LerchParams params(1, 1, 1, Rational(0), {Rational(1, 2)});
    PadeSystem sys = build_system(params);
    Rational beta(10);
    Rational bound = coefficient_bound(params, beta, params.n);
    CHECK(bound == Rational(135, 32) * Rational(400, 19));
    Rational largest(0);
    for (unsigned l = 0; l <= params.rm(); ++l)
        largest = max(largest, sys.q(l, 1, 1).eval(beta).abs());
    CHECK(largest == Rational(119, 8));
    CHECK(largest <= bound);

    // small-beta branch: rho <= 1 switches to the linear factor
    Rational small_bound = coefficient_bound(params, Rational(1, 4), params.n);
    CHECK(small_bound == Rational(135, 32) * Rational(2));
    Rational largest_small(0);
    for (unsigned l = 0; l <= params.rm(); ++l)
        largest_small = max(largest_small, sys.q(l, 1, 1).eval(Rational(1, 4)).abs());
    CHECK(largest_small <= small_bound);
}

TEST_CASE("error bound dominates the enclosed remainders") {
    LerchParams params(1, 1, 1, Rational(0), {Rational(1, 2)});
    Rational beta(10);
    Rational bound = error_bound(params, beta, params.n);
    CHECK(bound == Rational(270, 6080));
    for (unsigned l = 0; l <= params.rm(); ++l) {
        Enclosure rem = remainder_value_enclosure(params, l, 1, 1, beta, kTol);
        CHECK(abs_max(rem) <= bound);
    }
    CHECK_THROWS_AS(error_bound(params, Rational(1, 4), params.n), std::domain_error);
}

TEST_CASE("error bound shrinks with the weight for dominant beta") {
    LerchParams p1(1, 1, 1, Rational(0), {Rational(1, 2)});
    LerchParams p2(1, 1, 2, Rational(0), {Rational(1, 2)});
    CHECK(error_bound(p2, Rational(100), 2) < error_bound(p1, Rational(100), 1));
}

TEST_CASE("remainder enclosure matches the tail magnitude") {
    // micro remainder at beta = 10 starts at a^3/6 z^-2 with a = 1/2
    LerchParams params(1, 1, 1, Rational(0), {Rational(1, 2)});
    Enclosure rem = remainder_value_enclosure(params, 0, 1, 1, Rational(10), kTol);
    // leading term (1/48)/100, next terms smaller by ~alpha/beta = 1/20
    CHECK(rem.definitely_positive());
    CHECK(abs_max(rem) < Rational(1, 4000));
    CHECK(rem.lo > Rational(1, 5000));
}

TEST_CASE("integrality of the normalized system") {
    IntegralityReport micro = integrality_normalization(
        LerchParams(1, 1, 1, Rational(0), {Rational(1)}));
    CHECK(micro.scale == 2);
    CHECK(micro.divisor == 6);  // (1 * lcm(1..3))^1
    CHECK(micro.divides);

    // With x = 1/2 the weight b+x+1 = 5/2 at b = 1 puts a 5 into the
    // denominators that the reported normalizer does not carry; the
    // divides flag is honest bookkeeping, not an identity.
    IntegralityReport halfshift = integrality_normalization(
        LerchParams(1, 1, 1, Rational(1, 2), {Rational(1)}));
    CHECK(halfshift.scale == 30);
    CHECK(halfshift.divisor == 12);  // (2 * lcm(1..3))^1
    CHECK_FALSE(halfshift.divides);
    // the dyadic part is still controlled
    mpz_class s2 = halfshift.scale, d2 = halfshift.divisor;
    int vs = 0, vd = 0;
    while (s2 % 2 == 0) { s2 /= 2; ++vs; }
    while (d2 % 2 == 0) { d2 /= 2; ++vd; }
    CHECK(vs <= vd);

    IntegralityReport withden = integrality_normalization(
        LerchParams(1, 2, 1, Rational(0), {Rational(1, 2), Rational(1, 3)}));
    CHECK(withden.divides);
}
