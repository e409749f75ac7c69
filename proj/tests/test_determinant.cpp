#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "lerchpade/determinant.hpp"

using namespace lerchpade;

namespace {

LerchParams micro(const Rational& a) { return LerchParams(1, 1, 1, Rational(0), {a}); }

}  // namespace

TEST_CASE("plain rational determinant") {
    CHECK(det_rational({{Rational(2)}}) == Rational(2));
    CHECK(det_rational({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}) == Rational(-2));
    // singular
    CHECK(det_rational({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == Rational(0));
    // needs a row swap
    CHECK(det_rational({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}) == Rational(-1));
}

TEST_CASE("micro determinant is a^3/2 at any z") {
    for (const Rational& a : {Rational(1, 2), Rational(2, 3), Rational(5)}) {
        PadeSystem sys = build_system(micro(a));
        Rational expected = a.pow(3) / Rational(2);
        CHECK(delta_at(sys, Rational(0)) == expected);
        CHECK(delta_at(sys, Rational(7)) == expected);
        CHECK(delta_at(sys, Rational(-13, 11)) == expected);
    }
}

TEST_CASE("micro reduced presentation") {
    Rational a(1, 2);
    LerchParams params = micro(a);
    auto rv = r_vector(params, 0);
    REQUIRE(rv.size() == 1);
    CHECK(rv[0] == -a.pow(3) / Rational(6));
    CHECK(delta_reduced(params) == a.pow(3) / Rational(2));
    CHECK(delta_reduction_check(params));
}

TEST_CASE("micro report is fully green") {
    DeltaReport report = delta_constant(micro(Rational(1, 2)));
    CHECK(report.delta == Rational(1, 16));
    CHECK(report.constant_confirmed);
    CHECK(report.nonzero);
    CHECK(report.reduced_value == Rational(1, 16));
    CHECK(report.reduced_matches);
    CHECK(report.ok);
    CHECK(report.z_samples.size() >= 2);
}

TEST_CASE("depth two determinant fixture") {
    // r=2, m=1, n=1, x=0: Delta = -a^9/48
    Rational a(1, 2);
    LerchParams params(2, 1, 1, Rational(0), {a});
    PadeSystem sys = build_system(params);
    CHECK(delta_at(sys, Rational(0)) == -a.pow(9) / Rational(48));
    CHECK(delta_at(sys, Rational(3)) == Rational(-1, 24576));
    CHECK(delta_reduction_check(params));
}

TEST_CASE("reduction identity on mixed parameters") {
    CHECK(delta_reduction_check(LerchParams(1, 2, 1, Rational(0), {Rational(2, 5), Rational(-1, 3)})));
    CHECK(delta_reduction_check(LerchParams(2, 1, 2, Rational(1, 2), {Rational(1, 3)})));
    CHECK(delta_reduction_check(LerchParams(1, 3, 1, Rational(1, 4),
                                            {Rational(1), Rational(1, 2), Rational(-2)})));
}

TEST_CASE("coupling value in one variable matches the closed form") {
    // C(n=1, u, m=1, r=1, x=0, a) = -a^(u+2)/((u+1)(u+2))
    Rational a(3);
    for (unsigned u : {0u, 1u, 2u, 3u}) {
        Rational expected = -a.pow(static_cast<long>(u) + 2) /
                            Rational(static_cast<long>((u + 1) * (u + 2)));
        CHECK(C_direct(1, u, 1, 1, Rational(0), {a}) == expected);
    }
    CHECK(C_direct(1, 0, 1, 1, Rational(0), {Rational(1)}) == Rational(-1, 2));
}

TEST_CASE("coupling value is homogeneous of the predicted degree") {
    unsigned n = 1, u = 1, m = 2, r = 1;
    std::vector<Rational> base{Rational(1, 2), Rational(3)};
    std::vector<Rational> scaled{Rational(3, 2), Rational(9)};  // lambda = 3
    // E = m (r(u+1) + r^2 n) + binom(m,2) (2n+1) r^2
    long E = 2 * (2 + 1) + 1 * 3;
    Rational c0 = C_direct(n, u, m, r, Rational(0), base);
    Rational c1 = C_direct(n, u, m, r, Rational(0), scaled);
    CHECK(c1 == Rational(3).pow(E) * c0);
}

TEST_CASE("single block closed form at depth one") {
    for (unsigned n : {1u, 2u, 3u})
        for (unsigned long v : {0ul, 1ul, 2ul, 3ul})
            for (const Rational& x : {Rational(0), Rational(1, 2)}) {
                Rational direct = single_block_value(n, 1, x, v);
                CHECK(direct == single_block_closed_form_r1(n, x, v));
                CHECK(direct != Rational(0));
            }
    // I(0) at n=1, x=0 is -1/2; I(2) is -1/12
    CHECK(single_block_value(1, 1, Rational(0), 0) == Rational(-1, 2));
    CHECK(single_block_value(1, 1, Rational(0), 2) == Rational(-1, 12));
}

TEST_CASE("block products multiply across evaluation points") {
    // m=2: product of I(u) and I(u + r(n+1))
    unsigned n = 1, u = 0, r = 1;
    Rational lhs = block_product(n, u, 2, r, Rational(0));
    Rational rhs = single_block_value(n, r, Rational(0), u) *
                   single_block_value(n, r, Rational(0), u + r * (n + 1));
    CHECK(lhs == rhs);
    CHECK(lhs == Rational(1, 24));
}

TEST_CASE("factorization witness on the two-point fixture") {
    // n=1, u=0, m=2, r=1, x=0: c = -1/24, pinned sign -1
    auto samples = default_alpha_samples(2, 3);
    FactorizationWitness w = factorization_check(1, 0, 2, 1, Rational(0), samples);
    CHECK(w.power_exponent == 2);       // r(u+1) + r^2 n
    CHECK(w.difference_exponent == 3);  // (2n+1) r^2
    CHECK(w.quotients_consistent);
    CHECK(w.c_nonzero);
    CHECK(w.c_constant == Rational(-1, 24));
    CHECK(w.block_product_value == Rational(1, 24));
    CHECK(w.pinned_sign == -1);
    CHECK(w.matches_blocks);
    CHECK(w.ok);
}

TEST_CASE("factorization witness on one point at depth one") {
    for (unsigned u : {0u, 1u}) {
        FactorizationWitness w = factorization_check(1, u, 1, 1, Rational(0),
                                                     default_alpha_samples(1, 3));
        CHECK(w.ok);
        CHECK(w.c_constant ==
              -Rational(1) / Rational(static_cast<long>((u + 1) * (u + 2))));
    }
}

TEST_CASE("factorization exponents at depth two") {
    FactorizationWitness w = factorization_check(1, 0, 1, 2, Rational(0),
                                                 default_alpha_samples(1, 3));
    CHECK(w.power_exponent == 7);        // r(u+1) + r^2 n + r(r-1)/2 = 2 + 4 + 1
    CHECK(w.difference_exponent == 12);  // (2n+1) r^2
    CHECK(w.ok);
}

TEST_CASE("explicit depth two coupling expansion") {
    // C(n=1, u=0, m=1, r=2, x=0, a): expand (t1-a)^2 (t2-a)^2 (t2-t1),
    // map t1^k -> a^(k+1)/(k+1), t2^k -> a^(k+1)/(k+1)^2
    Rational a(1, 2);
    Rational direct = C_direct(1, 0, 1, 2, Rational(0), {a});
    MultiPoly p = coupling_poly(1, 0, 1, 2, {a});
    std::vector<std::vector<Rational>> table(2);
    for (unsigned v = 0; v < 2; ++v)
        for (long k = 0; k <= 5; ++k)
            table[v].push_back(a.pow(k + 1) / Rational(k + 1).pow(v == 0 ? 1 : 2));
    CHECK(p.collapse(table) == direct);
    CHECK(direct != Rational(0));
}

TEST_CASE("default alpha samples are valid tuples") {
    auto samples = default_alpha_samples(3, 4);
    REQUIRE(samples.size() == 4);
    for (const auto& t : samples) {
        REQUIRE(t.size() == 3);
        LerchParams(1, 3, 1, Rational(0), t);  // throws if invalid
    }
    CHECK_THROWS_AS(default_alpha_samples(6, 12), std::invalid_argument);
}

TEST_CASE("expansion caps bite") {
    ExpansionCaps caps;
    caps.max_vars = 2;
    CHECK_THROWS_AS(coupling_poly(1, 0, 3, 1, {Rational(1), Rational(2), Rational(3)}, caps),
                    CapExceeded);
    ExpansionCaps tiny;
    tiny.max_terms = 4;
    CHECK_THROWS_AS(C_direct(1, 0, 2, 1, Rational(0), {Rational(1), Rational(2)}, tiny),
                    CapExceeded);
}