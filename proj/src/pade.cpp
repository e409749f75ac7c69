#include "lerchpade/pade.hpp"

#include <set>

namespace lerchpade {

LerchParams::LerchParams(unsigned r_, unsigned m_, unsigned n_, Rational x_,
                         std::vector<Rational> alphas_)
    : r(r_), m(m_), n(n_), x(std::move(x_)), alphas(std::move(alphas_)) {
    if (r == 0 || m == 0 || n == 0) throw std::invalid_argument("LerchParams: r, m, n must be positive");
    if (x.is_negative() || !(x < Rational(1)))
        throw std::invalid_argument("LerchParams: x must lie in [0,1)");
    if (alphas.size() != m) throw std::invalid_argument("LerchParams: expected m alphas");
    std::set<Rational> seen;
    for (const Rational& a : alphas) {
        if (a.is_zero()) throw std::invalid_argument("LerchParams: alphas must be nonzero");
        if (!seen.insert(a).second)
            throw std::invalid_argument("LerchParams: alphas must be pairwise distinct");
    }
}

UniPoly build_A(const LerchParams& params, unsigned l) {
    if (l > params.rm()) throw std::invalid_argument("build_A: l out of range");
    UniPoly a = UniPoly::constant(Rational(1));
    for (const Rational& alpha : params.alphas) {
        UniPoly lin(std::vector<Rational>{-alpha, Rational(1)});
        a = a * lin.pow(static_cast<unsigned long>(params.r) * params.n);
    }
    return a.shifted(l);
}

UniPoly build_P(const LerchParams& params, unsigned l) {
    OperatorContext ctx(params.x);
    UniPoly p = build_A(params, l);
    for (unsigned rep = 0; rep < params.r; ++rep) p = s_nx(ctx, params.n, p);
    return p;
}

UniPoly build_Q(const LerchParams& params, unsigned l, unsigned i, unsigned s) {
    if (i < 1 || i > params.m || s < 1 || s > params.r)
        throw std::invalid_argument("build_Q: index out of range");
    OperatorContext ctx(params.x);
    const Rational& alpha = params.alpha(i);
    DividedDifference dd(build_P(params, l));
    return dd.collapse_t([&](long b) {
        return alpha.pow(b + 1) * (Rational(b) + ctx.x + Rational(1)).pow(-static_cast<long>(s));
    });
}

PadeSystem build_system(const LerchParams& params) {
    const unsigned rm = params.rm();
    PadeSystem sys{params, {}, {}};
    sys.P.reserve(rm + 1);
    sys.Q.resize(rm + 1);
    OperatorContext ctx(params.x);
    for (unsigned l = 0; l <= rm; ++l) {
        UniPoly p = build_P(params, l);
        DividedDifference dd(p);
        sys.Q[l].resize(params.m);
        for (unsigned i = 1; i <= params.m; ++i) {
            const Rational& alpha = params.alpha(i);
            sys.Q[l][i - 1].reserve(params.r);
            for (unsigned s = 1; s <= params.r; ++s) {
                sys.Q[l][i - 1].push_back(dd.collapse_t([&](long b) {
                    return alpha.pow(b + 1) *
                           (Rational(b) + ctx.x + Rational(1)).pow(-static_cast<long>(s));
                }));
            }
        }
        sys.P.push_back(std::move(p));
    }
    return sys;
}

std::vector<Rational> lerch_series_coeffs(const Rational& x, const Rational& alpha,
                                          unsigned long s, unsigned long K) {
    std::vector<Rational> c;
    c.reserve(K + 1);
    Rational apow = alpha;
    for (unsigned long k = 0; k <= K; ++k) {
        c.push_back(apow * (Rational(static_cast<long>(k)) + x + Rational(1)).pow(-static_cast<long>(s)));
        apow *= alpha;
    }
    return c;
}

LaurentTail remainder_tail(const LerchParams& params, unsigned l, unsigned i, unsigned s,
                           unsigned long K) {
    OperatorContext ctx(params.x);
    const Rational& alpha = params.alpha(i);
    UniPoly p = build_P(params, l);
    std::vector<Rational> tail;
    tail.reserve(K + 1);
    for (unsigned long k = 0; k <= K; ++k) {
        // phi applied to T^k P(T): each coefficient p_j lands on degree j+k.
        Rational acc(0);
        Rational apow = alpha.pow(static_cast<long>(k) + 1);
        for (long j = 0; j <= p.degree(); ++j) {
            const Rational& c = p.coeff(j);
            if (!c.is_zero()) {
                Rational w = (Rational(j + static_cast<long>(k)) + ctx.x + Rational(1))
                                 .pow(-static_cast<long>(s));
                acc += c * apow * w;
            }
            apow *= alpha;
        }
        tail.push_back(std::move(acc));
    }
    return LaurentTail(1, std::move(tail));
}

OrderReport verify_order(const LerchParams& params, unsigned long K) {
    if (K < params.n + 1) throw std::invalid_argument("verify_order: window must be >= n + 1");
    OrderReport report;
    report.window = K;
    report.required_order = params.n + 1;
    report.degrees_ok = true;
    bool orders_ok = true;
    for (unsigned l = 0; l <= params.rm(); ++l) {
        UniPoly p = build_P(params, l);
        if (p.degree() != static_cast<long>(params.rm() * params.n + l)) report.degrees_ok = false;
        for (unsigned i = 1; i <= params.m; ++i) {
            for (unsigned s = 1; s <= params.r; ++s) {
                OrdBound ord = remainder_tail(params, l, i, s, K).ord_infty();
                if (!ord.at_least(static_cast<long>(params.n) + 1)) orders_ok = false;
                report.entries.push_back({l, i, s, ord});
            }
        }
    }
    report.pass = orders_ok && report.degrees_ok;
    return report;
}

}  // namespace lerchpade
