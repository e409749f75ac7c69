#include "lerchpade/operators.hpp"

#include "lerchpade/numtheory.hpp"

namespace lerchpade {

namespace {

template <typename Mult>
UniPoly diagonal(const UniPoly& p, Mult&& mult) {
    if (p.is_zero()) return UniPoly{};
    std::vector<Rational> c(p.coeffs());
    for (long k = 0; k <= p.degree(); ++k) c[k] *= mult(k);
    return UniPoly(std::move(c));
}

}  // namespace

UniPoly prim_x(const OperatorContext& ctx, const UniPoly& p) {
    return diagonal(p, [&](long k) { return (Rational(k) + ctx.x + Rational(1)).inv(); });
}

UniPoly deri_x(const OperatorContext& ctx, const UniPoly& p) {
    return diagonal(p, [&](long k) { return Rational(k) + ctx.x + Rational(1); });
}

UniPoly s_nx(const OperatorContext& ctx, unsigned long n, const UniPoly& p) {
    Rational nfact = pochhammer(Rational(1), n);
    return diagonal(p, [&](long k) {
        return pochhammer(Rational(k) + ctx.x + Rational(1), n) / nfact;
    });
}

UniPoly op_iterate(const OperatorContext& ctx, DiagonalOp op, long k, const UniPoly& p) {
    bool use_prim = (op == DiagonalOp::Prim) == (k >= 0);
    long reps = k >= 0 ? k : -k;
    return diagonal(p, [&](long deg) {
        Rational w = Rational(deg) + ctx.x + Rational(1);
        if (use_prim) w = w.inv();
        return w.pow(reps);
    });
}

Rational phi(const OperatorContext& ctx, const Rational& alpha, long l, const UniPoly& p) {
    Rational acc(0);
    Rational apow = alpha;  // alpha^(k+1), starting at k = 0
    for (long k = 0; k <= p.degree(); ++k) {
        const Rational& c = p.coeff(k);
        if (!c.is_zero()) {
            Rational w = (Rational(k) + ctx.x + Rational(1)).pow(-l);
            acc += c * apow * w;
        }
        apow *= alpha;
    }
    return acc;
}

}  // namespace lerchpade
