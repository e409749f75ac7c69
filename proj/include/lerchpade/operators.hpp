#pragma once

#include "lerchpade/rational.hpp"
#include "lerchpade/unipoly.hpp"

namespace lerchpade {

/// Shift parameter x of the weighted primitive/derivative operators. The
/// library runs computations over the rationals with 0 <= x < 1, which
/// keeps every weight k+x+1 nonzero.
struct OperatorContext {
    Rational x;

    explicit OperatorContext(Rational x_) : x(std::move(x_)) {
        if (x.is_negative() || !(x < Rational(1)))
            throw std::invalid_argument("OperatorContext: x must lie in [0,1)");
    }
};

enum class DiagonalOp { Prim, Deri };

/// Weighted formal primitive: T^k -> T^k / (k+x+1).
UniPoly prim_x(const OperatorContext& ctx, const UniPoly& p);

/// Weighted derivative, the inverse of prim_x: T^k -> (k+x+1) T^k.
UniPoly deri_x(const OperatorContext& ctx, const UniPoly& p);

/// Divided derivative: T^k -> ((k+x+1)_n / n!) T^k. n = 0 is the identity;
/// n = 1 coincides with deri_x.
UniPoly s_nx(const OperatorContext& ctx, unsigned long n, const UniPoly& p);

/// k-fold iterate of prim_x or deri_x; k = 0 is the identity and k < 0
/// iterates the inverse map.
UniPoly op_iterate(const OperatorContext& ctx, DiagonalOp op, long k, const UniPoly& p);

/// Evaluation functional: sum_k p_k T^k -> sum_k p_k alpha^(k+1) / (k+x+1)^l.
/// Negative l multiplies by (k+x+1)^(-l) instead.
Rational phi(const OperatorContext& ctx, const Rational& alpha, long l, const UniPoly& p);

}  // namespace lerchpade
