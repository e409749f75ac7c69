#pragma once

#include <vector>

#include "lerchpade/rational.hpp"

namespace lerchpade {

/// Valuation at z = infinity of a truncated Laurent tail. When `exact` the
/// first nonzero coefficient sits at index `value`; otherwise every stored
/// coefficient vanished and the order is only known to be >= value.
struct OrdBound {
    long value;
    bool exact;

    bool at_least(long k) const { return value >= k; }
};

/// Truncation of an element of (1/z) L[[1/z]]: the coefficients of
/// 1/z^k0, 1/z^(k0+1), ... over a window of fixed length. Claims about
/// ord_infty are always relative to the window, never extrapolated.
class LaurentTail {
public:
    LaurentTail(long start_order, std::vector<Rational> coeffs)
        : k0_(start_order), c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("LaurentTail: window must be >= 1");
    }

    long start_order() const { return k0_; }
    long window() const { return static_cast<long>(c_.size()); }

    /// Coefficient of 1/z^k; k must lie inside the window.
    const Rational& coeff_at(long k) const {
        if (k < k0_ || k >= k0_ + window()) throw std::out_of_range("LaurentTail: index outside window");
        return c_[k - k0_];
    }

    const std::vector<Rational>& coeffs() const { return c_; }

    OrdBound ord_infty() const {
        for (long j = 0; j < window(); ++j)
            if (!c_[j].is_zero()) return {k0_ + j, true};
        return {k0_ + window(), false};
    }

private:
    long k0_;
    std::vector<Rational> c_;
};

}  // namespace lerchpade
