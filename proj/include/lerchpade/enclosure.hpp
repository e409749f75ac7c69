#pragma once

#include "lerchpade/rational.hpp"

namespace lerchpade {

/// Interval [lo, hi] of exact rationals guaranteed to bracket a real value.
/// All logarithms in the library are produced in this form; no floating
/// point enters any verdict.
struct Enclosure {
    Rational lo;
    Rational hi;

    Enclosure() = default;
    Enclosure(Rational point) : lo(point), hi(std::move(point)) {}
    Enclosure(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
        if (hi < lo) throw std::invalid_argument("Enclosure: hi < lo");
    }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool definitely_positive() const { return Rational(0) < lo; }
    bool definitely_negative() const { return hi < Rational(0); }

    Enclosure operator-() const { return Enclosure(-hi, -lo); }

    friend Enclosure operator+(const Enclosure& a, const Enclosure& b) {
        return Enclosure(a.lo + b.lo, a.hi + b.hi);
    }
    friend Enclosure operator-(const Enclosure& a, const Enclosure& b) {
        return Enclosure(a.lo - b.hi, a.hi - b.lo);
    }
    /// Scale by an exact rational, flipping endpoints for c < 0.
    friend Enclosure operator*(const Rational& c, const Enclosure& e) {
        if (c.is_negative()) return Enclosure(c * e.hi, c * e.lo);
        return Enclosure(c * e.lo, c * e.hi);
    }
};

inline bool intersects(const Enclosure& a, const Enclosure& b) {
    return !(a.hi < b.lo || b.hi < a.lo);
}

/// Enclosure of log(y) for rational y > 0, width <= tol. Argument is
/// reduced into [1,2) by powers of two, then 2*atanh((y-1)/(y+1)) is
/// summed with an explicit tail bound.
Enclosure log_of(const Rational& y, const Rational& tol);

/// Enclosure of log 2 of width <= tol.
Enclosure log2_enclosure(const Rational& tol);

}  // namespace lerchpade
