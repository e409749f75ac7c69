#include "lerchpade/multipoly.hpp"

namespace lerchpade {

MultiPoly MultiPoly::constant(unsigned arity, const Rational& v) {
    MultiPoly p(arity);
    if (!v.is_zero()) p.terms_.emplace(Exponents(arity, 0), v);
    return p;
}

MultiPoly MultiPoly::monomial(Exponents exps, const Rational& coeff) {
    MultiPoly p(static_cast<unsigned>(exps.size()));
    if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), coeff);
    return p;
}

MultiPoly MultiPoly::from_univariate(unsigned arity, unsigned var, const UniPoly& p) {
    if (var >= arity) throw std::invalid_argument("MultiPoly::from_univariate: variable out of range");
    MultiPoly out(arity);
    for (long k = 0; k <= p.degree(); ++k) {
        Rational c = p.coeff(k);
        if (c.is_zero()) continue;
        Exponents e(arity, 0);
        e[var] = static_cast<unsigned>(k);
        out.terms_.emplace(std::move(e), std::move(c));
    }
    return out;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& coeff) {
    if (exps.size() != arity_) throw std::invalid_argument("MultiPoly::add_term: arity mismatch");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.emplace(exps, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly::Exponents MultiPoly::max_exponents() const {
    Exponents mx(arity_, 0);
    for (const auto& [e, c] : terms_)
        for (unsigned v = 0; v < arity_; ++v) mx[v] = std::max(mx[v], e[v]);
    return mx;
}

Rational MultiPoly::collapse(const std::vector<std::vector<Rational>>& table) const {
    if (table.size() != arity_) throw std::invalid_argument("MultiPoly::collapse: table arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (unsigned v = 0; v < arity_; ++v) {
            if (e[v] >= table[v].size()) throw std::invalid_argument("MultiPoly::collapse: table too short");
            term *= table[v][e[v]];
        }
        acc += term;
    }
    return acc;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
    MultiPoly out(p.arity_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, s * c);
    return out;
}

MultiPoly mul(const MultiPoly& a, const MultiPoly& b, std::size_t max_terms) {
    if (a.arity() != b.arity()) throw std::invalid_argument("MultiPoly: arity mismatch");
    MultiPoly out(a.arity());
    MultiPoly::Exponents e(a.arity());
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            for (unsigned v = 0; v < a.arity(); ++v) e[v] = ea[v] + eb[v];
            out.add_term(e, ca * cb);
            if (out.term_count() > max_terms)
                throw CapExceeded("multivariate expansion exceeds term cap; reduce r, m, n, or u");
        }
    }
    return out;
}

}  // namespace lerchpade
