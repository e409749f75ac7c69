#include "lerchpade/oracle.hpp"

#include <algorithm>

namespace lerchpade {

namespace {

// Rows cleared to integers; elimination by the fraction-free two-step rule,
// pivoting on the entry of largest bit length in the current column.
struct Echelon {
    std::vector<std::vector<mpz_class>> a;
    std::vector<unsigned long> pivot_cols;
};

Echelon echelonize(std::vector<std::vector<mpz_class>> a, unsigned long cols) {
    mpz_class prev = 1;
    std::size_t row = 0;
    std::vector<unsigned long> pivot_cols;
    for (unsigned long col = 0; col < cols && row < a.size(); ++col) {
        std::size_t best = a.size();
        std::size_t best_bits = 0;
        for (std::size_t i = row; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            std::size_t bits = mpz_sizeinbase(a[i][col].get_mpz_t(), 2);
            if (best == a.size() || bits > best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == a.size()) continue;
        std::swap(a[row], a[best]);
        for (std::size_t i = row + 1; i < a.size(); ++i) {
            for (unsigned long j = col + 1; j < cols; ++j) {
                mpz_class t = a[row][col] * a[i][j] - a[i][col] * a[row][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][col] = 0;
        }
        prev = a[row][col];
        pivot_cols.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivot_cols)};
}

void normalize(std::vector<Rational>& v) {
    mpz_class den_lcm = 1;
    for (const Rational& e : v) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.den().get_mpz_t());
    mpz_class num_gcd = 0;
    std::vector<mpz_class> ints(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        ints[i] = v[i].num() * (den_lcm / v[i].den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), ints[i].get_mpz_t());
    }
    if (num_gcd == 0) return;
    int lead_sign = 0;
    for (const mpz_class& e : ints) {
        if (e != 0) {
            lead_sign = sgn(e);
            break;
        }
    }
    if (lead_sign < 0) num_gcd = -num_gcd;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(mpz_class(ints[i] / num_gcd));
}

}  // namespace

unsigned long OracleProblem::condition_count() const {
    unsigned long n = 0;
    for (unsigned long w : weights) n += w;
    return n;
}

OracleSolution oracle_solve(const OracleProblem& problem) {
    if (problem.fcoeffs.size() != problem.weights.size())
        throw std::invalid_argument("oracle_solve: one weight per series required");
    const unsigned long M = problem.degree;
    const unsigned long cols = M + 1;

    std::vector<std::vector<mpz_class>> rows;
    for (std::size_t j = 0; j < problem.fcoeffs.size(); ++j) {
        const auto& c = problem.fcoeffs[j];
        if (c.size() < M + problem.weights[j])
            throw std::invalid_argument("oracle_solve: series window too short for the conditions");
        for (unsigned long w = 1; w <= problem.weights[j]; ++w) {
            mpz_class den_lcm = 1;
            for (unsigned long d = 0; d < cols; ++d)
                mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c[d + w - 1].den().get_mpz_t());
            std::vector<mpz_class> row(cols);
            for (unsigned long d = 0; d < cols; ++d)
                row[d] = c[d + w - 1].num() * (den_lcm / c[d + w - 1].den());
            rows.push_back(std::move(row));
        }
    }

    OracleSolution sol;
    sol.conditions = problem.condition_count();

    Echelon ech = echelonize(std::move(rows), cols);
    const auto& pc = ech.pivot_cols;
    std::vector<bool> is_pivot(cols, false);
    for (unsigned long c : pc) is_pivot[c] = true;

    for (unsigned long f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> x(cols, Rational(0));
        x[f] = Rational(1);
        for (std::size_t t = pc.size(); t-- > 0;) {
            Rational acc(0);
            for (unsigned long j = pc[t] + 1; j < cols; ++j)
                if (!x[j].is_zero()) acc += Rational(ech.a[t][j]) * x[j];
            x[pc[t]] = -acc / Rational(ech.a[t][pc[t]]);
        }
        normalize(x);
        sol.basis.push_back(std::move(x));
    }
    return sol;
}

bool oracle_satisfies(const OracleProblem& problem, const UniPoly& P0) {
    const unsigned long M = problem.degree;
    if (P0.degree() > static_cast<long>(M)) return false;
    for (std::size_t j = 0; j < problem.fcoeffs.size(); ++j) {
        const auto& c = problem.fcoeffs[j];
        if (c.size() < M + problem.weights[j])
            throw std::invalid_argument("oracle_satisfies: series window too short");
        for (unsigned long w = 1; w <= problem.weights[j]; ++w) {
            Rational acc(0);
            for (unsigned long d = 0; d <= M; ++d) {
                Rational p = P0.coeff(static_cast<long>(d));
                if (!p.is_zero()) acc += p * c[d + w - 1];
            }
            if (!acc.is_zero()) return false;
        }
    }
    return true;
}

UniPoly oracle_polynomial_part(const UniPoly& P0, const std::vector<Rational>& fcoeffs) {
    if (P0.degree() >= 1 && fcoeffs.size() < static_cast<std::size_t>(P0.degree()))
        throw std::invalid_argument("oracle_polynomial_part: series window too short");
    DividedDifference dd(P0);
    return dd.collapse_t([&](long b) { return fcoeffs[b]; });
}

}  // namespace lerchpade
