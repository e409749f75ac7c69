#include "lerchpade/determinant.hpp"

#include "lerchpade/numtheory.hpp"
#include "lerchpade/operators.hpp"

namespace lerchpade {

Rational det_rational(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw std::invalid_argument("det_rational: matrix must be square");
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        Rational inv = a[col][col].inv();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a[i][col].is_zero()) continue;
            Rational f = a[i][col] * inv;
            for (std::size_t j = col + 1; j < n; ++j) a[i][j] -= f * a[col][j];
            a[i][col] = Rational(0);
        }
    }
    return det;
}

Rational delta_at(const PadeSystem& sys, const Rational& z0) {
    const unsigned rm = sys.params.rm();
    std::vector<std::vector<Rational>> a(rm + 1, std::vector<Rational>(rm + 1));
    for (unsigned l = 0; l <= rm; ++l) {
        a[0][l] = sys.P[l].eval(z0);
        unsigned row = 1;
        for (unsigned i = 1; i <= sys.params.m; ++i)
            for (unsigned s = 1; s <= sys.params.r; ++s) a[row++][l] = sys.q(l, i, s).eval(z0);
    }
    return det_rational(std::move(a));
}

std::vector<Rational> r_vector(const LerchParams& params, unsigned l) {
    if (l >= params.rm()) throw std::invalid_argument("r_vector: l out of range");
    OperatorContext ctx(params.x);
    UniPoly tna = build_A(params, l).shifted(params.n);
    std::vector<Rational> v;
    v.reserve(params.rm());
    for (unsigned i = 1; i <= params.m; ++i)
        for (unsigned s = 1; s <= params.r; ++s)
            v.push_back(phi(ctx, params.alpha(i), static_cast<long>(s), tna));
    return v;
}

Rational delta_reduced(const LerchParams& params) {
    const unsigned rm = params.rm();
    std::vector<std::vector<Rational>> a(rm, std::vector<Rational>(rm));
    for (unsigned l = 0; l < rm; ++l) {
        std::vector<Rational> col = r_vector(params, l);
        for (unsigned row = 0; row < rm; ++row) a[row][l] = col[row];
    }
    Rational det = det_rational(std::move(a));
    unsigned long rmn = static_cast<unsigned long>(rm) * params.n;
    Rational pref = pochhammer(Rational(static_cast<long>(1 + rmn + rm)) + params.x, params.n) /
                    pochhammer(Rational(1), params.n);
    Rational result = pref.pow(params.r) * det;
    if (rmn % 2 == 1) result = -result;
    return result;
}

DeltaReport delta_constant(const LerchParams& params) {
    PadeSystem sys = build_system(params);
    const unsigned rm = params.rm();
    unsigned long degree_bound = 0;
    for (unsigned l = 0; l <= rm; ++l) degree_bound += static_cast<unsigned long>(rm) * params.n + l;
    unsigned long points = std::max<unsigned long>(2, degree_bound + 1);

    DeltaReport report;
    report.z_samples.reserve(points);
    report.constant_confirmed = true;
    for (unsigned long t = 0; t < points; ++t) {
        Rational z0(static_cast<long>(t));
        Rational v = delta_at(sys, z0);
        if (t == 0)
            report.delta = v;
        else if (v != report.delta)
            report.constant_confirmed = false;
        report.z_samples.push_back(std::move(z0));
    }
    report.nonzero = !report.delta.is_zero();
    report.reduced_value = delta_reduced(params);
    report.reduced_matches = report.constant_confirmed && report.reduced_value == report.delta;
    report.ok = report.constant_confirmed && report.nonzero && report.reduced_matches;
    return report;
}

bool delta_reduction_check(const LerchParams& params) { return delta_constant(params).ok; }

namespace {

void check_vars(unsigned vars, const ExpansionCaps& caps) {
    if (vars == 0) throw std::invalid_argument("expansion: no variables");
    if (vars > caps.max_vars) throw CapExceeded("expansion: too many variables (cap max_vars)");
}

/// prod over lexicographically ordered variable pairs of (t_b - t_a).
MultiPoly vandermonde_factor(unsigned vars, std::size_t max_terms) {
    MultiPoly acc = MultiPoly::constant(vars, Rational(1));
    for (unsigned a = 0; a < vars; ++a) {
        for (unsigned b = a + 1; b < vars; ++b) {
            MultiPoly diff(vars);
            MultiPoly::Exponents e(vars, 0);
            e[b] = 1;
            diff.add_term(e, Rational(1));
            e[b] = 0;
            e[a] = 1;
            diff.add_term(e, Rational(-1));
            acc = mul(acc, diff, max_terms);
        }
    }
    return acc;
}

}  // namespace

MultiPoly coupling_poly(unsigned n, unsigned u, unsigned m, unsigned r,
                        const std::vector<Rational>& alphas, const ExpansionCaps& caps) {
    const unsigned vars = r * m;
    check_vars(vars, caps);
    if (alphas.size() != m) throw std::invalid_argument("coupling_poly: expected m alphas");

    UniPoly block = UniPoly::constant(Rational(1));
    for (const Rational& a : alphas) {
        UniPoly lin(std::vector<Rational>{-a, Rational(1)});
        block = block * lin.pow(static_cast<unsigned long>(r) * n);
    }
    block = block.shifted(u);  // t^u prod_j (t - alpha_j)^(rn), same for every variable

    MultiPoly acc = MultiPoly::constant(vars, Rational(1));
    for (unsigned v = 0; v < vars; ++v)
        acc = mul(acc, MultiPoly::from_univariate(vars, v, block), caps.max_terms);
    return mul(acc, vandermonde_factor(vars, caps.max_terms), caps.max_terms);
}

Rational C_direct(unsigned n, unsigned u, unsigned m, unsigned r, const Rational& x,
                  const std::vector<Rational>& alphas, const ExpansionCaps& caps) {
    MultiPoly p = coupling_poly(n, u, m, r, alphas, caps);
    const unsigned vars = r * m;
    MultiPoly::Exponents mx = p.max_exponents();
    std::vector<std::vector<Rational>> table(vars);
    for (unsigned i = 1; i <= m; ++i) {
        for (unsigned s = 1; s <= r; ++s) {
            unsigned v = (i - 1) * r + (s - 1);
            table[v].reserve(mx[v] + 1);
            Rational apow = alphas[i - 1];
            for (unsigned k = 0; k <= mx[v]; ++k) {
                table[v].push_back(apow * (Rational(static_cast<long>(k)) + x + Rational(1))
                                              .pow(-static_cast<long>(s)));
                apow *= alphas[i - 1];
            }
        }
    }
    return p.collapse(table);
}

Rational single_block_value(unsigned n, unsigned r, const Rational& x, unsigned long v,
                            const ExpansionCaps& caps) {
    check_vars(r, caps);
    UniPoly lin(std::vector<Rational>{Rational(-1), Rational(1)});
    UniPoly block = lin.pow(static_cast<unsigned long>(r) * n).shifted(v);

    MultiPoly acc = MultiPoly::constant(r, Rational(1));
    for (unsigned s = 0; s < r; ++s)
        acc = mul(acc, MultiPoly::from_univariate(r, s, block), caps.max_terms);
    acc = mul(acc, vandermonde_factor(r, caps.max_terms), caps.max_terms);

    MultiPoly::Exponents mx = acc.max_exponents();
    std::vector<std::vector<Rational>> table(r);
    for (unsigned s = 1; s <= r; ++s) {
        table[s - 1].reserve(mx[s - 1] + 1);
        for (unsigned k = 0; k <= mx[s - 1]; ++k)
            table[s - 1].push_back(
                (Rational(static_cast<long>(k)) + x + Rational(1)).pow(-static_cast<long>(s)));
    }
    return acc.collapse(table);
}

Rational single_block_closed_form_r1(unsigned n, const Rational& x, unsigned long v) {
    Rational denom = pochhammer(Rational(static_cast<long>(v + 1)) + x, n + 1);
    Rational result = pochhammer(Rational(1), n) / denom;
    return n % 2 == 1 ? -result : result;
}

Rational block_product(unsigned n, unsigned u, unsigned m, unsigned r, const Rational& x,
                       const ExpansionCaps& caps) {
    Rational acc(1);
    for (unsigned i = 1; i <= m; ++i) {
        unsigned long v = u + static_cast<unsigned long>(i - 1) * r * (n + 1);
        acc *= single_block_value(n, r, x, v, caps);
    }
    return acc;
}

FactorizationWitness factorization_check(unsigned n, unsigned u, unsigned m, unsigned r,
                                         const Rational& x,
                                         const std::vector<std::vector<Rational>>& alpha_samples,
                                         const ExpansionCaps& caps) {
    if (alpha_samples.size() < 2)
        throw std::invalid_argument("factorization_check: need at least 2 alpha samples");

    FactorizationWitness w;
    w.n = n;
    w.u = u;
    w.m = m;
    w.r = r;
    w.x = x;
    w.power_exponent = static_cast<unsigned long>(r) * (u + 1) +
                       static_cast<unsigned long>(r) * r * n +
                       static_cast<unsigned long>(r) * (r - 1) / 2;
    w.difference_exponent = static_cast<unsigned long>(2 * n + 1) * r * r;
    w.alpha_samples = alpha_samples;

    for (const auto& alphas : alpha_samples) {
        if (alphas.size() != m)
            throw std::invalid_argument("factorization_check: sample arity mismatch");
        Rational c = C_direct(n, u, m, r, x, alphas, caps);
        Rational predicted(1);
        for (const Rational& a : alphas) predicted *= a.pow(static_cast<long>(w.power_exponent));
        for (unsigned i1 = 0; i1 < m; ++i1)
            for (unsigned i2 = i1 + 1; i2 < m; ++i2)
                predicted *= (alphas[i2] - alphas[i1]).pow(static_cast<long>(w.difference_exponent));
        w.quotients.push_back(c / predicted);
        w.C_values.push_back(std::move(c));
        w.predicted_products.push_back(std::move(predicted));
    }

    w.quotients_consistent = true;
    for (const Rational& q : w.quotients)
        if (q != w.quotients.front()) w.quotients_consistent = false;
    w.c_constant = w.quotients.front();
    w.c_nonzero = !w.c_constant.is_zero();

    w.block_product_value = block_product(n, u, m, r, x, caps);
    if (w.c_constant == w.block_product_value) {
        w.matches_blocks = true;
        w.pinned_sign = 1;
    } else if (w.c_constant == -w.block_product_value) {
        w.matches_blocks = true;
        w.pinned_sign = -1;
    }
    w.ok = w.quotients_consistent && w.c_nonzero && w.matches_blocks;
    return w;
}

std::vector<std::vector<Rational>> default_alpha_samples(unsigned m, unsigned count) {
    static const long nums[] = {1, 1, 1, 2, 1, 3, 2, 1, 2, 3, 3, 5};
    static const long dens[] = {1, 2, 3, 3, 4, 4, 1, 5, 5, 1, 5, 2};
    const unsigned pool = sizeof(nums) / sizeof(nums[0]);
    if (m + count - 1 > pool)
        throw std::invalid_argument("default_alpha_samples: pool too small for m and count");
    std::vector<std::vector<Rational>> samples;
    samples.reserve(count);
    for (unsigned t = 0; t < count; ++t) {
        std::vector<Rational> tup;
        tup.reserve(m);
        for (unsigned i = 0; i < m; ++i) tup.emplace_back(nums[t + i], dens[t + i]);
        samples.push_back(std::move(tup));
    }
    return samples;
}

}  // namespace lerchpade
