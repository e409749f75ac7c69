#include "lerchpade/criterion.hpp"

#include "lerchpade/numtheory.hpp"

namespace lerchpade {

namespace {

Rational max_abs(const std::vector<Rational>& v) {
    Rational mx = v.front().abs();
    for (const Rational& a : v) mx = max(mx, a.abs());
    return mx;
}

Rational min_abs(const std::vector<Rational>& v) {
    Rational mn = v.front().abs();
    for (const Rational& a : v) mn = min(mn, a.abs());
    return mn;
}

Rational den_x_addend(const Rational& x) { return Rational(x.den()); }

void require_beta_dominates(const LerchParams& params, const BigLogNumber& beta,
                            const Rational& tol) {
    if (beta.cmp_abs(max_abs(params.alphas), tol) <= 0)
        throw std::domain_error("criterion: |beta| must exceed max |alpha_i|");
}

}  // namespace

BigLogNumber BigLogNumber::from_rational(Rational v) {
    if (v.is_zero()) throw std::invalid_argument("BigLogNumber: value must be nonzero");
    BigLogNumber b;
    b.form_ = Form::Exact;
    b.value_ = std::move(v);
    return b;
}

BigLogNumber BigLogNumber::from_power(Rational base, mpz_class exponent) {
    if (base.is_zero()) throw std::invalid_argument("BigLogNumber: base must be nonzero");
    if (exponent < 0) throw std::invalid_argument("BigLogNumber: exponent must be nonnegative");
    BigLogNumber b;
    b.form_ = Form::Power;
    b.value_ = std::move(base);
    b.exponent_ = std::move(exponent);
    return b;
}

BigLogNumber BigLogNumber::from_log_point(Rational log_value) {
    BigLogNumber b;
    b.form_ = Form::LogPoint;
    b.value_ = std::move(log_value);
    return b;
}

const Rational& BigLogNumber::exact_value() const {
    if (form_ != Form::Exact) throw std::logic_error("BigLogNumber: not an exact rational");
    return value_;
}

Enclosure BigLogNumber::log_abs(const Rational& tol) const {
    switch (form_) {
        case Form::Exact:
            return log_of(value_.abs(), tol);
        case Form::Power: {
            Rational b = value_.abs();
            if (exponent_ == 0 || b == Rational(1)) return Enclosure(Rational(0));
            return Rational(exponent_) * log_of(b, tol / Rational(exponent_));
        }
        case Form::LogPoint:
            return Enclosure(value_);
    }
    throw std::logic_error("BigLogNumber: bad form");
}

std::vector<std::pair<mpz_class, mpz_class>> BigLogNumber::den_factorization() const {
    std::vector<std::pair<mpz_class, mpz_class>> out;
    switch (form_) {
        case Form::Exact:
            for (const auto& [p, e] : factorize(value_.den())) out.emplace_back(p, mpz_class(e));
            break;
        case Form::Power:
            if (exponent_ > 0)
                for (const auto& [p, e] : factorize(value_.abs().den()))
                    out.emplace_back(p, mpz_class(e) * exponent_);
            break;
        case Form::LogPoint:
            break;  // integer by contract
    }
    return out;
}

int BigLogNumber::cmp_abs(const Rational& a, const Rational& tol) const {
    if (!(Rational(0) < a)) throw std::domain_error("BigLogNumber::cmp_abs: threshold must be positive");
    if (form_ == Form::Exact) {
        Rational v = value_.abs();
        return v < a ? -1 : (a < v ? 1 : 0);
    }
    if (form_ == Form::Power) {
        // exact equality first: |base|^e = a forces a small exponent unless |base| = 1
        Rational b = value_.abs();
        if (exponent_ == 0 || b == Rational(1)) {
            Rational one(1);
            return a < one ? 1 : (one < a ? -1 : 0);
        }
        std::size_t abits = mpz_sizeinbase(a.num().get_mpz_t(), 2) +
                            mpz_sizeinbase(a.den().get_mpz_t(), 2);
        if (mpz_cmp_ui(exponent_.get_mpz_t(), abits + 2) <= 0) {
            if (b.pow(static_cast<long>(exponent_.get_ui())) == a) return 0;
        }
    } else if (value_.is_zero() && a == Rational(1)) {
        return 0;  // log-point 0 against threshold 1
    }
    Rational t = tol;
    for (int iter = 0; iter < 64; ++iter) {
        Enclosure lb = log_abs(t);
        Enclosure la = log_of(a, t);
        if (la.hi < lb.lo) return 1;
        if (lb.hi < la.lo) return -1;
        t = t / Rational(65536);
    }
    throw std::runtime_error("BigLogNumber::cmp_abs: comparison did not separate");
}

std::string BigLogNumber::describe() const {
    switch (form_) {
        case Form::Exact:
            return value_.str();
        case Form::Power:
            return value_.str() + "^" + exponent_.get_str();
        case Form::LogPoint:
            return "exp(" + value_.str() + ")";
    }
    return {};
}

DenCombined combined_denominator(const std::vector<Rational>& alphas, const BigLogNumber& beta,
                                 const Rational& tol) {
    DenCombined out;
    mpz_class A = den_of_set(alphas);
    out.D = A;
    std::vector<std::pair<mpz_class, mpz_class>> huge;
    for (const auto& [p, e] : beta.den_factorization()) {
        mpz_class rest = A;
        mpz_class vA = 0;
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
            rest /= p;
            ++vA;
        }
        mpz_class extra = e - vA;
        if (extra <= 0) continue;
        // materialize the extra power only while it stays small
        if (out.exact && extra * static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 2)) < 65536) {
            mpz_class ppow;
            mpz_pow_ui(ppow.get_mpz_t(), p.get_mpz_t(), extra.get_ui());
            out.D *= ppow;
        } else {
            out.exact = false;
            huge.emplace_back(p, extra);
        }
    }
    const Rational sub = tol / Rational(static_cast<long>(huge.size() + 1));
    out.log_D = log_of(Rational(out.D), sub);
    for (const auto& [p, e] : huge)
        out.log_D = out.log_D + Rational(e) * log_of(Rational(p), sub / Rational(e));
    return out;
}

Enclosure compute_A_frak(const LerchParams& params, const BigLogNumber& beta, const Rational& tol) {
    require_beta_dominates(params, beta, tol);
    const long rm = static_cast<long>(params.rm());
    const long r = static_cast<long>(params.r);
    auto sub = [&](long coeff) { return tol / Rational(8 * coeff); };

    Enclosure log_beta = beta.log_abs(sub(1));
    Enclosure log_max_alpha = log_of(max_abs(params.alphas), sub(rm + 1));
    DenCombined D = combined_denominator(params.alphas, beta, sub(rm));
    Enclosure log_52 = log_of(Rational(5, 2), sub(rm * r));
    Enclosure log_3 = log_of(Rational(3), sub(r));
    Enclosure log_mu = mu_of(params.x).log_enclosure(sub(r));

    Enclosure inner = Rational(rm) * (D.log_D + Rational(r) * (Enclosure(den_x_addend(params.x)) + log_52)) +
                      Rational(r) * (log_3 + log_mu);
    return log_beta - Rational(rm + 1) * log_max_alpha - inner;
}

Enclosure compute_calA1(const LerchParams& params, const BigLogNumber& beta, const Rational& tol) {
    require_beta_dominates(params, beta, tol);
    const long rm = static_cast<long>(params.rm());
    const long r = static_cast<long>(params.r);
    const long m = static_cast<long>(params.m);
    auto sub = [&](long coeff) { return tol / Rational(8 * coeff); };

    DenCombined D = combined_denominator(params.alphas, beta, sub(rm));
    Enclosure log_2 = log2_enclosure(sub(rm * r));
    Enclosure log_3 = log_of(Rational(3), sub(1));
    Enclosure log_mu = mu_of(params.x).log_enclosure(sub(r));
    Rational min_alpha = min_abs(params.alphas);

    Enclosure log_ratio(Rational(0));  // log max(1, min|alpha|^{-1} |beta|)
    Enclosure alpha_sum(Rational(0));  // sum_i log(2^r |alpha_i| + 3^r max(|alpha_i|, |beta|))
    if (beta.is_exact()) {
        Rational ab = beta.exact_value().abs();
        Rational ratio = ab / min_alpha;
        if (Rational(1) < ratio) log_ratio = log_of(ratio, sub(rm));
        Rational p2 = Rational(2).pow(r), p3 = Rational(3).pow(r);
        for (const Rational& a : params.alphas) {
            Rational arg = p2 * a.abs() + p3 * max(a.abs(), ab);
            alpha_sum = alpha_sum + log_of(arg, sub(r * m));
        }
    } else {
        // |beta| dominates every |alpha_i|, so the ratio exceeds 1 and the
        // max inside the sum is |beta|; the sum term is bracketed by
        // 3^r |beta| < 2^r |alpha_i| + 3^r |beta| < (3^r + 2^r) |beta|.
        Enclosure log_beta = beta.log_abs(sub(2 * rm));
        log_ratio = log_beta - log_of(min_alpha, sub(rm));
        Enclosure lo3r = log_of(Rational(3).pow(r), sub(2 * r * m));
        Enclosure hi32 = log_of(Rational(3).pow(r) + Rational(2).pow(r), sub(2 * r * m));
        Enclosure per(lo3r.lo + log_beta.lo, hi32.hi + log_beta.hi);
        alpha_sum = Rational(m) * per;
    }

    return Rational(rm) * (D.log_D + log_ratio +
                           Rational(r) * (Enclosure(den_x_addend(params.x)) - log_2)) +
           Rational(r) * (log_mu + alpha_sum) + log_3;
}

Enclosure threshold_log_beta(const LerchParams& params, const Rational& tol) {
    const long rm = static_cast<long>(params.rm());
    const long r = static_cast<long>(params.r);
    auto sub = [&](long coeff) { return tol / Rational(8 * coeff); };

    Enclosure log_max_alpha = log_of(max_abs(params.alphas), sub(rm + 1));
    Enclosure log_D = log_of(Rational(den_of_set(params.alphas)), sub(rm));
    Enclosure log_52 = log_of(Rational(5, 2), sub(rm * r));
    Enclosure log_3 = log_of(Rational(3), sub(r));
    Enclosure log_mu = mu_of(params.x).log_enclosure(sub(r));

    return Rational(rm + 1) * log_max_alpha +
           Rational(rm) * (log_D + Rational(r) * (Enclosure(den_x_addend(params.x)) + log_52)) +
           Rational(r) * (log_3 + log_mu);
}

CriterionReport verdict(const LerchParams& params, const BigLogNumber& beta, const Rational& tol) {
    CriterionReport report;
    DenCombined D = combined_denominator(params.alphas, beta, tol);
    report.D_exact = D.exact;
    report.D = D.D;
    report.log_D = D.log_D;
    report.log_mu = mu_of(params.x).log_enclosure(tol);
    report.A_frak = compute_A_frak(params, beta, tol);
    report.calA1 = compute_calA1(params, beta, tol);
    // Over the rationals there is a single conjugate, so the growth sums
    // cancel exactly and V collapses to the leading quantity.
    report.V = report.A_frak;
    report.independent = report.V.definitely_positive();
    return report;
}

Rational coefficient_bound(const LerchParams& params, const Rational& beta, unsigned n) {
    if (beta.is_zero()) throw std::domain_error("coefficient_bound: beta must be nonzero");
    const long rm = static_cast<long>(params.rm());
    const long r = static_cast<long>(params.r);
    const long m = static_cast<long>(params.m);
    const long nn = static_cast<long>(n);
    Rational mx = max_abs(params.alphas);
    Rational mn = min_abs(params.alphas);

    Rational prod(1);
    Rational p2 = Rational(2).pow(r), p3 = Rational(3).pow(r);
    for (const Rational& a : params.alphas) prod *= p2 * a.abs() + p3 * mx;

    Rational base = mx.pow(rm) * Rational(3, 2).pow(r * r * m + r) *
                    (Rational(3) / Rational(2).pow(rm) * prod).pow(r * nn);

    Rational rho = beta.abs() / mn;
    Rational factor(rm * (nn + 1));
    if (Rational(1) < rho) factor = rho.pow(rm * (nn + 1)) / (rho - Rational(1));
    return base * factor;
}

Rational error_bound(const LerchParams& params, const Rational& beta, unsigned n) {
    Rational mx = max_abs(params.alphas);
    Rational ab = beta.abs();
    if (!(mx < ab)) throw std::domain_error("error_bound: |beta| must exceed max |alpha_i|");
    const long rm = static_cast<long>(params.rm());
    const long r = static_cast<long>(params.r);
    const long m = static_cast<long>(params.m);
    const long nn = static_cast<long>(n);

    Rational lead = max(Rational(1), mx).pow(rm + 1) / (ab - mx);
    Rational mid = Rational(3, 2).pow(r * r * m + r);
    Rational decay = (mx.pow(rm + 1) / ab).pow(nn);
    Rational tail = (Rational(3) * Rational(5, 2).pow(rm)).pow(r * nn);
    return lead * mid * decay * tail;
}

IntegralityReport integrality_normalization(const LerchParams& params) {
    PadeSystem sys = build_system(params);
    IntegralityReport report;
    report.scale = 1;
    auto fold = [&](const UniPoly& p) {
        for (const Rational& c : p.coeffs())
            mpz_lcm(report.scale.get_mpz_t(), report.scale.get_mpz_t(), c.den().get_mpz_t());
    };
    for (const UniPoly& p : sys.P) fold(p);
    for (const auto& per_l : sys.Q)
        for (const auto& per_i : per_l)
            for (const UniPoly& q : per_i) fold(q);

    const unsigned long rm = params.rm();
    const unsigned long top = rm * params.n + rm + params.n;
    mpz_class core = mpz_class(params.x.den()) * lcm_upto(top);
    mpz_class core_pow;
    mpz_pow_ui(core_pow.get_mpz_t(), core.get_mpz_t(), params.r);
    mpz_class den_alpha = den_of_set(params.alphas);
    mpz_class den_alpha_pow;
    mpz_pow_ui(den_alpha_pow.get_mpz_t(), den_alpha.get_mpz_t(), rm * params.n + rm);
    report.divisor = core_pow * den_alpha_pow;
    report.divides = mpz_divisible_p(report.divisor.get_mpz_t(), report.scale.get_mpz_t()) != 0;
    return report;
}

Enclosure eval_phi_enclosure(const Rational& x, const Rational& w, unsigned long s,
                             const Rational& tol) {
    if (!(Rational(0) < tol)) throw std::domain_error("eval_phi_enclosure: tol must be positive");
    Rational aw = w.abs();
    if (!(aw < Rational(1))) throw std::domain_error("eval_phi_enclosure: |w| must be < 1");
    if (w.is_zero()) return Enclosure(Rational(0));

    const Rational half = tol / Rational(2);
    unsigned long K = 8;
    auto tail_bound = [&](unsigned long k) {
        return aw.pow(static_cast<long>(k) + 2) /
               ((Rational(static_cast<long>(k)) + x + Rational(2)).pow(static_cast<long>(s)) *
                (Rational(1) - aw));
    };
    while (tail_bound(K) > half) K *= 2;

    Rational sum(0);
    Rational wpow = w;
    for (unsigned long k = 0; k <= K; ++k) {
        sum += wpow * (Rational(static_cast<long>(k)) + x + Rational(1))
                          .pow(-static_cast<long>(s));
        wpow *= w;
    }
    Rational t = tail_bound(K);
    if (w.is_negative()) return Enclosure(sum - t, sum + t);
    return Enclosure(sum, sum + t);
}

Enclosure remainder_value_enclosure(const LerchParams& params, unsigned l, unsigned i, unsigned s,
                                    const Rational& beta, const Rational& tol) {
    const Rational& alpha = params.alpha(i);
    if (!(alpha.abs() < beta.abs()))
        throw std::domain_error("remainder_value_enclosure: |beta| must exceed |alpha_i|");
    UniPoly P = build_P(params, l);
    UniPoly Q = build_Q(params, l, i, s);
    Rational Pb = P.eval(beta);
    Rational Qb = Q.eval(beta);
    Rational scale_tol = tol / max(Rational(1), Pb.abs());
    Enclosure phi_val = eval_phi_enclosure(params.x, alpha / beta, s, scale_tol);
    return Pb * phi_val - Enclosure(Qb);
}

}  // namespace lerchpade
