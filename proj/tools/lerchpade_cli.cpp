#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lerchpade/criterion.hpp"
#include "lerchpade/determinant.hpp"
#include "lerchpade/json_io.hpp"
#include "lerchpade/pade.hpp"

namespace {

using namespace lerchpade;

std::vector<Rational> parse_alphas(const std::string& csv) {
    std::vector<Rational> out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        out.push_back(Rational::from_string(csv.substr(pos, comma - pos)));
        pos = comma + 1;
    }
    return out;
}

BigLogNumber parse_beta(const std::string& beta, const std::string& log_beta) {
    if (!log_beta.empty()) return BigLogNumber::from_log_point(Rational::from_string(log_beta));
    if (beta.empty()) throw std::invalid_argument("certify: provide --beta or --log-beta");
    std::size_t caret = beta.find('^');
    if (caret == std::string::npos) return BigLogNumber::from_rational(Rational::from_string(beta));
    return BigLogNumber::from_power(Rational::from_string(beta.substr(0, caret)),
                                    mpz_class(beta.substr(caret + 1)));
}

void emit(const nlohmann::json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << dump_json(j);
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << dump_json(j);
}

void require_cap(unsigned r, unsigned m, const ExpansionCaps& caps) {
    if (r * m > caps.max_vars)
        throw CapExceeded("r*m = " + std::to_string(r * m) + " exceeds the variable cap " +
                          std::to_string(caps.max_vars) + "; choose smaller r, m");
}

struct CommonArgs {
    unsigned r = 1, m = 1, n = 1;
    std::string x = "0";
    std::string alphas;
    std::string out;

    LerchParams to_params() const {
        if (alphas.empty()) throw std::invalid_argument("missing --alphas");
        return LerchParams(r, m, n, Rational::from_string(x), parse_alphas(alphas));
    }
};

void add_common(CLI::App* cmd, CommonArgs& a, bool need_alphas = true) {
    cmd->add_option("--r", a.r, "Series depth r (>= 1)");
    cmd->add_option("--m", a.m, "Number of evaluation points m (>= 1)");
    cmd->add_option("--n", a.n, "Weight n (>= 1)");
    cmd->add_option("--x", a.x, "Shift x in [0,1), as p/q");
    auto* opt = cmd->add_option("--alphas", a.alphas, "Comma-separated rational alphas");
    if (need_alphas) opt->required();
    cmd->add_option("--out", a.out, "Write JSON here instead of stdout");
}

int run_build(const CommonArgs& a) {
    PadeSystem sys = build_system(a.to_params());
    emit(to_json(sys), a.out);
    return 0;
}

int run_verify(const CommonArgs& a, unsigned long window, bool window_given) {
    LerchParams params = a.to_params();
    unsigned long K = window_given ? window : params.n + 3;
    OrderReport report = verify_order(params, K);
    emit(to_json(report), a.out);
    return report.pass ? 0 : 1;
}

int run_det(const CommonArgs& a) {
    LerchParams params = a.to_params();
    require_cap(params.r, params.m, ExpansionCaps{});
    DeltaReport report = delta_constant(params);
    emit(to_json(report), a.out);
    return report.ok ? 0 : 1;
}

int run_factor(const CommonArgs& a, unsigned u, unsigned samples) {
    require_cap(a.r, a.m, ExpansionCaps{});
    if (samples < 2) throw std::invalid_argument("factor: need --samples >= 2");
    std::vector<std::vector<Rational>> tuples;
    if (!a.alphas.empty()) {
        std::vector<Rational> user = parse_alphas(a.alphas);
        LerchParams(a.r, a.m, 1, Rational(0), user);  // reuse the invariant checks
        tuples.push_back(std::move(user));
    }
    for (auto& t : default_alpha_samples(a.m, samples)) {
        if (tuples.size() >= samples) break;
        if (tuples.empty() || t != tuples.front()) tuples.push_back(std::move(t));
    }
    FactorizationWitness w = factorization_check(a.n, u, a.m, a.r, Rational::from_string(a.x),
                                                 tuples);
    emit(to_json(w), a.out);
    return w.ok ? 0 : 1;
}

int run_certify(const CommonArgs& a, unsigned example, unsigned k, const std::string& beta,
                const std::string& log_beta, const std::string& tol_str) {
    Rational tol = Rational::from_string(tol_str);
    if (!(Rational(0) < tol)) throw std::invalid_argument("certify: --tol must be positive");

    unsigned r = a.r, m = a.m;
    std::vector<Rational> alphas;
    BigLogNumber b = BigLogNumber::from_rational(Rational(1));
    Rational x = Rational::from_string(a.x);

    if (example == 1) {
        r = m = 10;
        x = Rational(0);
        for (long i = 1; i <= 10; ++i) alphas.emplace_back(1, i);
        b = BigLogNumber::from_log_point(Rational(2715));
    } else if (example == 2) {
        if (k < 1 || k > 4) throw std::invalid_argument("certify: --k must lie in 1..4");
        unsigned long p = 1;
        for (unsigned j = 0; j < k; ++j) p *= 10;
        r = m = static_cast<unsigned>(p);
        x = Rational(0);
        for (unsigned long i = 1; i <= p; ++i) alphas.emplace_back(static_cast<long>(i));
        mpz_class e;
        mpz_ui_pow_ui(e.get_mpz_t(), 10, 3 * k);
        b = BigLogNumber::from_power(Rational(3), 2 * e);
    } else if (example != 0) {
        throw std::invalid_argument("certify: --example must be 1 or 2");
    } else {
        if (a.alphas.empty()) throw std::invalid_argument("certify: missing --alphas");
        alphas = parse_alphas(a.alphas);
        b = parse_beta(beta, log_beta);
    }

    LerchParams params(r, m, 1, x, alphas);
    CriterionReport report = verdict(params, b, tol);
    emit(to_json(report), a.out);
    return report.independent ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pade-type approximants of Lerch series and linear-independence certificates"};
    app.require_subcommand(1);

    CommonArgs build_args, verify_args, det_args, factor_args, certify_args;

    CLI::App* cmd_build = app.add_subcommand("build", "Construct the approximant system");
    add_common(cmd_build, build_args);

    CLI::App* cmd_verify = app.add_subcommand("verify", "Check degrees and remainder orders");
    add_common(cmd_verify, verify_args);
    unsigned long window = 0;
    CLI::Option* window_opt =
        cmd_verify->add_option("--window", window, "Remainder window K (default n+3)");

    CLI::App* cmd_det = app.add_subcommand("det", "Determinant constancy and reduction checks");
    add_common(cmd_det, det_args);

    CLI::App* cmd_factor = app.add_subcommand("factor", "Coupling-value factorization check");
    add_common(cmd_factor, factor_args, false);
    unsigned u = 0, samples = 3;
    cmd_factor->add_option("--u", u, "Shift exponent u");
    cmd_factor->add_option("--samples", samples, "Number of alpha samples (>= 2)");

    CLI::App* cmd_certify = app.add_subcommand("certify", "Evaluate the independence criterion");
    add_common(cmd_certify, certify_args, false);
    unsigned example = 0, k = 2;
    std::string beta, log_beta, tol = "1/1000000000000000000000000000000";
    cmd_certify->add_option("--example", example, "Built-in data set 1 or 2");
    cmd_certify->add_option("--k", k, "Scale parameter for data set 2");
    cmd_certify->add_option("--beta", beta, "Rational p/q or power base^exponent");
    cmd_certify->add_option("--log-beta", log_beta, "Exact value of log|beta| (integer beta)");
    cmd_certify->add_option("--tol", tol, "Enclosure width tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (cmd_build->parsed()) return run_build(build_args);
        if (cmd_verify->parsed()) return run_verify(verify_args, window, window_opt->count() > 0);
        if (cmd_det->parsed()) return run_det(det_args);
        if (cmd_factor->parsed()) return run_factor(factor_args, u, samples);
        if (cmd_certify->parsed())
            return run_certify(certify_args, example, k, beta, log_beta, tol);
    } catch (const CapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
