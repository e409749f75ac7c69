#include "lerchpade/json_io.hpp"

namespace lerchpade {

using nlohmann::json;

json to_json(const Rational& v) { return v.str(); }

json to_json(const Enclosure& e) { return json{{"lo", e.lo.str()}, {"hi", e.hi.str()}}; }

json to_json(const UniPoly& p) {
    json out = json::array();
    for (const Rational& c : p.coeffs()) out.push_back(c.str());
    return out;
}

json to_json(const LerchParams& params) {
    json alphas = json::array();
    for (const Rational& a : params.alphas) alphas.push_back(a.str());
    return json{{"r", params.r}, {"m", params.m}, {"n", params.n},
                {"x", params.x.str()}, {"alphas", alphas}};
}

json to_json(const PadeSystem& sys) {
    json out;
    out["params"] = to_json(sys.params);
    for (unsigned l = 0; l <= sys.params.rm(); ++l) {
        out["P[" + std::to_string(l) + "]"] = to_json(sys.P.at(l));
        for (unsigned i = 1; i <= sys.params.m; ++i)
            for (unsigned s = 1; s <= sys.params.r; ++s)
                out["Q[" + std::to_string(l) + "][" + std::to_string(i) + "][" +
                    std::to_string(s) + "]"] = to_json(sys.q(l, i, s));
    }
    return out;
}

json to_json(const OrderReport& report) {
    json entries = json::array();
    for (const OrderEntry& e : report.entries)
        entries.push_back(json{{"l", e.l},
                               {"i", e.i},
                               {"s", e.s},
                               {"ord", json{{"value", e.ord.value}, {"exact", e.ord.exact}}}});
    return json{{"pass", report.pass},
                {"degrees_ok", report.degrees_ok},
                {"window", report.window},
                {"required_order", report.required_order},
                {"entries", entries}};
}

json to_json(const DeltaReport& report) {
    json samples = json::array();
    for (const Rational& z : report.z_samples) samples.push_back(z.str());
    return json{{"delta", report.delta.str()},
                {"z_samples", samples},
                {"constant_confirmed", report.constant_confirmed},
                {"nonzero", report.nonzero},
                {"reduced_value", report.reduced_value.str()},
                {"reduced_matches", report.reduced_matches},
                {"ok", report.ok}};
}

json to_json(const FactorizationWitness& witness) {
    auto rationals = [](const std::vector<Rational>& v) {
        json out = json::array();
        for (const Rational& r : v) out.push_back(r.str());
        return out;
    };
    json samples = json::array();
    for (const auto& tuple : witness.alpha_samples) samples.push_back(rationals(tuple));
    return json{{"n", witness.n},
                {"u", witness.u},
                {"m", witness.m},
                {"r", witness.r},
                {"x", witness.x.str()},
                {"power_exponent", witness.power_exponent},
                {"difference_exponent", witness.difference_exponent},
                {"alpha_samples", samples},
                {"C_values", rationals(witness.C_values)},
                {"predicted_products", rationals(witness.predicted_products)},
                {"quotients", rationals(witness.quotients)},
                {"c_constant", witness.c_constant.str()},
                {"block_product_value", witness.block_product_value.str()},
                {"pinned_sign", witness.pinned_sign},
                {"quotients_consistent", witness.quotients_consistent},
                {"c_nonzero", witness.c_nonzero},
                {"matches_blocks", witness.matches_blocks},
                {"ok", witness.ok}};
}

json to_json(const CriterionReport& report) {
    return json{{"D", report.D.get_str()},
                {"D_exact", report.D_exact},
                {"log_D", to_json(report.log_D)},
                {"log_mu", to_json(report.log_mu)},
                {"A_frak", to_json(report.A_frak)},
                {"calA1", to_json(report.calA1)},
                {"V", to_json(report.V)},
                {"verdict", report.independent ? "independent" : "inconclusive"}};
}

json to_json(const IntegralityReport& report) {
    return json{{"scale", report.scale.get_str()},
                {"divisor", report.divisor.get_str()},
                {"divides", report.divides}};
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace lerchpade
