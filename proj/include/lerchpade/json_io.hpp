#pragma once

#include <string>

#include "json.hpp"
#include "lerchpade/criterion.hpp"
#include "lerchpade/determinant.hpp"
#include "lerchpade/enclosure.hpp"
#include "lerchpade/pade.hpp"
#include "lerchpade/rational.hpp"
#include "lerchpade/unipoly.hpp"

namespace lerchpade {

nlohmann::json to_json(const Rational& v);
nlohmann::json to_json(const Enclosure& e);
nlohmann::json to_json(const UniPoly& p);
nlohmann::json to_json(const LerchParams& params);
nlohmann::json to_json(const PadeSystem& sys);
nlohmann::json to_json(const OrderReport& report);
nlohmann::json to_json(const DeltaReport& report);
nlohmann::json to_json(const FactorizationWitness& witness);
nlohmann::json to_json(const CriterionReport& report);
nlohmann::json to_json(const IntegralityReport& report);

/// Canonical rendering: sorted keys, two-space indent, trailing newline.
std::string dump_json(const nlohmann::json& j);

}  // namespace lerchpade
