#pragma once

#include <nlohmann/json.hpp>

#include "pcompact/exact.hpp"
#include "pcompact/matrix.hpp"
#include "pcompact/sympoly.hpp"

namespace pcompact {

nlohmann::json rational_to_json(const Rational& x);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json cyc_to_json(const CycRational& x);
CycRational cyc_from_json(const nlohmann::json& j);

nlohmann::json partition_to_json(const Partition& e);
Partition partition_from_json(const nlohmann::json& j);

// {"nvars": l, "terms": [{"partition": [...], "coeff": "num/den"}]}
nlohmann::json sympoly_to_json(const SymPoly& f);
SymPoly sympoly_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const RationalMatrix& m);
nlohmann::json matrix_to_json(const IntegerMatrix& m);
CycMatrix cyc_matrix_from_json(const nlohmann::json& j);

}  // namespace pcompact
