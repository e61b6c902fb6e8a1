#pragma once

// JSON forms. Rationals are split into decimal-string numerator and
// denominator so arbitrary precision survives the round trip.
//
//   SymbolicPolynomial:  [{"exponents": [..], "numerator": "1", "denominator": "2"}, ...]
//   GeneratorExpression: same list, exponents indexed by generator
//   VirtualCharacter:    [{"weight": [..], "multiplicity": "2"}, ...]
//   PropReport:          {"group", "d", "entries": [{"p", "dim_gamma_S",
//                         "dim_gamma_R_cap_S", "equal"}], "pass"}

#include "chern/char_ring.h"
#include "chern/filtration_check.h"
#include "chern/invariants.h"
#include "chern/polynomial.h"

#include <json.hpp>

namespace chern {

nlohmann::json to_json(SymbolicPolynomial const &f);
nlohmann::json to_json(GeneratorExpression const &e);
nlohmann::json to_json(VirtualCharacter const &x);
nlohmann::json to_json(PropReport const &report);

SymbolicPolynomial polynomial_from_json(nlohmann::json const &j, int rank);
VirtualCharacter character_from_json(nlohmann::json const &j, int rank);

} // namespace chern
