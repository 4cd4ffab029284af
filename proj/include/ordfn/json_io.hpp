#pragma once

#include "json.hpp"

#include "ordfn/phi.hpp"
#include "ordfn/step_fn.hpp"
#include "ordfn/suborder.hpp"
#include "ordfn/verify.hpp"

namespace ordfn {

// {"omega1_coeff": nat, "cnf": [{"exp": <ordinal>, "coeff": nat}, ...]};
// naturals are JSON numbers when they fit in 64 bits, decimal strings
// otherwise.
nlohmann::json to_json(const Ordinal& a);
Ordinal ordinal_from_json(const nlohmann::json& j);

// {"domain": <ordinal>, "initial": 0|1, "changes": [<ordinal>...]}
nlohmann::json to_json(const StepFn& f);
StepFn step_fn_from_json(const nlohmann::json& j);

// {"domain": <ordinal>, "support": [<ordinal>...]}
nlohmann::json to_json(const IndicatorFn& g);
IndicatorFn indicator_from_json(const nlohmann::json& j);

// {"ambient": <ordinal>, "blocks": [{"start":..., "end":..., "end_included": bool}...]}
nlohmann::json to_json(const SubOrder& x);
SubOrder suborder_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GapPoint& gap);

nlohmann::json to_json(const SubbasicPredicate& p);

// {"suite":..., "cases": n, "failures": [witness...], "ms": t}
nlohmann::json to_json(const VerifyReport& report);
// Same without the timing field; byte-identical across runs of one seed.
nlohmann::json to_canonical_json(const VerifyReport& report);

}  // namespace ordfn
