#pragma once

// Versioned JSON forms. Every document carries a "schema" field; readers
// reject unknown schemas with ParseError.

#include "qgrass/deriv.hpp"
#include "qgrass/hh1solver.hpp"

#include "json.hpp"

namespace qgrass {

inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::ordered_json;

Json ambient_json(Ambient a);
Ambient ambient_from_json(const Json& j);

/// {"schema": "qgrass.element/1", "ambient", "terms": [{"word", "coeff"}]}.
Json to_json(const GrassElement& x);
GrassElement grass_element_from_json(const Json& j);

/// {"schema": "qgrass.derivation/1", "flavor", "ambient" or "shape", "shift", "images"}.
Json to_json(const GrassDerivation& d);
Json to_json(const QMDerivation& d);
Json to_json(const TDerivation& d);
GrassDerivation grass_derivation_from_json(const Json& j);
QMDerivation qm_derivation_from_json(const Json& j);

Json to_json(const AdjustmentLog& log, Ambient a);
AdjustmentLog adjustment_log_from_json(const Json& j);

Json to_json(const NonsquareDecomposition& c);

Json to_json(const HH1Report& r);

} // namespace qgrass
