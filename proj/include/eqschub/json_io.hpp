#pragma once

#include "json.hpp"

#include "eqschub/grass.hpp"
#include "eqschub/poly.hpp"
#include "eqschub/rep.hpp"
#include "eqschub/schur.hpp"

namespace eqs {

using Json = nlohmann::ordered_json;

// Canonical JSON forms. Terms and keys are always emitted in a fixed order so
// that identical values serialize to identical bytes.

/// [{"x": [e1..en], "t": {"1": e, ...}, "c": "<decimal>"}, ...]
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j, std::size_t arity);

/// {"n": n, "terms": [{"lambda": [...], "coeff": <poly>}]}
Json to_json(const SchurExpansion& e);
SchurExpansion schur_expansion_from_json(const Json& j);

/// {"n": n, "m": m, "terms": [{"nu": [...], "coeff": <poly>}]}
Json to_json(const WedgeVector& w);

/// Certificate: the u-expansion in the same term layout as a poly, with "u"
/// replacing "t"; null when the check failed.
Json certificate_json(const PositivityCertificate& cert);

Json to_json(const StructureEntry& entry, std::size_t n, std::size_t m);
Json to_json(const StructureTable& table);

}  // namespace eqs
