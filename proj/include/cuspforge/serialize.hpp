#pragma once

#include <json.hpp>

#include "cuspforge/certify.hpp"
#include "cuspforge/cusps.hpp"
#include "cuspforge/delta_matrix.hpp"
#include "cuspforge/poly.hpp"

namespace cuspforge {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits are JSON numbers; larger ones are decimal
/// strings. integer_from_json accepts both.
Json integer_to_json(const Integer& v);
Integer integer_from_json(const Json& j);

/// Ascending coefficient array; the zero polynomial is [].
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"variant": str, "r": int, "entries": [[coeffs, ...], ...]}
Json matrix_to_json(const DeltaMatrix& m);
DeltaMatrix matrix_from_json(const Json& j);

Json closed_points_to_json(const std::vector<ClosedPoint>& pts);
Json certificate_to_json(const DetCertificate& c);
Json claim_report_to_json(const ClaimReport& rep);
Json torsion_report_to_json(const TorsionReport& rep);

}  // namespace cuspforge
