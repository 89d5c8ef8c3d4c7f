#pragma once

// JSON interchange for polytopes, measures and audit records. Exact values are
// "p/q" strings; decimal companions are marked approximate.

#include <json.hpp>

#include <string>

#include "scc/concentration.hpp"
#include "scc/cone_measure.hpp"
#include "scc/lifting.hpp"
#include "scc/polytope.hpp"

namespace scc::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Json to_json(const Vec& v);
/// {"exact": "p/q", "approx": true, "decimal": "..."}.
Json with_decimal(const Rational& q);

Rational rational_from_json(const Json& j);
Vec vector_from_json(const Json& j, Index expected_dim);

/// {"dim", "vertices", "normals"}, plus "rhs" when some right-hand side is not 1.
Json polytope_to_json(const Polytope& p);

/// Reads {"dim", "vertices"} or {"dim", "normals"[, "rhs"]}. Vertices may be any
/// spanning point set. When both are present they must describe the same polytope.
Polytope polytope_from_json(const Json& j, const HullOptions& options = {});

Json measure_to_json(const ConeVolumeMeasure& m);
Json flat_to_json(const Flat& flat);
Json report_to_json(const ConcentrationReport& r);
Json equality_case_to_json(const EqualityCase& c);
std::string_view equality_kind_name(EqualityKind kind);

/// FNV-1a 64-bit hash, as 16 lower-case hex digits.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace scc::io
