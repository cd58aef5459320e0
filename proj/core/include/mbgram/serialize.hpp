#pragma once

#include <string_view>

#include <json.hpp>

#include "mbgram/polynomial.hpp"

namespace mbgram {

inline constexpr std::string_view kPolynomialSchema = "mbgram.polynomial/1";

/// Term list [[coef, ed, ew, ex, ey, ez], ...] in canonical (descending)
/// order. Coefficients are decimal strings so that no precision is lost.
nlohmann::json polynomial_terms_to_json(const Polynomial& p);
/// Accepts coefficients as decimal strings or JSON integers; rebuilds the
/// canonical form (so unsorted or duplicated terms are merged).
Polynomial polynomial_terms_from_json(const nlohmann::json& terms);

/// Versioned envelope {"schema": ..., "terms": [...]}.
nlohmann::json polynomial_to_json(const Polynomial& p);
/// Throws SchemaMismatch on an unknown schema tag.
Polynomial polynomial_from_json(const nlohmann::json& j);

/// Parses the human-readable form produced by Polynomial::to_string, e.g.
/// "d^4 - 4*d^2 + 3*x*y". Throws ParseError.
Polynomial polynomial_parse(std::string_view text);

}  // namespace mbgram
