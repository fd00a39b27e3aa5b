#pragma once

#include "json.hpp"

#include "idem2/idempotent.hpp"
#include "idem2/oracle.hpp"

namespace idem2 {

using Json = nlohmann::json;

// Wire format, shared by the CLI and the bindings.
//
//   series:  {"n", "vars", "trunc", "terms": [{"exp": [e...], "coef": c}, ...]}
//   matrix:  {"entries": [[s11, s12], [s21, s22]]}, each entry a series
//            object; all four must agree on (n, vars, trunc)
//   spec:    {"n", "vars", "trunc", "roles": {"<p^d value>": "P"|"Q"|"R", ...},
//             "alpha", "beta", "gamma"}   (params present exactly when P > 1,
//            as series objects over Z_P with the same vars/trunc)
//
// Emitters produce canonical form: terms graded-lex sorted, coefficients in
// [0, n), no zero terms. Parsers accept any term order, duplicate monomials
// and signed coefficients, and canonicalize. Structural problems raise
// ParseError; values that parse but violate ring constraints surface as the
// usual arithmetic errors (InvalidModulus, InvalidSpec, ...).

Json series_to_json(const Series& f);
Series series_from_json(const Json& j);

Json mat2_to_json(const Mat2& a);
Mat2 mat2_from_json(const Json& j);

Json spec_to_json(const IdempotentSpec& spec);
IdempotentSpec spec_from_json(const Json& j);

Json classified_to_json(const ClassifiedIdempotent& ci);
Json report_to_json(const CompareReport& report);

/// Parse text that must be a single JSON document; raises ParseError with
/// the underlying diagnostic on malformed input.
Json parse_json_text(const std::string& text);

}  // namespace idem2
