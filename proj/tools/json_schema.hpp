#pragma once

#include <json.hpp>

#include <string>

#include "genpoly/qpolynomial.hpp"
#include "genpoly/qrational_function.hpp"
#include "genpoly/upolynomial.hpp"

namespace genpoly::cli {

using Json = nlohmann::ordered_json;

// Polynomial schema: {"vars": ["q"] | ["q","u"], "terms": [[deg_q, (deg_u,) "num", "den"], ...]}
// with terms in ascending degree (u-major). Values with a nontrivial denominator
// in q carry "denominator": <a ["q"] polynomial>, meaning terms / denominator.
Json to_json(const QPolynomial& p);
Json to_json(const QRationalFunction& f);
Json to_json(const UPolynomial& p);

/// Indented JSON with arrays of scalars kept on one line; parses back to an equal value.
std::string emit_json(const Json& j);

/// Accepts any document of the schema; throws ParseError on malformed input.
UPolynomial upolynomial_from_json(const Json& j);
/// Throws ParseError if u occurs.
QRationalFunction rational_function_from_json(const Json& j);
/// Throws ParseError if u occurs or a denominator remains.
QPolynomial polynomial_from_json(const Json& j);

}  // namespace genpoly::cli
