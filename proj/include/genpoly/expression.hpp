#pragma once

#include <string>
#include <string_view>

#include "genpoly/qpolynomial.hpp"
#include "genpoly/qrational_function.hpp"
#include "genpoly/upolynomial.hpp"

namespace genpoly {

// Descending-power renderings, e.g. "q^3+q^2" (plain) or "q^{3} + q^{2}" (LaTeX).
std::string to_plain(const QPolynomial& p);
std::string to_plain(const QRationalFunction& f);
std::string to_plain(const UPolynomial& p);
std::string to_latex(const QPolynomial& p);
std::string to_latex(const QRationalFunction& f);
std::string to_latex(const UPolynomial& p);

/// Parse an arithmetic expression in q and u: integers, + - * / ^, parentheses
/// and implicit multiplication ("2q^3", "u^2(u-1)"). Division is allowed only by
/// expressions free of u. Throws ParseError.
UPolynomial parse_expression(std::string_view text);
/// As parse_expression, but the result must be a polynomial in q alone.
QPolynomial parse_q_polynomial(std::string_view text);

}  // namespace genpoly
