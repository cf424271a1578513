#pragma once

#include <span>
#include <string_view>

namespace genpoly {

/// A published polynomial, transcribed as an expression readable by parse_expression.
struct GoldenEntry {
  int d;
  int m;  // subspace dimension for s-tables; unused (0) for two-variable entries
  std::string_view expression;
};

/// s_1^(1), s_d^(1) = 0, s_2^(2..4) and s_3^(1..9).
std::span<const GoldenEntry> golden_s_table();
/// a_d(q,u) for d = 1..4 in the published factored form.
std::span<const GoldenEntry> golden_a_two_variable();

/// Published low-order coefficients of r_4^(9) (degrees 0..6) and its leading term.
struct GoldenRPolynomial {
  int d;
  int m;
  std::span<const int> low_coefficients;
  int leading_degree;
  int leading_coefficient;
};
GoldenRPolynomial golden_r_4_9();

}  // namespace genpoly
