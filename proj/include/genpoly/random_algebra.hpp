#pragma once

// Seeded generators for property checks.

#include <random>

#include "genpoly/qpolynomial.hpp"
#include "genpoly/qrational_function.hpp"
#include "genpoly/upolynomial.hpp"

namespace genpoly::testing {

class RandomAlgebra {
 public:
  explicit RandomAlgebra(unsigned seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational(int bound = 5, int max_den = 3) {
    return make_rational(BigInt(uniform(-bound, bound)), BigInt(uniform(1, max_den)));
  }

  QPolynomial polynomial(int max_degree = 6, int max_den = 3) {
    std::vector<Rational> c;
    const int deg = uniform(0, max_degree);
    for (int i = 0; i <= deg; ++i) c.push_back(rational(5, max_den));
    return QPolynomial(std::move(c));
  }

  QPolynomial nonzero_polynomial(int max_degree = 6, int max_den = 3) {
    for (;;) {
      QPolynomial p = polynomial(max_degree, max_den);
      if (!p.is_zero()) return p;
    }
  }

  /// Small rational function whose denominator is a product of q^i - 1 and q factors,
  /// the shape that occurs in the counting series.
  QRationalFunction rational_function() {
    QPolynomial den(1);
    const int factors = uniform(0, 2);
    for (int i = 0; i < factors; ++i) den *= QPolynomial::q_power_minus_one(uniform(1, 3));
    if (uniform(0, 3) == 0) den *= QPolynomial::q();
    return QRationalFunction(polynomial(3, 2), den);
  }

  UPolynomial u_polynomial(int max_degree = 2) {
    std::vector<QRationalFunction> c;
    const int deg = uniform(0, max_degree);
    for (int i = 0; i <= deg; ++i) c.push_back(rational_function());
    return UPolynomial(std::move(c));
  }

 private:
  std::mt19937 rng_;
};

}  // namespace genpoly::testing
