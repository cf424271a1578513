#include "genpoly/qrational_function.hpp"

#include "genpoly/error.hpp"

namespace genpoly {

QRationalFunction::QRationalFunction(QPolynomial num, QPolynomial den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = QPolynomial(1);
    return;
  }
  QPolynomial g = gcd(num, den);
  if (!g.is_one()) {
    num = exact_quotient(num, g);
    den = exact_quotient(den, g);
  }
  const Rational lead = den.leading();
  if (lead != 1) {
    const Rational inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

QRationalFunction QRationalFunction::q_power(int k) {
  if (k >= 0) return QRationalFunction(QPolynomial::monomial(1, k));
  return QRationalFunction(QPolynomial(1), QPolynomial::monomial(1, -k), Reduced{});
}

const QPolynomial& QRationalFunction::as_polynomial() const {
  if (!is_polynomial()) throw Error(ErrorCode::NotAPolynomial, "rational function has a nontrivial denominator");
  return num_;
}

QRationalFunction& QRationalFunction::operator+=(const QRationalFunction& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (den_ == rhs.den_) {
    if (den_.is_one()) {
      num_ += rhs.num_;
      return *this;
    }
    return *this = QRationalFunction(num_ + rhs.num_, den_);
  }
  if (den_.is_one()) return *this = QRationalFunction(num_ * rhs.den_ + rhs.num_, rhs.den_, Reduced{});
  if (rhs.den_.is_one()) return *this = QRationalFunction(num_ + rhs.num_ * den_, den_, Reduced{});
  // Henrici: with g = gcd(d1, d2), only g can share factors with the new numerator.
  const QPolynomial g = gcd(den_, rhs.den_);
  const QPolynomial d1 = exact_quotient(den_, g);
  const QPolynomial d2 = exact_quotient(rhs.den_, g);
  QPolynomial num = num_ * d2 + rhs.num_ * d1;
  QPolynomial den = den_ * d2;
  if (num.is_zero()) return *this = QRationalFunction();
  const QPolynomial h = gcd(num, g);
  if (!h.is_one()) {
    num = exact_quotient(num, h);
    den = exact_quotient(den, h);
  }
  return *this = QRationalFunction(std::move(num), std::move(den), Reduced{});
}

QRationalFunction& QRationalFunction::operator-=(const QRationalFunction& rhs) { return *this += -rhs; }

QRationalFunction& QRationalFunction::operator*=(const QRationalFunction& rhs) {
  if (is_zero() || rhs.is_zero()) return *this = QRationalFunction();
  if (den_.is_one() && rhs.den_.is_one()) {
    num_ *= rhs.num_;
    return *this;
  }
  // Cross-cancel; both inputs are already reduced.
  QPolynomial n1 = num_, d1 = den_, n2 = rhs.num_, d2 = rhs.den_;
  if (!d2.is_one()) {
    const QPolynomial g = gcd(n1, d2);
    if (!g.is_one()) {
      n1 = exact_quotient(n1, g);
      d2 = exact_quotient(d2, g);
    }
  }
  if (!d1.is_one()) {
    const QPolynomial g = gcd(n2, d1);
    if (!g.is_one()) {
      n2 = exact_quotient(n2, g);
      d1 = exact_quotient(d1, g);
    }
  }
  QPolynomial num = n1 * n2;
  QPolynomial den = d1 * d2;
  const Rational lead = den.leading();
  if (lead != 1) {
    num *= 1 / lead;
    den *= 1 / lead;
  }
  return *this = QRationalFunction(std::move(num), std::move(den), Reduced{});
}

QRationalFunction& QRationalFunction::operator/=(const QRationalFunction& rhs) { return *this *= rhs.inverse(); }

QRationalFunction QRationalFunction::operator-() const { return QRationalFunction(-num_, den_, Reduced{}); }

QRationalFunction QRationalFunction::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero rational function");
  const Rational lead = num_.leading();
  return QRationalFunction(den_ * (1 / lead), num_ * (1 / lead), Reduced{});
}

QRationalFunction QRationalFunction::adams(int i) const {
  if (i == 1) return *this;
  // Coprimality survives q -> q^i (apply it to a Bezout identity), and so does monicity.
  return QRationalFunction(num_.adams(i), den_.adams(i), Reduced{});
}

Rational QRationalFunction::evaluate(const Rational& v) const {
  const Rational d = den_.evaluate(v);
  if (d == 0) throw Error(ErrorCode::PoleAtEvaluationPoint, "denominator vanishes at q = " + v.get_str());
  return num_.evaluate(v) / d;
}

QRationalFunction pow(const QRationalFunction& base, int exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  return QRationalFunction(pow(base.numerator(), static_cast<unsigned>(exponent)),
                           pow(base.denominator(), static_cast<unsigned>(exponent)));
}

QRationalFunction ring_inverse(const QRationalFunction& x) {
  if (x.is_zero()) throw Error(ErrorCode::NonInvertibleConstantTerm, "zero constant term");
  return x.inverse();
}

}  // namespace genpoly
