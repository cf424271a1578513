#include "genpoly/expression.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

#include "genpoly/error.hpp"

namespace genpoly {

namespace {

enum class Style { Plain, Latex };

std::string power_of(std::string_view var, int k, Style style) {
  if (k == 0) return "";
  if (k == 1) return std::string(var);
  if (style == Style::Latex) return std::string(var) + "^{" + std::to_string(k) + "}";
  return std::string(var) + "^" + std::to_string(k);
}

std::string magnitude(const Rational& c, Style style) {
  const Rational a = abs(c);
  if (is_integer(a)) return a.get_num().get_str();
  if (style == Style::Latex) return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  return a.get_str();
}

// Terms listed from highest degree: sign, magnitude and the power of `var`.
std::string render(const QPolynomial& p, std::string_view var, Style style) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto coeffs = p.coefficients();
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const Rational& c = coeffs[static_cast<std::size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (style == Style::Latex) {
      if (first) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
    } else if (negative) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    const std::string mono = power_of(var, k, style);
    const bool unit = abs(c) == 1;
    if (mono.empty()) {
      out += magnitude(c, style);
    } else if (unit) {
      out += mono;
    } else {
      out += magnitude(c, style) + (style == Style::Plain ? "*" : "") + mono;
    }
  }
  return out;
}

bool is_single_term(const QPolynomial& p) {
  int terms = 0;
  for (const auto& c : p.coefficients()) terms += (c != 0);
  return terms <= 1;
}

std::string parenthesized(const QPolynomial& p, Style style) {
  std::string s = render(p, "q", style);
  if (is_single_term(p) && p.coefficients().back() > 0) return s;
  return style == Style::Latex ? "\\left(" + s + "\\right)" : "(" + s + ")";
}

std::string render(const QRationalFunction& f, Style style) {
  if (f.is_polynomial()) return render(f.numerator(), "q", style);
  if (style == Style::Latex) {
    return "\\frac{" + render(f.numerator(), "q", style) + "}{" + render(f.denominator(), "q", style) + "}";
  }
  return parenthesized(f.numerator(), style) + "/" + parenthesized(f.denominator(), style);
}

// Numerator of the u-polynomial over its common denominator, grouped by powers of u.
std::string render_numerator(const UPolynomial& p, const QPolynomial& den, Style style) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = p.degree(); k >= 0; --k) {
    const QRationalFunction& c = p.coefficients()[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    QPolynomial n = c.numerator() * exact_quotient(den, c.denominator());
    const bool single = is_single_term(n);
    bool negative = false;
    if (n.leading() < 0) {
      negative = true;
      n = -n;
    }
    if (style == Style::Latex) {
      out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    } else {
      out += negative ? "-" : (first ? "" : "+");
    }
    first = false;
    const std::string upow = power_of("u", k, style);
    const std::string mul = style == Style::Plain ? "*" : "";
    if (upow.empty()) {
      out += single ? render(n, "q", style) : parenthesized(n, style);
    } else if (n.is_one()) {
      out += upow;
    } else {
      out += (single ? render(n, "q", style) : parenthesized(n, style)) + mul + upow;
    }
  }
  return out;
}

std::string render(const UPolynomial& p, Style style) {
  const QPolynomial den = p.common_denominator();
  const std::string num = render_numerator(p, den, style);
  if (den.is_one()) return num;
  if (style == Style::Latex) return "\\frac{" + num + "}{" + render(den, "q", style) + "}";
  return "(" + num + ")/" + parenthesized(den, style);
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  UPolynomial parse() {
    UPolynomial v = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  UPolynomial expression() {
    UPolynomial v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  static bool starts_factor(char c) {
    return c == '(' || c == 'q' || c == 'u' || std::isdigit(static_cast<unsigned char>(c));
  }

  UPolynomial term() {
    UPolynomial v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const UPolynomial d = unary();
        if (d.is_zero()) fail("division by zero");
        if (d.degree() != 0) fail("division by an expression containing u");
        v *= d.leading().inverse();
      } else if (starts_factor(peek())) {
        v *= power();
      } else {
        return v;
      }
    }
  }

  UPolynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  long integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  int exponent() {
    const bool braced = accept('{');
    const bool paren = !braced && accept('(');
    const bool negative = accept('-');
    long e = integer();
    if (braced && !accept('}')) fail("expected '}'");
    if (paren && !accept(')')) fail("expected ')'");
    return static_cast<int>(negative ? -e : e);
  }

  UPolynomial power() {
    UPolynomial base = primary();
    if (!accept('^')) return base;
    const int e = exponent();
    if (e < 0) {
      if (base.degree() != 0) fail("negative power of an expression containing u");
      return UPolynomial(pow(base.leading(), e));
    }
    UPolynomial out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
  }

  UPolynomial primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      UPolynomial v = expression();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return UPolynomial(QRationalFunction::q());
    }
    if (c == 'u') {
      ++pos_;
      return UPolynomial::u();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return UPolynomial(QRationalFunction(Rational(BigInt(std::string(text_.substr(start, pos_ - start))))));
    }
    fail("expected a number, q, u or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_plain(const QPolynomial& p) { return render(p, "q", Style::Plain); }
std::string to_plain(const QRationalFunction& f) { return render(f, Style::Plain); }
std::string to_plain(const UPolynomial& p) { return render(p, Style::Plain); }
std::string to_latex(const QPolynomial& p) { return render(p, "q", Style::Latex); }
std::string to_latex(const QRationalFunction& f) { return render(f, Style::Latex); }
std::string to_latex(const UPolynomial& p) { return render(p, Style::Latex); }

UPolynomial parse_expression(std::string_view text) { return Parser(text).parse(); }

QPolynomial parse_q_polynomial(std::string_view text) {
  const UPolynomial v = parse_expression(text);
  if (v.is_zero()) return {};
  if (v.degree() != 0) throw Error(ErrorCode::ParseError, "expression depends on u: " + std::string(text));
  if (!v.leading().is_polynomial()) throw Error(ErrorCode::ParseError, "expression is not a polynomial: " + std::string(text));
  return v.leading().numerator();
}

std::ostream& operator<<(std::ostream& os, const QPolynomial& p) { return os << to_plain(p); }
std::ostream& operator<<(std::ostream& os, const QRationalFunction& f) { return os << to_plain(f); }
std::ostream& operator<<(std::ostream& os, const UPolynomial& p) { return os << to_plain(p); }

}  // namespace genpoly
