#include "json_schema.hpp"

#include <algorithm>

#include "genpoly/error.hpp"

namespace genpoly::cli {

namespace {

Json q_terms(const QPolynomial& p) {
  Json terms = Json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    const Rational& c = p.coefficient(k);
    if (c != 0) terms.push_back(Json::array({k, c.get_num().get_str(), c.get_den().get_str()}));
  }
  return terms;
}

[[noreturn]] void malformed(const std::string& why) { throw Error(ErrorCode::ParseError, "polynomial JSON: " + why); }

BigInt integer(const Json& j) {
  if (!j.is_string()) malformed("coefficients must be integer strings");
  BigInt out;
  if (out.set_str(j.get<std::string>(), 10) != 0) malformed("bad integer '" + j.get<std::string>() + "'");
  return out;
}

int degree(const Json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 0) malformed("degrees must be nonnegative integers");
  return j.get<int>();
}

UPolynomial numerator_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vars") || !j.contains("terms")) malformed("expected an object with vars and terms");
  const Json& vars = j.at("vars");
  const bool two = vars == Json::array({"q", "u"});
  if (!two && vars != Json::array({"q"})) malformed("vars must be [\"q\"] or [\"q\",\"u\"]");
  std::vector<std::vector<Rational>> grid;
  for (const Json& term : j.at("terms")) {
    if (!term.is_array() || term.size() != (two ? 4U : 3U)) malformed("term has the wrong arity");
    const int dq = degree(term[0]);
    const int du = two ? degree(term[1]) : 0;
    const BigInt den = integer(term[two ? 3 : 2]);
    if (den == 0) malformed("zero denominator");
    if (grid.size() <= static_cast<std::size_t>(du)) grid.resize(static_cast<std::size_t>(du) + 1);
    auto& row = grid[static_cast<std::size_t>(du)];
    if (row.size() <= static_cast<std::size_t>(dq)) row.resize(static_cast<std::size_t>(dq) + 1);
    row[static_cast<std::size_t>(dq)] += make_rational(integer(term[two ? 2 : 1]), den);
  }
  std::vector<QRationalFunction> coeffs;
  for (auto& row : grid) coeffs.emplace_back(QPolynomial(std::move(row)));
  return UPolynomial(std::move(coeffs));
}

void emit(const Json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + Json(key).dump() + ": ";
      emit(value, indent + 2, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array() && !j.empty() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      emit(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += j.dump(-1, ' ', false, Json::error_handler_t::strict);
  }
}

}  // namespace

std::string emit_json(const Json& j) {
  std::string out;
  emit(j, 0, out);
  return out + "\n";
}

Json to_json(const QPolynomial& p) { return Json{{"vars", Json::array({"q"})}, {"terms", q_terms(p)}}; }

Json to_json(const QRationalFunction& f) {
  Json out = to_json(f.numerator());
  if (!f.denominator().is_one()) out["denominator"] = to_json(f.denominator());
  return out;
}

Json to_json(const UPolynomial& p) {
  const QPolynomial den = p.common_denominator();
  Json terms = Json::array();
  for (int k = 0; k <= p.degree(); ++k) {
    const QPolynomial c = (p.coefficient(k) * QRationalFunction(den)).as_polynomial();
    for (int i = 0; i <= c.degree(); ++i) {
      const Rational& r = c.coefficient(i);
      if (r != 0) terms.push_back(Json::array({i, k, r.get_num().get_str(), r.get_den().get_str()}));
    }
  }
  Json out{{"vars", Json::array({"q", "u"})}, {"terms", std::move(terms)}};
  if (!den.is_one()) out["denominator"] = to_json(den);
  return out;
}

UPolynomial upolynomial_from_json(const Json& j) {
  UPolynomial value = numerator_from_json(j);
  if (j.contains("denominator")) {
    const UPolynomial den = numerator_from_json(j.at("denominator"));
    if (den.degree() > 0 || j.at("denominator").contains("denominator")) malformed("denominator must be a polynomial in q");
    if (den.is_zero()) malformed("zero denominator");
    value *= den.coefficient(0).inverse();
  }
  return value;
}

QRationalFunction rational_function_from_json(const Json& j) {
  const UPolynomial p = upolynomial_from_json(j);
  if (p.degree() > 0) malformed("unexpected u");
  return p.coefficient(0);
}

QPolynomial polynomial_from_json(const Json& j) {
  const QRationalFunction f = rational_function_from_json(j);
  if (!f.is_polynomial()) malformed("unexpected denominator");
  return f.as_polynomial();
}

}  // namespace genpoly::cli
