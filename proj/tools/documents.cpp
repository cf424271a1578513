#include "documents.hpp"

#include <sstream>

#include "genpoly/combinatorics.hpp"
#include "genpoly/counting.hpp"
#include "genpoly/error.hpp"
#include "genpoly/expression.hpp"

namespace genpoly::cli {

namespace {

std::vector<int> m_range(int d, std::optional<int> m) {
  if (m) {
    if (*m < 0 || *m > d * d) throw Error(ErrorCode::InvalidArgument, "m must lie in 0..d^2");
    return {*m};
  }
  std::vector<int> out;
  for (int k = 0; k <= d * d; ++k) out.push_back(k);
  return out;
}

Json table(const char* kind, int d, const std::vector<std::pair<int, QPolynomial>>& rows) {
  Json entries = Json::array();
  for (const auto& [m, p] : rows) entries.push_back(Json{{"m", m}, {"poly", to_json(p)}});
  return Json{{"kind", kind}, {"d", d}, {"entries", std::move(entries)}};
}

const char* symbol(const std::string& kind) {
  if (kind == "s_table") return "s";
  if (kind == "a_table") return "a";
  return "r";
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void csv_terms(std::ostringstream& os, const std::string& prefix, const Json& poly, const std::string& part) {
  const bool two = poly.at("vars").size() == 2;
  for (const Json& t : poly.at("terms")) {
    os << prefix << part << ',' << t[0].get<int>() << ',' << (two ? t[1].get<int>() : 0) << ',' << t[two ? 2 : 1].get<std::string>()
       << ',' << t[two ? 3 : 2].get<std::string>() << '\n';
  }
  if (poly.contains("denominator")) csv_terms(os, prefix, poly.at("denominator"), "denominator");
}

std::string render_polynomial_table(const Json& doc, Format format) {
  const std::string kind = doc.at("kind");
  const std::string sym = symbol(kind);
  const int d = doc.at("d");
  const auto& entries = doc.at("entries");
  // Full tables drop identically zero rows, as in the published layout.
  std::vector<const Json*> rows;
  for (const Json& e : entries) {
    if (entries.size() == 1 || !polynomial_from_json(e.at("poly")).is_zero()) rows.push_back(&e);
  }
  std::ostringstream os;
  switch (format) {
    case Format::Plain:
      for (const Json* e : rows) {
        os << sym << '_' << d << "^(" << e->at("m").get<int>() << ") = " << to_plain(polynomial_from_json(e->at("poly"))) << '\n';
      }
      break;
    case Format::Latex:
      os << "\\begin{eqnarray*}\n";
      for (std::size_t i = 0; i < rows.size(); ++i) {
        os << sym << '_' << d << "^{(" << rows[i]->at("m").get<int>() << ")}&=&" << to_latex(polynomial_from_json(rows[i]->at("poly")))
           << (i + 1 == rows.size() ? "." : ",\\\\\n");
      }
      os << "\\end{eqnarray*}\n";
      break;
    case Format::Csv:
      os << "m,part,deg_q,deg_u,num,den\n";
      for (const Json& e : entries) csv_terms(os, std::to_string(e.at("m").get<int>()) + ",", e.at("poly"), "numerator");
      break;
    case Format::Json: break;
  }
  return os.str();
}

std::string render_a2(const Json& doc, Format format) {
  const int d = doc.at("d");
  const UPolynomial expanded = upolynomial_from_json(doc.at("expanded"));
  const Json& f = doc.at("factored");
  std::ostringstream os;
  switch (format) {
    case Format::Plain:
      os << "a_" << d << "(q,u) = " << to_plain(expanded) << '\n';
      if (!f.is_null()) {
        os << "a_" << d << "(q,u) = " << to_plain(rational_function_from_json(f.at("prefactor"))) << " * u^" << f.at("u_power").get<int>();
        for (const Json& factor : f.at("factors")) os << "*(" << to_plain(upolynomial_from_json(factor)) << ')';
        os << " * (" << to_plain(upolynomial_from_json(f.at("reduced"))) << ")\n";
      }
      break;
    case Format::Latex:
      os << "\\begin{eqnarray*}\n";
      os << "a_" << d << "(q,u)&=&" << to_latex(expanded);
      if (!f.is_null()) {
        os << "\\\\\n&=&" << to_latex(rational_function_from_json(f.at("prefactor"))) << "\\cdot u^{" << f.at("u_power").get<int>() << '}';
        for (const Json& factor : f.at("factors")) os << '(' << to_latex(upolynomial_from_json(factor)) << ')';
        os << "\\cdot\\left(" << to_latex(upolynomial_from_json(f.at("reduced"))) << "\\right)";
      }
      os << ".\\end{eqnarray*}\n";
      break;
    case Format::Csv:
      os << "form,part,deg_q,deg_u,num,den\n";
      csv_terms(os, "expanded,", doc.at("expanded"), "numerator");
      if (!f.is_null()) csv_terms(os, "reduced,", f.at("reduced"), "numerator");
      break;
    case Format::Json: break;
  }
  return os.str();
}

std::string render_mahler(const Json& doc, Format format) {
  const int d = doc.at("d");
  std::ostringstream os;
  const auto& coeffs = doc.at("coefficients");
  switch (format) {
    case Format::Plain:
      for (const Json& c : coeffs) os << "c_" << c.at("l").get<int>() << " = " << to_plain(polynomial_from_json(c.at("poly"))) << '\n';
      break;
    case Format::Latex:
      os << "% a_" << d << "(q,u) = sum_l c_l(q) <u choose l>_q\n\\begin{eqnarray*}\n";
      for (std::size_t i = 0; i < coeffs.size(); ++i) {
        os << "c_{" << coeffs[i].at("l").get<int>() << "}&=&" << to_latex(polynomial_from_json(coeffs[i].at("poly")))
           << (i + 1 == coeffs.size() ? "." : ",\\\\\n");
      }
      os << "\\end{eqnarray*}\n";
      break;
    case Format::Csv:
      os << "l,part,deg_q,deg_u,num,den\n";
      for (const Json& c : coeffs) csv_terms(os, std::to_string(c.at("l").get<int>()) + ",", c.at("poly"), "numerator");
      break;
    case Format::Json: break;
  }
  return os.str();
}

std::string render_census(const Json& doc, Format format) {
  std::ostringstream os;
  const bool timing = doc.contains("elapsed_seconds");
  const std::string agrees = doc.at("agrees").get<bool>() ? "true" : "false";
  switch (format) {
    case Format::Plain:
      os << "d=" << doc.at("d") << " p=" << doc.at("p") << " m=" << doc.at("m") << " total=" << doc.at("total")
         << " generating=" << doc.at("generating") << " poly=" << doc.at("poly") << " agrees=" << agrees;
      if (timing) os << " elapsed=" << doc.at("elapsed_seconds").get<double>() << "s";
      os << '\n';
      break;
    case Format::Latex:
      os << "\\begin{tabular}{rrrrrrl}\n$d$ & $p$ & $m$ & total & generating & $s_d^{(m)}(p)$ & agrees\\\\\n\\hline\n"
         << doc.at("d") << " & " << doc.at("p") << " & " << doc.at("m") << " & " << doc.at("total") << " & " << doc.at("generating")
         << " & " << doc.at("poly") << " & " << agrees << "\\\\\n\\end{tabular}\n";
      break;
    case Format::Csv:
      os << "d,p,m,total,generating,poly,agrees" << (timing ? ",elapsed_seconds" : "") << '\n'
         << doc.at("d") << ',' << doc.at("p") << ',' << doc.at("m") << ',' << doc.at("total") << ',' << doc.at("generating") << ','
         << doc.at("poly") << ',' << agrees;
      if (timing) os << ',' << doc.at("elapsed_seconds").get<double>();
      os << '\n';
      break;
    case Format::Json: break;
  }
  return os.str();
}

std::string render_verify(const Json& doc, Format format) {
  std::ostringstream os;
  const auto& checks = doc.at("checks");
  std::size_t passed = 0;
  for (const Json& c : checks) passed += c.at("status") == "PASS" ? 1 : 0;
  const std::string summary = "suite " + doc.at("suite").get<std::string>() + ": " + (doc.at("passed").get<bool>() ? "PASS" : "FAIL") + " (" +
                              std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks)";
  switch (format) {
    case Format::Plain:
      for (const Json& c : checks) {
        os << c.at("status").get<std::string>() << "  " << c.at("name").get<std::string>();
        if (c.contains("seconds")) os << "  (" << c.at("seconds").get<double>() << " s)";
        if (!c.at("detail").get<std::string>().empty()) os << "\n      " << c.at("detail").get<std::string>();
        os << '\n';
      }
      os << summary << '\n';
      break;
    case Format::Latex:
      os << "\\begin{tabular}{ll}\n";
      for (const Json& c : checks) os << c.at("status").get<std::string>() << " & \\verb|" << c.at("name").get<std::string>() << "|\\\\\n";
      os << "\\end{tabular}\n% " << summary << '\n';
      break;
    case Format::Csv:
      os << "name,status,seconds,detail\n";
      for (const Json& c : checks) {
        os << csv_field(c.at("name")) << ',' << c.at("status").get<std::string>() << ','
           << (c.contains("seconds") ? std::to_string(c.at("seconds").get<double>()) : "") << ',' << csv_field(c.at("detail")) << '\n';
      }
      break;
    case Format::Json: break;
  }
  return os.str();
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "latex") return Format::Latex;
  if (name == "csv") return Format::Csv;
  if (name == "plain") return Format::Plain;
  return std::nullopt;
}

Json s_table_document(int d, std::optional<int> m) {
  const auto s = compute_s_polys(d);
  std::vector<std::pair<int, QPolynomial>> rows;
  for (int k : m_range(d, m)) rows.emplace_back(k, s[static_cast<std::size_t>(k)].value);
  return table("s_table", d, rows);
}

Json a_table_document(int d, std::optional<int> m) {
  std::vector<std::pair<int, QPolynomial>> rows;
  if (m) {
    if (*m < 0) throw Error(ErrorCode::InvalidArgument, "m must be nonnegative");
    rows.emplace_back(*m, ai_polynomial(d, *m).value);
  } else {
    for (int k : m_range(d, m)) rows.emplace_back(k, ai_polynomial(d, k).value);
  }
  return table("a_table", d, rows);
}

Json r_table_document(int d, std::optional<int> m) {
  std::vector<std::pair<int, QPolynomial>> rows;
  for (int k : m_range(d, m)) rows.emplace_back(k, compute_r_poly(d, k));
  return table("r_table", d, rows);
}

Json a2_document(int d) {
  const TwoVariableAi a = compute_a_two_variable(d);
  Json factored = nullptr;
  if (a.factored) {
    factored = Json{{"prefactor", to_json(a.factored->prefactor)},
                    {"u_power", a.factored->u_power},
                    {"factors", Json::array({to_json(parse_expression("u-1")), to_json(parse_expression("u-q"))})},
                    {"reduced", to_json(a.factored->reduced)}};
  }
  return Json{{"kind", "a2"}, {"d", d}, {"expanded", to_json(a.value)}, {"factored", std::move(factored)}};
}

Json mahler_document(int d) {
  const MahlerExpansion e = compute_mahler_expansion(d);
  Json coeffs = Json::array();
  for (std::size_t l = 0; l < e.coefficients.size(); ++l) coeffs.push_back(Json{{"l", l}, {"poly", to_json(e.coefficients[l])}});
  return Json{{"kind", "mahler"}, {"d", d}, {"coefficients", std::move(coeffs)}};
}

Json census_document(const ff::CensusResult& census, bool timing) {
  const Rational poly = evaluate_at_q(compute_s_polys(census.d)[static_cast<std::size_t>(census.m)].value, Rational(census.p));
  const std::uint64_t expected = poly.get_num().get_ui();
  Json out{{"kind", "census"},
           {"d", census.d},
           {"p", census.p},
           {"m", census.m},
           {"total", census.total_subspaces},
           {"generating", census.generating_subspaces},
           {"poly", expected},
           {"agrees", poly == Rational(BigInt(std::to_string(census.generating_subspaces)))}};
  if (timing) out["elapsed_seconds"] = census.elapsed.count();
  return out;
}

Json verify_document(Suite suite, const std::vector<CheckResult>& checks, bool timing) {
  Json list = Json::array();
  for (const auto& c : checks) {
    Json entry{{"name", c.name}, {"status", c.passed ? "PASS" : "FAIL"}, {"detail", c.detail}};
    if (timing) entry["seconds"] = c.seconds;
    list.push_back(std::move(entry));
  }
  return Json{{"kind", "verify-report"}, {"suite", to_string(suite)}, {"passed", all_passed(checks)}, {"checks", std::move(list)}};
}

std::string render(const Json& document, Format format) {
  if (format == Format::Json) return emit_json(document);
  const std::string kind = document.at("kind");
  if (kind == "s_table" || kind == "a_table" || kind == "r_table") return render_polynomial_table(document, format);
  if (kind == "a2") return render_a2(document, format);
  if (kind == "mahler") return render_mahler(document, format);
  if (kind == "census") return render_census(document, format);
  if (kind == "verify-report") return render_verify(document, format);
  throw Error(ErrorCode::InvalidArgument, "unknown document kind " + kind);
}

std::string render(const std::vector<Json>& documents, Format format) {
  if (format == Format::Json) return emit_json(Json(documents));
  std::string out;
  for (std::size_t i = 0; i < documents.size(); ++i) {
    if (i > 0) out += "\n";
    out += render(documents[i], format);
  }
  return out;
}

}  // namespace genpoly::cli
