#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genpoly/ff/census.hpp"
#include "genpoly/verify.hpp"
#include "json_schema.hpp"

namespace genpoly::cli {

enum class Format { Json, Latex, Csv, Plain };

std::optional<Format> parse_format(std::string_view name);

// Output documents are JSON objects with a "kind" field:
//   s_table, a_table, r_table  {"d", "entries": [{"m", "poly"}]}
//   a2                         {"d", "expanded", "factored": {"prefactor", "u_power", "factors", "reduced"} | null}
//   mahler                     {"d", "coefficients": [{"l", "poly"}]}
//   census                     {"d", "p", "m", "total", "generating", "poly", "agrees", "elapsed_seconds"?}
//   verify-report              {"suite", "passed", "checks": [{"name", "status", "detail", "seconds"?}]}
// Every other format is rendered from the JSON form.

/// m omitted: all m = 0..d^2.
Json s_table_document(int d, std::optional<int> m);
Json a_table_document(int d, std::optional<int> m);
Json r_table_document(int d, std::optional<int> m);
Json a2_document(int d);
Json mahler_document(int d);
Json census_document(const ff::CensusResult& census, bool timing);
Json verify_document(Suite suite, const std::vector<CheckResult>& checks, bool timing);

std::string render(const Json& document, Format format);
/// Several documents: a JSON array, or the renderings separated by blank lines.
std::string render(const std::vector<Json>& documents, Format format);

}  // namespace genpoly::cli
