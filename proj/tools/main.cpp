#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <iostream>

#include "documents.hpp"
#include "genpoly/error.hpp"

using namespace genpoly;
using namespace genpoly::cli;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kDefaultMaxD = 5;

struct Args {
  int d = 0;
  std::optional<int> m;
  unsigned p = 2;
  bool u = false;
  std::string format;
  std::string budget;
  unsigned workers = 1;
  bool allow_large = false;
  bool no_timing = false;
  std::string suite = "all";
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || !(value >= 1) || value > 1e18 || value != std::floor(value)) {
    throw UsageError(std::string(what) + " must be a positive integer (e.g. 1e7), got '" + text + "'");
  }
  return static_cast<std::uint64_t>(value);
}

/// --budget wins over GENPOLY_BUDGET, which wins over the per-census defaults.
std::uint64_t effective_budget(const Args& args) {
  if (!args.budget.empty()) return parse_count(args.budget, "--budget");
  if (const char* env = std::getenv("GENPOLY_BUDGET"); env != nullptr && *env != '\0') return parse_count(env, "GENPOLY_BUDGET");
  return 0;
}

Format format_of(const Args& args, Format fallback) {
  if (args.format.empty()) return fallback;
  if (auto f = parse_format(args.format)) return *f;
  throw UsageError("--format must be one of json, latex, csv, plain");
}

void check_d(const Args& args) {
  if (args.d < 1) throw UsageError("--d must be at least 1");
  if (args.d > kDefaultMaxD && !args.allow_large) {
    throw Error(ErrorCode::BudgetExceeded, "d=" + std::to_string(args.d) + " exceeds the default maximum " + std::to_string(kDefaultMaxD) +
                                               "; pass --allow-large to compute it anyway");
  }
}

void add_common(CLI::App* cmd, Args& args, bool needs_d) {
  auto* d = cmd->add_option("--d", args.d, "matrix size d");
  if (needs_d) d->required();
  cmd->add_option("--format", args.format, "json, latex, csv or plain");
  cmd->add_flag("--allow-large", args.allow_large, "allow d above " + std::to_string(kDefaultMaxD));
  cmd->add_flag("--no-timing", args.no_timing, "omit timings for byte-stable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting polynomials for generating subspaces and absolutely irreducible representations"};
  app.require_subcommand(1);
  Args args;

  auto* s_poly = app.add_subcommand("s-poly", "s_d^(m)(q): m-dimensional subspaces generating M_d");
  add_common(s_poly, args, true);
  s_poly->add_option("--m", args.m, "subspace dimension (default: all)");

  auto* a_poly = app.add_subcommand("a-poly", "a_d^(m)(q), or a_d(q,u) with --u");
  add_common(a_poly, args, true);
  a_poly->add_option("--m", args.m, "number of generators (default: 0..d^2)");
  a_poly->add_flag("--u", args.u, "two-variable form, expanded and factored");

  auto* r_poly = app.add_subcommand("r-poly", "r_d^(m)(q) = [d^2 choose m]_q - s_d^(m)(q)");
  add_common(r_poly, args, true);
  r_poly->add_option("--m", args.m, "subspace dimension (default: all)");

  auto* mahler = app.add_subcommand("mahler", "coefficients of a_d(q,u) in the basis <u choose l>_q");
  add_common(mahler, args, true);

  auto* census = app.add_subcommand("census", "brute-force count of generating subspaces over F_p");
  add_common(census, args, true);
  census->add_option("--m", args.m, "subspace dimension")->required();
  census->add_option("--p", args.p, "prime field size")->required();
  census->add_option("--budget", args.budget, "maximum number of subspaces to enumerate");
  census->add_option("--workers", args.workers, "worker threads")->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_common(verify, args, false);
  verify->add_option("--suite", args.suite, "identities, paper-tables, oracle, theorems or all");
  verify->add_option("--budget", args.budget, "enumeration budget for oracle checks");
  verify->add_option("--workers", args.workers, "worker threads for oracle checks")->check(CLI::PositiveNumber);

  auto* table = app.add_subcommand("table", "the example tables: s_2 and s_3, or a_1..a_4(q,u) with --u");
  add_common(table, args, false);
  table->add_flag("--u", args.u, "two-variable tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*s_poly) {
      check_d(args);
      std::cout << render(s_table_document(args.d, args.m), format_of(args, Format::Plain));
    } else if (*a_poly) {
      check_d(args);
      if (args.u && args.m) throw UsageError("--u and --m are exclusive");
      const Json doc = args.u ? a2_document(args.d) : a_table_document(args.d, args.m);
      std::cout << render(doc, format_of(args, Format::Plain));
    } else if (*r_poly) {
      check_d(args);
      std::cout << render(r_table_document(args.d, args.m), format_of(args, Format::Plain));
    } else if (*mahler) {
      check_d(args);
      std::cout << render(mahler_document(args.d), format_of(args, Format::Plain));
    } else if (*census) {
      if (args.d < 1) throw UsageError("--d must be at least 1");
      const Format format = format_of(args, Format::Json);
      ff::CensusOptions options;
      options.budget = effective_budget(args);
      options.workers = args.workers;
      const auto result = ff::census_generating_subspaces(args.d, args.p, *args.m, options);
      const Json doc = census_document(result, !args.no_timing);
      std::cout << render(doc, format);
      if (!doc.at("agrees").get<bool>()) return kExitVerificationFailed;
    } else if (*verify) {
      const auto suite = parse_suite(args.suite);
      if (!suite) throw UsageError("--suite must be one of identities, paper-tables, oracle, theorems, all");
      const Format format = format_of(args, Format::Plain);
      VerifyOptions options;
      options.budget = effective_budget(args);
      options.workers = args.workers;
      const auto checks = run_suite(*suite, options);
      std::cout << render(verify_document(*suite, checks, !args.no_timing), format);
      if (!all_passed(checks)) return kExitVerificationFailed;
    } else if (*table) {
      std::vector<int> ds;
      if (args.d != 0) {
        check_d(args);
        ds.push_back(args.d);
      } else if (args.u) {
        ds = {1, 2, 3, 4};
      } else {
        ds = {2, 3};
      }
      std::vector<Json> docs;
      for (int d : ds) docs.push_back(args.u ? a2_document(d) : s_table_document(d, std::nullopt));
      std::cout << render(docs, format_of(args, Format::Latex));
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::BudgetExceeded: return kExitBudget;
      case ErrorCode::InvalidArgument:
      case ErrorCode::ParseError: return kExitUsage;
      default: return kExitVerificationFailed;
    }
  }
  return kExitOk;
}
