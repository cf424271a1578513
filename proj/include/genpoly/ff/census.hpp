#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "genpoly/ff/subspace.hpp"
#include "genpoly/rational.hpp"

namespace genpoly::ff {

inline constexpr std::uint64_t kDefaultSubspaceBudget = 10'000'000;
inline constexpr std::uint64_t kDefaultTupleBudget = 100'000'000;

struct CensusOptions {
  /// Maximum number of objects to enumerate; 0 selects the per-census default.
  std::uint64_t budget = 0;
  /// Worker threads; pivot-column sets (or first tuple entries) are dealt round-robin.
  unsigned workers = 1;
};

struct CensusResult {
  int d = 0;
  unsigned p = 0;
  int m = 0;
  std::uint64_t total_subspaces = 0;
  std::uint64_t generating_subspaces = 0;
  std::chrono::duration<double> elapsed{};
};

/// [d^2 choose m]_q at q = p.
BigInt predicted_subspace_count(int d, unsigned p, int m);
/// p^(m d^2).
BigInt predicted_tuple_count(int d, unsigned p, int m);

/// Receives the reduced row-echelon basis of each visited subspace.
using SubspaceVisitor = std::function<void(std::span<const FFMatrix> basis)>;

/// Visits every m-dimensional subspace of M_d(F_p) once, in reduced row-echelon
/// form: pivot-column sets in lexicographic order, then free entries as a
/// base-p counter (row-major slot order, first slot most significant).
/// Throws BudgetExceeded before visiting anything if the count exceeds the budget.
/// Returns the number of subspaces visited.
std::uint64_t enumerate_subspaces(int d, unsigned p, int m, const SubspaceVisitor& visitor, const CensusOptions& options = {});

/// Counts m-dimensional subspaces that generate M_d(F_p) as a unital algebra.
CensusResult census_generating_subspaces(int d, unsigned p, int m, const CensusOptions& options = {});

/// Counts m-tuples in M_d(F_p)^m generating M_d(F_p) as a unital algebra.
BigInt census_ai_tuples(int d, unsigned p, int m, const CensusOptions& options = {});

struct DecompositionCheck {
  BigInt tuples;
  /// Term r: (p^m - 1)(p^m - p)...(p^m - p^(r-1)) times the r-dimensional census.
  std::vector<BigInt> terms;
  BigInt sum;
  bool holds = false;
};

/// Measures both sides of the tuple/subspace decomposition by brute force.
DecompositionCheck measure_decomposition(int d, unsigned p, int m, const CensusOptions& options = {});

/// True when the measured decomposition holds; throws IdentityViolated otherwise.
bool census_decomposition_check(int d, unsigned p, int m, const CensusOptions& options = {});

}  // namespace genpoly::ff
