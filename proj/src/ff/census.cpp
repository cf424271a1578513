#include "genpoly/ff/census.hpp"

#include <algorithm>
#include <string>
#include <thread>

#include "f2.hpp"
#include "genpoly/combinatorics.hpp"
#include "genpoly/error.hpp"

namespace genpoly::ff {

namespace {

using Clock = std::chrono::steady_clock;

void check_budget(const BigInt& predicted, std::uint64_t budget, std::uint64_t fallback, const char* what) {
  const std::uint64_t limit = budget == 0 ? fallback : budget;
  if (predicted > BigInt(std::to_string(limit))) {
    throw Error(ErrorCode::BudgetExceeded,
                std::string(what) + ": predicted count " + predicted.get_str() + " exceeds budget " + std::to_string(limit));
  }
}

std::vector<std::vector<int>> pivot_sets(int n, int m) {
  std::vector<std::vector<int>> out;
  std::vector<int> c(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(c);
    int i = m - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - m + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < m; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

struct Slot {
  int row;
  int col;
};

// Free entries of the RREF shape with the given pivots, row-major.
std::vector<Slot> free_slots(int n, const std::vector<int>& pivots) {
  std::vector<Slot> out;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (int c = pivots[r] + 1; c < n; ++c) {
      if (!std::binary_search(pivots.begin(), pivots.end(), c)) out.push_back({static_cast<int>(r), c});
    }
  }
  return out;
}

template <class Visit>
void walk_pivot_set(const MatrixSpace& space, const std::vector<int>& pivots, Visit&& visit) {
  const int n = space.dimension();
  const unsigned p = space.p();
  const auto slots = free_slots(n, pivots);
  std::vector<FFMatrix> rows(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) rows[r].entries[static_cast<std::size_t>(pivots[r])] = 1;
  while (true) {
    visit(std::span<const FFMatrix>(rows));
    std::size_t k = slots.size();
    while (k > 0) {
      const Slot s = slots[k - 1];
      auto& e = rows[static_cast<std::size_t>(s.row)].entries[static_cast<std::size_t>(s.col)];
      if (++e < p) break;
      e = 0;
      --k;
    }
    if (k == 0) return;
  }
}

// Same order as walk_pivot_set, packed for F_2: slot 0 is the most significant counter bit.
std::uint64_t count_generating_f2(int d, const std::vector<int>& pivots) {
  const detail::F2Algebra algebra(d);
  const int n = d * d;
  const auto slots = free_slots(n, pivots);
  const std::size_t m = pivots.size();
  std::array<detail::Bits, 32> base{};
  for (std::size_t r = 0; r < m; ++r) base[r] = detail::Bits{1} << pivots[r];
  std::array<detail::Bits, 32> rows{};
  const std::uint64_t fillings = std::uint64_t{1} << slots.size();
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < fillings; ++t) {
    rows = base;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if ((t >> (slots.size() - 1 - k)) & 1U) rows[static_cast<std::size_t>(slots[k].row)] |= detail::Bits{1} << slots[k].col;
    }
    if (algebra.generates(std::span<const detail::Bits>(rows.data(), m))) ++count;
  }
  return count;
}

std::uint64_t count_generating(const MatrixSpace& space, const std::vector<int>& pivots) {
  if (space.p() == 2) return count_generating_f2(space.d(), pivots);
  std::uint64_t count = 0;
  walk_pivot_set(space, pivots, [&](std::span<const FFMatrix> basis) {
    if (generates_full_algebra(space, basis)) ++count;
  });
  return count;
}

template <class Task>
std::uint64_t run_sharded(std::size_t shards, unsigned workers, const Task& task) {
  workers = std::max(1U, workers);
  if (workers == 1 || shards <= 1) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < shards; ++i) total += task(i);
    return total;
  }
  std::vector<std::uint64_t> partial(workers, 0);
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < shards; i += workers) partial[w] += task(i);
    });
  }
  pool.clear();
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

void check_shape(int d, int m, int max_m) {
  if (d < 1 || d > kMaxDimension) throw Error(ErrorCode::InvalidArgument, "d out of range");
  if (m < 0 || m > max_m) throw Error(ErrorCode::InvalidArgument, "m out of range");
}

}  // namespace

BigInt predicted_subspace_count(int d, unsigned p, int m) {
  const Rational v = evaluate_at_q(gaussian_binomial(d * d, m), Rational(p));
  return v.get_num();
}

BigInt predicted_tuple_count(int d, unsigned p, int m) {
  return ipow(BigInt(p), static_cast<unsigned long>(m) * static_cast<unsigned long>(d * d));
}

std::uint64_t enumerate_subspaces(int d, unsigned p, int m, const SubspaceVisitor& visitor, const CensusOptions& options) {
  check_shape(d, m, d * d);
  const MatrixSpace space(d, p);
  check_budget(predicted_subspace_count(d, p, m), options.budget, kDefaultSubspaceBudget, "subspace enumeration");
  std::uint64_t visited = 0;
  for (const auto& pivots : pivot_sets(space.dimension(), m)) {
    walk_pivot_set(space, pivots, [&](std::span<const FFMatrix> basis) {
      visitor(basis);
      ++visited;
    });
  }
  return visited;
}

CensusResult census_generating_subspaces(int d, unsigned p, int m, const CensusOptions& options) {
  check_shape(d, m, d * d);
  const MatrixSpace space(d, p);
  const BigInt predicted = predicted_subspace_count(d, p, m);
  check_budget(predicted, options.budget, kDefaultSubspaceBudget, "subspace census");
  const auto start = Clock::now();
  const auto sets = pivot_sets(space.dimension(), m);
  const std::uint64_t generating =
      run_sharded(sets.size(), options.workers, [&](std::size_t i) { return count_generating(space, sets[i]); });
  CensusResult out;
  out.d = d;
  out.p = p;
  out.m = m;
  out.total_subspaces = predicted.get_ui();
  out.generating_subspaces = generating;
  out.elapsed = Clock::now() - start;
  return out;
}

BigInt census_ai_tuples(int d, unsigned p, int m, const CensusOptions& options) {
  check_shape(d, m, 64);
  const MatrixSpace space(d, p);
  check_budget(predicted_tuple_count(d, p, m), options.budget, kDefaultTupleBudget, "tuple census");
  if (m == 0) return d == 1 ? 1 : 0;
  const int n = space.dimension();
  const std::uint64_t per_matrix = predicted_tuple_count(d, p, 1).get_ui();

  auto decode = [&](std::uint64_t index) {
    FFMatrix a;
    for (int k = 0; k < n; ++k) {
      a.entries[static_cast<std::size_t>(k)] = static_cast<Element>(index % p);
      index /= p;
    }
    return a;
  };

  // Shard i fixes the first matrix; the rest run as an odometer over the other m-1.
  const std::uint64_t count = run_sharded(per_matrix, options.workers, [&](std::size_t first) {
    std::vector<FFMatrix> tuple(static_cast<std::size_t>(m));
    std::vector<std::uint64_t> index(static_cast<std::size_t>(m), 0);
    tuple[0] = decode(first);
    for (std::size_t j = 1; j < tuple.size(); ++j) tuple[j] = decode(0);
    std::uint64_t local = 0;
    while (true) {
      if (generates_full_algebra(space, tuple)) ++local;
      std::size_t j = tuple.size();
      while (j > 1) {
        if (++index[j - 1] < per_matrix) {
          tuple[j - 1] = decode(index[j - 1]);
          break;
        }
        index[j - 1] = 0;
        tuple[j - 1] = decode(0);
        --j;
      }
      if (j <= 1) return local;
    }
  });
  return BigInt(std::to_string(count));
}

DecompositionCheck measure_decomposition(int d, unsigned p, int m, const CensusOptions& options) {
  DecompositionCheck out;
  out.tuples = census_ai_tuples(d, p, m, options);
  const BigInt pm = ipow(BigInt(p), static_cast<unsigned long>(m));
  for (int r = 0; r <= std::min(m, d * d); ++r) {
    BigInt factor = 1;
    for (int i = 0; i < r; ++i) factor *= pm - ipow(BigInt(p), static_cast<unsigned long>(i));
    const CensusResult census = census_generating_subspaces(d, p, r, options);
    out.terms.push_back(factor * BigInt(std::to_string(census.generating_subspaces)));
    out.sum += out.terms.back();
  }
  out.holds = out.tuples == out.sum;
  return out;
}

bool census_decomposition_check(int d, unsigned p, int m, const CensusOptions& options) {
  const DecompositionCheck check = measure_decomposition(d, p, m, options);
  if (!check.holds) {
    throw Error(ErrorCode::IdentityViolated, "tuple census " + check.tuples.get_str() + " != subspace decomposition " +
                                                 check.sum.get_str() + " for d=" + std::to_string(d) +
                                                 ", p=" + std::to_string(p) + ", m=" + std::to_string(m));
  }
  return true;
}

}  // namespace genpoly::ff
