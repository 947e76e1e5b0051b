#pragma once

// Exhaustive maximisation of the set count over all n-card boards.
//
// max_sets_naive enumerates every n-subset of the deck and counts each one
// from scratch. It is the oracle for max_sets_pruned, a depth-first search
// over increasing card ids that keeps the running count with delta_sets and
// cuts a subtree once even the admissible bound cannot reach the best count
// seen so far. With symmetry enabled the pruned search only considers
// boards holding cards 0 and 1: the affine group is transitive on ordered
// pairs of distinct cards and preserves set counts, so some image of every
// board contains both.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <stop_token>

#include "setmax/board.hpp"

namespace setmax {

struct Checkpoint;

enum class SearchMode { naive, pruned };

/// Default naive budget, in triple checks C(3^d, n) * C(n, 3).
inline constexpr double kDefaultNaiveBudget = 1e10;

struct SearchProgress {
  std::uint64_t units_done = 0;
  std::uint64_t units_total = 0;
  std::uint64_t best_so_far = 0;
  std::uint64_t nodes_visited = 0;
  std::chrono::duration<double> elapsed{};
};

struct SearchConfig {
  Dimension dim{4};
  int n = 3;
  SearchMode mode = SearchMode::pruned;
  /// Fix cards 0 and 1. Pruned mode only.
  bool symmetry = true;
  int threads = 1;
  /// When set, the pruned search writes its state here at work-unit
  /// boundaries (throttled by report_interval) and when it stops.
  std::optional<std::filesystem::path> checkpoint_path;
  std::chrono::milliseconds report_interval{std::chrono::seconds(10)};
  std::function<void(const SearchProgress&)> on_progress;
  double naive_budget = kDefaultNaiveBudget;

  /// Cooperative interruption. Work in progress is abandoned at the next
  /// unit boundary and the result is returned with complete = false.
  std::stop_token stop;
  /// Stop after this many work units have been started in this session.
  std::optional<std::uint64_t> unit_limit;
};

struct SearchResult {
  std::uint64_t max_sets = 0;
  Board witness{Dimension{4}};
  std::uint64_t nodes_visited = 0;
  std::uint64_t configs_pruned = 0;
  std::chrono::duration<double> elapsed{};
  bool complete = false;
};

/// Throws Errc::invalid_config unless 3 <= n <= 3^d and threads >= 1.
void validate(const SearchConfig& config);

/// C(3^d, n) * C(n, 3) as a floating-point estimate.
double naive_triple_checks(Dimension dim, int n);

/// Enumerates all n-subsets in lexicographic order. The witness is the
/// lexicographically first maximiser. Throws Errc::budget_exceeded when
/// naive_triple_checks exceeds config.naive_budget.
SearchResult max_sets_naive(const SearchConfig& config);

/// Branch and bound. `resume` continues an interrupted run; its recorded
/// configuration must match (Errc::checkpoint_mismatch otherwise).
///
/// Subtrees are cut only when they cannot reach the best count, never when
/// they could tie it, so each work unit finds its lexicographically first
/// maximiser and the witness (the first among units) does not depend on the
/// thread count or on interruptions.
SearchResult max_sets_pruned(const SearchConfig& config,
                             const Checkpoint* resume = nullptr);

/// Dispatches on config.mode.
SearchResult max_sets(const SearchConfig& config);

/// Sum over m = current_size .. target_n - 1 of floor(m / 2): a card joining
/// an m-card board completes at most floor(m / 2) lines, one per disjoint
/// pair of existing cards.
constexpr std::uint64_t bound_remaining(int current_size, int target_n) noexcept {
  std::uint64_t total = 0;
  for (int m = current_size; m < target_n; ++m) total += static_cast<std::uint64_t>(m / 2);
  return total;
}

}  // namespace setmax
