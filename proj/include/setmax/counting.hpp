#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setmax/board.hpp"

namespace setmax {

struct SetCount {
  std::uint64_t count = 0;
  /// Present only when requested.
  std::optional<std::vector<Line>> lines;
};

enum class ListLines : bool { no = false, yes = true };

/// Pair completion: each unordered pair whose third card is on the board
/// contributes one hit, and every line is hit by its three pairs.
SetCount count_sets(const Board& board, ListLines list = ListLines::no);

/// Checks all C(n,3) triples with is_line. Kept as the reference oracle.
SetCount count_sets_bruteforce(const Board& board, ListLines list = ListLines::no);

/// count_sets(board + candidate) - count_sets(board), from the pairs
/// {candidate, b}. Throws Errc::duplicate_card if the candidate is present.
std::uint64_t delta_sets(const Board& board, CardId candidate);

/// Upper bound on the sets of any n-card board: every line uses 3 of the
/// C(n,2) pairs and no pair is shared.
constexpr std::uint64_t max_sets_upper_bound(std::uint64_t n) noexcept {
  return n < 2 ? 0 : n * (n - 1) / 6;
}

}  // namespace setmax
