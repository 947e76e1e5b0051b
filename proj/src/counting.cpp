#include "setmax/counting.hpp"

#include <algorithm>
#include <string>

namespace setmax {

SetCount count_sets(const Board& board, ListLines list) {
  const auto cards = board.cards();
  SetCount result;
  if (list == ListLines::yes) result.lines.emplace();
  std::uint64_t hits = 0;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    for (std::size_t j = i + 1; j < cards.size(); ++j) {
      const CardId c = detail::third_card_unchecked(cards[i], cards[j]);
      if (!board.contains(c)) continue;
      ++hits;
      // Record each line once, from its two smallest cards.
      if (result.lines && c > cards[j]) result.lines->push_back(Line{{cards[i], cards[j], c}});
    }
  }
  result.count = hits / 3;
  return result;
}

SetCount count_sets_bruteforce(const Board& board, ListLines list) {
  const auto cards = board.cards();
  SetCount result;
  if (list == ListLines::yes) result.lines.emplace();
  for (std::size_t i = 0; i < cards.size(); ++i) {
    for (std::size_t j = i + 1; j < cards.size(); ++j) {
      for (std::size_t k = j + 1; k < cards.size(); ++k) {
        if (!is_line(cards[i], cards[j], cards[k])) continue;
        ++result.count;
        if (result.lines) result.lines->push_back(Line{{cards[i], cards[j], cards[k]}});
      }
    }
  }
  return result;
}

std::uint64_t delta_sets(const Board& board, CardId candidate) {
  if (board.contains(candidate)) {
    throw Error(Errc::duplicate_card,
                "card " + std::to_string(candidate.value) + " is already on the board");
  }
  if (!in_deck(candidate, board.dim())) {
    throw Error(Errc::invalid_card, "card " + std::to_string(candidate.value) +
                                        " is outside the deck");
  }
  // Each new line {candidate, b, c} is met from both b and c.
  std::uint64_t hits = 0;
  for (CardId b : board.cards()) {
    if (board.contains(detail::third_card_unchecked(candidate, b))) ++hits;
  }
  return hits / 2;
}

}  // namespace setmax
