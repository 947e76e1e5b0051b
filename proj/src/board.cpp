#include "setmax/board.hpp"

#include <algorithm>
#include <string>

namespace setmax {

Board::Board(Dimension dim, std::span<const CardId> cards)
    : dim_(dim),
      cards_(cards.begin(), cards.end()),
      present_((dim.deck_size() + 63) / 64, 0) {
  for (CardId card : cards_) {
    if (!in_deck(card, dim)) {
      throw Error(Errc::invalid_card, "card id " + std::to_string(card.value) +
                                          " is outside the deck of " +
                                          std::to_string(dim.deck_size()));
    }
    auto& word = present_[card.value >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (card.value & 63);
    if (word & bit) {
      throw Error(Errc::duplicate_card,
                  "card " + std::to_string(card.value) + " appears twice on the board");
    }
    word |= bit;
  }
  std::sort(cards_.begin(), cards_.end());
}

Board Board::full_deck(Dimension dim) {
  std::vector<CardId> cards;
  cards.reserve(dim.deck_size());
  for (std::uint32_t v = 0; v < dim.deck_size(); ++v) cards.emplace_back(v);
  return Board(dim, cards);
}

Board Board::with(CardId card) const {
  std::vector<CardId> cards(cards_);
  cards.push_back(card);
  return Board(dim_, cards);
}

Board Board::without(CardId card) const {
  if (!contains(card)) {
    throw Error(Errc::missing_card, "card " + std::to_string(card.value) + " is not on the board");
  }
  std::vector<CardId> cards;
  cards.reserve(cards_.size() - 1);
  for (CardId c : cards_) {
    if (c != card) cards.push_back(c);
  }
  return Board(dim_, cards);
}

}  // namespace setmax
