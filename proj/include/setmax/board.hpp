#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "setmax/geometry.hpp"

namespace setmax {

/// A collection of distinct cards of one dimension, kept sorted, with a
/// membership bitmap over the whole deck. Immutable once built.
class Board {
 public:
  /// Throws Errc::duplicate_card on repeats, Errc::invalid_card when a card
  /// lies outside the deck.
  Board(Dimension dim, std::span<const CardId> cards);
  explicit Board(Dimension dim) : Board(dim, {}) {}

  static Board full_deck(Dimension dim);

  Dimension dim() const noexcept { return dim_; }
  std::span<const CardId> cards() const noexcept { return cards_; }
  std::size_t size() const noexcept { return cards_.size(); }
  bool empty() const noexcept { return cards_.empty(); }

  bool contains(CardId card) const noexcept {
    return card.value < dim_.deck_size() &&
           ((present_[card.value >> 6] >> (card.value & 63)) & 1u) != 0;
  }

  /// A new board with `card` added; Errc::duplicate_card if present.
  Board with(CardId card) const;
  /// A new board with `card` removed; Errc::missing_card if absent.
  Board without(CardId card) const;

  friend bool operator==(const Board& a, const Board& b) {
    return a.dim_ == b.dim_ && a.cards_ == b.cards_;
  }

 private:
  Dimension dim_;
  std::vector<CardId> cards_;
  std::vector<std::uint64_t> present_;
};

}  // namespace setmax
