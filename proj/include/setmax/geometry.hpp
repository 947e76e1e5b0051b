#pragma once

// Cards as points of the affine space AG(d,3).
//
// A card with d properties is a vector of d digits in {0,1,2}. It is stored
// as the base-3 integer whose most significant digit is property 0, so the
// card (0,0,0,2) has id 2 and (2,2,2,2) has id 80. Three distinct cards form
// a set exactly when their coordinate-wise sum is 0 mod 3, i.e. when they
// are collinear.

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "setmax/error.hpp"

namespace setmax {

class Dimension {
 public:
  static constexpr int kMin = 2;
  static constexpr int kMax = 8;

  /// Throws Errc::invalid_dimension outside [kMin, kMax].
  explicit Dimension(int props);

  constexpr int props() const noexcept { return props_; }
  /// 3^d
  constexpr std::uint32_t deck_size() const noexcept { return deck_size_; }
  /// Number of nine-card cubes, 3^(d-2).
  constexpr std::uint32_t cube_count() const noexcept { return deck_size_ / 9; }
  /// Number of lines in AG(d,3): 3^(d-1) (3^d - 1) / 2.
  constexpr std::uint64_t line_count() const noexcept {
    return std::uint64_t{deck_size_ / 3} * (deck_size_ - 1) / 2;
  }

  friend constexpr bool operator==(Dimension, Dimension) = default;

 private:
  int props_;
  std::uint32_t deck_size_;
};

struct CardId {
  std::uint16_t value = 0;

  constexpr CardId() = default;
  constexpr explicit CardId(std::uint32_t v) : value(static_cast<std::uint16_t>(v)) {}

  friend constexpr auto operator<=>(CardId, CardId) = default;
};

using Coords = std::vector<int>;

/// The dimension is the length of `coords`.
CardId encode_card(std::span<const int> coords);
Coords decode_card(CardId id, Dimension dim);

bool in_deck(CardId id, Dimension dim) noexcept;

namespace detail {

// Third-card completion on four base-3 digits at a time: entry [a][b] is
// the digit-wise (-a-b) mod 3 of two values below 81.
inline constexpr auto kThirdOf4Digits = [] {
  std::array<std::array<std::uint8_t, 81>, 81> table{};
  for (int a = 0; a < 81; ++a) {
    for (int b = 0; b < 81; ++b) {
      int out = 0;
      for (int p = 1, x = a, y = b; p < 81; p *= 3, x /= 3, y /= 3) {
        out += ((6 - x % 3 - y % 3) % 3) * p;
      }
      table[a][b] = static_cast<std::uint8_t>(out);
    }
  }
  return table;
}();

/// No degenerate-pair check; a == b yields a. Valid for every d <= 8.
constexpr CardId third_card_unchecked(CardId a, CardId b) noexcept {
  const unsigned ah = a.value / 81u, al = a.value % 81u;
  const unsigned bh = b.value / 81u, bl = b.value % 81u;
  return CardId{kThirdOf4Digits[ah][bh] * 81u + kThirdOf4Digits[al][bl]};
}

}  // namespace detail

/// The unique card completing {a, b} to a set. Independent of the dimension
/// because leading zero digits complete to zero. Throws Errc::degenerate_pair
/// when a == b.
CardId third_card(CardId a, CardId b);

/// True iff the three cards are pairwise distinct and sum to 0 mod 3.
bool is_line(CardId a, CardId b, CardId c) noexcept;

/// An unordered collinear triple, stored in increasing order.
struct Line {
  std::array<CardId, 3> cards;

  /// Throws Errc::not_a_line unless is_line(a, b, c).
  static Line of(CardId a, CardId b, CardId c);

  bool contains(CardId card) const noexcept {
    return cards[0] == card || cards[1] == card || cards[2] == card;
  }

  friend auto operator<=>(const Line&, const Line&) = default;
};

/// Every line of AG(d,3) exactly once, in lexicographic order.
std::vector<Line> all_lines(Dimension dim);

/// An affine subspace: 3^rank cards closed under third-card completion.
struct Flat {
  std::vector<CardId> cards;  // sorted
  int rank = 0;
};

/// Closure of `points` under third-card completion. The points must be
/// distinct and affinely independent; three collinear points (or any other
/// dependent input) raise Errc::dependent_points.
Flat span_flat(std::span<const CardId> points);

/// Index of the nine-card cube holding `card`: cards share a cube iff they
/// agree on the first d-2 properties.
std::uint32_t cube_of(CardId card, Dimension dim);

}  // namespace setmax
