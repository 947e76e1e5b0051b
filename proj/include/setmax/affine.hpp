#pragma once

#include <cstdint>
#include <vector>

#include "setmax/geometry.hpp"

namespace setmax {

class Board;

/// x -> M x + t over the 3-element field, with M invertible. Coordinates
/// follow the card digit order (property 0 first).
class AffineMap {
 public:
  /// `matrix` is d*d entries, row-major. Entries and translation digits are
  /// reduced mod 3. Throws Errc::singular_map when det(M) = 0 mod 3 and
  /// Errc::invalid_coordinates on a size mismatch.
  AffineMap(Dimension dim, std::vector<int> matrix, std::vector<int> translation);

  static AffineMap identity(Dimension dim);
  static AffineMap translation(Dimension dim, CardId offset);

  /// A map sending a to card 0 and b to card 1. Exists for every a != b;
  /// this is the transitivity on ordered pairs that the search relies on.
  static AffineMap pair_to_origin(Dimension dim, CardId a, CardId b);

  Dimension dim() const noexcept { return dim_; }
  const std::vector<std::uint8_t>& matrix() const noexcept { return matrix_; }
  const std::vector<std::uint8_t>& offset() const noexcept { return translation_; }

  CardId operator()(CardId card) const;

  /// this ∘ other
  AffineMap compose(const AffineMap& other) const;
  AffineMap inverse() const;

 private:
  AffineMap(Dimension dim, std::vector<std::uint8_t> matrix,
            std::vector<std::uint8_t> translation, bool /*checked*/);

  Dimension dim_;
  std::vector<std::uint8_t> matrix_;
  std::vector<std::uint8_t> translation_;
};

/// Determinant of a square row-major matrix over the 3-element field.
int determinant_mod3(std::vector<int> matrix, int size);

/// Image of every card of `board`. Affine maps send lines to lines, so the
/// image has the same size and the same set count.
Board apply_affine(const AffineMap& map, const Board& board);

}  // namespace setmax
