#pragma once

// Consecutive maximisation: a greedy construction that adds, turn by turn,
// the card completing the most new sets with the cards chosen so far.
//
//  * turns 1-2: the first card of cube 0 and the first card of cube 1
//    (lowest ids); with a single cube (d = 2) the two lowest cards.
//  * turn 3: the third card of those two.
//  * turns 4, 7, ..., 3d-2: the first card of the first cube with no chosen
//    card, or the greedy rule when every cube is already used.
//  * other turns: the card with the most new sets; ties go to a card in a
//    different cube from the last choice, then to the lowest id.

#include <cstdint>
#include <optional>
#include <vector>

#include "setmax/board.hpp"

namespace setmax {

struct CmmTurn {
  int turn = 0;
  CardId card;
  std::uint64_t new_sets = 0;
  std::uint64_t cumulative = 0;
};

struct CmmTrace {
  Dimension dim{3};
  std::vector<CmmTurn> turns;
  Board final_board{Dimension{3}};
};

/// Runs `upto` turns (the whole deck by default). Throws
/// Errc::invalid_config when upto is outside [0, 3^d].
CmmTrace cmm_run(Dimension dim, std::optional<int> upto = std::nullopt);

/// Sets completed by adding `candidate` to `selected`; same contract as
/// delta_sets.
std::uint64_t count_new_sets(const Board& selected, CardId candidate);

}  // namespace setmax
