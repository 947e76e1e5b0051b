#include "setmax/heuristics.hpp"

#include <string>
#include <tuple>

#include "setmax/counting.hpp"

namespace setmax {

CmmTrace cmm_run(Dimension dim, std::optional<int> upto) {
  const auto deck = dim.deck_size();
  const int turns = upto.value_or(static_cast<int>(deck));
  if (turns < 0 || turns > static_cast<int>(deck)) {
    throw Error(Errc::invalid_config, "turn limit must be in [0, " + std::to_string(deck) +
                                          "], got " + std::to_string(turns));
  }

  std::vector<CardId> selected;
  std::vector<std::uint8_t> chosen(deck, 0);
  std::vector<std::uint8_t> cube_used(dim.cube_count(), 0);
  // completes[c]: pairs of chosen cards whose third card is c, which is the
  // number of sets c would add.
  std::vector<std::uint32_t> completes(deck, 0);

  CmmTrace trace;
  trace.dim = dim;
  std::uint64_t cumulative = 0;

  auto take = [&](CardId card, int turn) {
    const std::uint64_t added = completes[card.value];
    for (CardId other : selected) {
      ++completes[detail::third_card_unchecked(card, other).value];
    }
    selected.push_back(card);
    chosen[card.value] = 1;
    cube_used[cube_of(card, dim)] = 1;
    cumulative += added;
    trace.turns.push_back(CmmTurn{turn, card, added, cumulative});
  };

  auto first_free_in_cube = [&](std::uint32_t cube) -> std::optional<CardId> {
    for (std::uint32_t v = cube * 9; v < cube * 9 + 9; ++v) {
      if (!chosen[v]) return CardId{v};
    }
    return std::nullopt;
  };

  auto first_unused_cube_card = [&]() -> std::optional<CardId> {
    for (std::uint32_t cube = 0; cube < dim.cube_count(); ++cube) {
      if (!cube_used[cube]) return CardId{cube * 9};
    }
    return std::nullopt;
  };

  auto greedy_pick = [&] {
    const std::uint32_t last_cube = cube_of(selected.back(), dim);
    std::optional<CardId> best;
    std::tuple<std::uint32_t, bool> best_key{};
    for (std::uint32_t v = 0; v < deck; ++v) {
      if (chosen[v]) continue;
      // Strict comparison keeps the lowest id among equal keys.
      const std::tuple<std::uint32_t, bool> key{completes[v], v / 9 != last_cube};
      if (!best || key > best_key) {
        best = CardId{v};
        best_key = key;
      }
    }
    return *best;
  };

  auto is_cube_turn = [&](int turn) {
    for (int t = 1; t <= dim.props() - 1; ++t) {
      if (turn == 3 * t + 1) return true;
    }
    return false;
  };

  for (int turn = 1; turn <= turns; ++turn) {
    CardId card;
    if (turn == 1) {
      card = *first_free_in_cube(0);
    } else if (turn == 2) {
      card = dim.cube_count() > 1 ? *first_free_in_cube(1) : *first_free_in_cube(0);
    } else if (turn == 3) {
      card = third_card(selected[0], selected[1]);
    } else if (auto fresh = is_cube_turn(turn) ? first_unused_cube_card() : std::nullopt) {
      card = *fresh;
    } else {
      card = greedy_pick();
    }
    take(card, turn);
  }

  trace.final_board = Board(dim, selected);
  return trace;
}

std::uint64_t count_new_sets(const Board& selected, CardId candidate) {
  return delta_sets(selected, candidate);
}

}  // namespace setmax
