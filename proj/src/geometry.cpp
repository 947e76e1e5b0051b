#include "setmax/geometry.hpp"

#include <algorithm>
#include <string>

namespace setmax {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_coordinates: return "invalid coordinates";
    case Errc::invalid_card: return "invalid card";
    case Errc::invalid_dimension: return "invalid dimension";
    case Errc::degenerate_pair: return "degenerate pair";
    case Errc::not_a_line: return "not a line";
    case Errc::dependent_points: return "dependent points";
    case Errc::singular_map: return "singular map";
    case Errc::duplicate_card: return "duplicate card";
    case Errc::missing_card: return "missing card";
    case Errc::parse_error: return "parse error";
    case Errc::invalid_config: return "invalid configuration";
    case Errc::budget_exceeded: return "budget exceeded";
    case Errc::checkpoint_corrupt: return "corrupt checkpoint";
    case Errc::checkpoint_version: return "checkpoint version mismatch";
    case Errc::checkpoint_mismatch: return "checkpoint configuration mismatch";
    case Errc::io_error: return "i/o error";
  }
  return "unknown error";
}

Dimension::Dimension(int props) : props_(props), deck_size_(1) {
  if (props < kMin || props > kMax) {
    throw Error(Errc::invalid_dimension,
                "number of properties must be in [" + std::to_string(kMin) + ", " +
                    std::to_string(kMax) + "], got " + std::to_string(props));
  }
  for (int i = 0; i < props; ++i) deck_size_ *= 3;
}

CardId encode_card(std::span<const int> coords) {
  if (coords.size() < static_cast<std::size_t>(Dimension::kMin) ||
      coords.size() > static_cast<std::size_t>(Dimension::kMax)) {
    throw Error(Errc::invalid_coordinates,
                "card must have between 2 and 8 coordinates, got " +
                    std::to_string(coords.size()));
  }
  std::uint32_t value = 0;
  for (int digit : coords) {
    if (digit < 0 || digit > 2) {
      throw Error(Errc::invalid_coordinates,
                  "coordinate " + std::to_string(digit) + " is not in {0,1,2}");
    }
    value = value * 3 + static_cast<std::uint32_t>(digit);
  }
  return CardId{value};
}

bool in_deck(CardId id, Dimension dim) noexcept { return id.value < dim.deck_size(); }

Coords decode_card(CardId id, Dimension dim) {
  if (!in_deck(id, dim)) {
    throw Error(Errc::invalid_card, "card id " + std::to_string(id.value) +
                                        " is outside the deck of " +
                                        std::to_string(dim.deck_size()));
  }
  Coords coords(static_cast<std::size_t>(dim.props()));
  unsigned value = id.value;
  for (auto it = coords.rbegin(); it != coords.rend(); ++it) {
    *it = static_cast<int>(value % 3);
    value /= 3;
  }
  return coords;
}

CardId third_card(CardId a, CardId b) {
  if (a == b) {
    throw Error(Errc::degenerate_pair,
                "third card of a pair needs two distinct cards, got " +
                    std::to_string(a.value) + " twice");
  }
  return detail::third_card_unchecked(a, b);
}

bool is_line(CardId a, CardId b, CardId c) noexcept {
  return a != b && a != c && b != c && detail::third_card_unchecked(a, b) == c;
}

Line Line::of(CardId a, CardId b, CardId c) {
  if (!is_line(a, b, c)) {
    throw Error(Errc::not_a_line, "cards " + std::to_string(a.value) + ", " +
                                      std::to_string(b.value) + ", " +
                                      std::to_string(c.value) + " do not form a set");
  }
  Line line{{a, b, c}};
  std::sort(line.cards.begin(), line.cards.end());
  return line;
}

std::vector<Line> all_lines(Dimension dim) {
  std::vector<Line> lines;
  lines.reserve(dim.line_count());
  const std::uint32_t deck = dim.deck_size();
  for (std::uint32_t a = 0; a < deck; ++a) {
    for (std::uint32_t b = a + 1; b < deck; ++b) {
      const CardId c = detail::third_card_unchecked(CardId{a}, CardId{b});
      if (c.value > b) lines.push_back(Line{{CardId{a}, CardId{b}, c}});
    }
  }
  return lines;
}

Flat span_flat(std::span<const CardId> points) {
  if (points.empty()) throw Error(Errc::dependent_points, "cannot span an empty set of points");

  std::vector<CardId> members;
  std::vector<bool> seen(6561, false);
  auto add = [&](CardId card) {
    if (seen[card.value]) return false;
    seen[card.value] = true;
    members.push_back(card);
    return true;
  };

  // Each new member is completed against every earlier one; the queue
  // drains once the set is closed.
  std::size_t processed = 0;
  for (CardId p : points) {
    if (p.value >= seen.size()) {
      throw Error(Errc::invalid_card, "card id " + std::to_string(p.value) + " out of range");
    }
    if (!add(p)) {
      throw Error(Errc::dependent_points, "point " + std::to_string(p.value) + " is repeated");
    }
  }
  while (processed < members.size()) {
    const CardId x = members[processed];
    for (std::size_t i = 0; i < processed; ++i) {
      add(detail::third_card_unchecked(x, members[i]));
    }
    ++processed;
  }

  int rank = 0;
  for (std::size_t size = 1; size < members.size(); size *= 3) ++rank;
  if (rank + 1 != static_cast<int>(points.size())) {
    throw Error(Errc::dependent_points,
                std::to_string(points.size()) + " points span a flat of rank " +
                    std::to_string(rank) + ", so they are affinely dependent");
  }
  std::sort(members.begin(), members.end());
  return Flat{std::move(members), rank};
}

std::uint32_t cube_of(CardId card, Dimension dim) {
  if (!in_deck(card, dim)) {
    throw Error(Errc::invalid_card, "card id " + std::to_string(card.value) +
                                        " is outside the deck of " +
                                        std::to_string(dim.deck_size()));
  }
  return card.value / 9u;
}

}  // namespace setmax
