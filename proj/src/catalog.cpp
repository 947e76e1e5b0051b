#include "setmax/catalog.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"
#include "setmax/board_io.hpp"
#include "setmax/counting.hpp"

namespace setmax {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

std::map<std::string, std::string, std::less<>> header_fields(std::string_view text) {
  std::map<std::string, std::string, std::less<>> fields;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto eol = std::min(text.find('\n', pos), text.size());
    auto line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (line.empty() || line.front() != '#') continue;
    line = trim(line.substr(1));
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) continue;
    fields.emplace(std::string(trim(line.substr(0, colon))),
                   std::string(trim(line.substr(colon + 1))));
  }
  return fields;
}

// Lines of `board` through `card`.
std::size_t degree(const Board& board, CardId card) {
  std::size_t hits = 0;
  for (CardId other : board.cards()) {
    if (other != card && board.contains(detail::third_card_unchecked(card, other))) ++hits;
  }
  return hits / 2;
}

// Every non-collinear triple of the board spans exactly the board.
StructureCheck closure_check(const std::string& name, const Board& board) {
  const auto cards = board.cards();
  std::size_t triples = 0;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    for (std::size_t j = i + 1; j < cards.size(); ++j) {
      for (std::size_t k = j + 1; k < cards.size(); ++k) {
        if (is_line(cards[i], cards[j], cards[k])) continue;
        const CardId triple[] = {cards[i], cards[j], cards[k]};
        const Flat flat = span_flat(triple);
        if (flat.rank != 2 || !std::equal(flat.cards.begin(), flat.cards.end(),
                                          cards.begin(), cards.end())) {
          return {name, false, "a non-collinear triple spans a different flat"};
        }
        ++triples;
      }
    }
  }
  for (CardId card : cards) {
    if (degree(board, card) != 4) return {name, false, "a card is not on exactly 4 sets"};
  }
  return {name, triples > 0,
          std::to_string(triples) + " non-collinear triples all span the same 9 cards"};
}

StructureCheck twelve_fourteen_plane(const Board& board) {
  const std::string name = "twelve_fourteen_plane";
  if (board.size() < 9) return {name, false, "board has fewer than 9 cards"};
  const std::vector<CardId> first_nine(board.cards().begin(), board.cards().begin() + 9);
  for (std::size_t k = 2; k < first_nine.size(); ++k) {
    if (is_line(first_nine[0], first_nine[1], first_nine[k])) continue;
    const CardId triple[] = {first_nine[0], first_nine[1], first_nine[k]};
    const Flat flat = span_flat(triple);
    const bool ok = flat.rank == 2 && flat.cards == first_nine;
    return {name, ok, ok ? "first 9 cards form a rank-2 flat" : "first 9 cards are not a flat"};
  }
  return {name, false, "first 9 cards are collinear"};
}

StructureCheck twelve_fourteen_extra_lines(const Board& board) {
  const std::string name = "twelve_fourteen_extra_lines";
  if (board.size() < 9) return {name, false, "board has fewer than 9 cards"};
  const Board plane(board.dim(), board.cards().first(9));
  std::vector<Line> extra;
  const SetCount counted = count_sets(board, ListLines::yes);
  for (const Line& line : *counted.lines) {
    if (!(plane.contains(line.cards[0]) && plane.contains(line.cards[1]) &&
          plane.contains(line.cards[2]))) {
      extra.push_back(line);
    }
  }
  const Dimension dim = board.dim();
  if (dim.props() != 4) return {name, false, "expected a 4-property board"};
  auto card = [&](std::string_view text) { return parse_card(text, dim); };
  std::vector<Line> expected = {
      Line::of(card("0,1,0,0"), card("0,0,1,0"), card("0,2,2,0")),
      Line::of(card("0,0,2,0"), card("0,1,2,0"), card("0,2,2,0")),
  };
  std::sort(expected.begin(), expected.end());
  std::sort(extra.begin(), extra.end());
  const bool ok = extra == expected;
  return {name, ok,
          std::to_string(extra.size()) + " sets leave the plane" +
              (ok ? ", matching the two expected sets" : ", expected exactly two known sets")};
}

StructureCheck eight_eight_degrees(const Board& board) {
  for (CardId card : board.cards()) {
    if (degree(board, card) != 3) {
      return {"eight_eight_degrees", false,
              "card " + format_card(card, board.dim()) + " is on " +
                  std::to_string(degree(board, card)) + " sets"};
    }
  }
  return {"eight_eight_degrees", true, "every card is on exactly 3 sets"};
}

StructureCheck eleven_thirteen_square(const Board& board) {
  const std::string name = "eleven_thirteen_embedded_square";
  const auto cards = board.cards();
  // Choose the two cards to drop.
  for (std::size_t i = 0; i < cards.size(); ++i) {
    for (std::size_t j = i + 1; j < cards.size(); ++j) {
      const Board sub = board.without(cards[i]).without(cards[j]);
      if (count_sets(sub).count == 12) {
        return {name, true,
                "dropping " + format_card(cards[i], board.dim()) + " and " +
                    format_card(cards[j], board.dim()) + " leaves 12 sets"};
      }
    }
  }
  return {name, false, "no 9-card sub-board has 12 sets"};
}

}  // namespace

Fixture parse_fixture(std::string_view text, std::string_view source) {
  const auto fields = header_fields(text);
  auto field = [&](std::string_view key) -> const std::string& {
    const auto it = fields.find(key);
    if (it == fields.end()) {
      throw Error(Errc::parse_error,
                  std::string(source) + ": missing '# " + std::string(key) + ":' header");
    }
    return it->second;
  };
  Fixture f{field("name"), parse_board(text, std::nullopt, source), 0, ""};
  try {
    f.expected_sets = std::stoull(field("expected_sets"));
  } catch (const std::logic_error&) {
    throw Error(Errc::parse_error, std::string(source) + ": expected_sets is not a number");
  }
  if (const auto it = fields.find("note"); it != fields.end()) f.note = it->second;
  return f;
}

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = [] {
    std::vector<Fixture> out;
    for (const auto& embedded : detail::embedded_fixture_boards()) {
      out.push_back(parse_fixture(embedded.text, std::string("fixtures/") + embedded.name + ".board"));
    }
    std::sort(out.begin(), out.end(),
              [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    return out;
  }();
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw Error(Errc::invalid_config, "unknown fixture '" + std::string(name) + "'");
}

bool VerifyReport::passed() const noexcept {
  return std::all_of(fixtures.begin(), fixtures.end(), [](const auto& c) { return c.pass; }) &&
         std::all_of(structure.begin(), structure.end(), [](const auto& c) { return c.pass; });
}

std::string VerifyReport::to_json() const {
  nlohmann::json doc;
  doc["fixtures"] = nlohmann::json::array();
  for (const auto& c : fixtures) {
    doc["fixtures"].push_back({{"fixture", c.fixture},
                               {"expected", c.expected},
                               {"got", c.got},
                               {"got_oracle", c.got_oracle},
                               {"pass", c.pass}});
  }
  doc["structure"] = nlohmann::json::array();
  for (const auto& c : structure) {
    doc["structure"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  doc["pass"] = passed();
  return doc.dump(2);
}

VerifyReport verify(std::span<const Fixture> list) {
  VerifyReport report;
  for (const Fixture& f : list) {
    FixtureCheck check{f.name, f.expected_sets, count_sets(f.board).count,
                       count_sets_bruteforce(f.board).count, false};
    check.pass = check.got == check.expected && check.got_oracle == check.expected;
    report.fixtures.push_back(std::move(check));

    if (f.name == "twelve_fourteen") {
      report.structure.push_back(twelve_fourteen_plane(f.board));
      report.structure.push_back(twelve_fourteen_extra_lines(f.board));
    } else if (f.name == "eight_eight") {
      report.structure.push_back(eight_eight_degrees(f.board));
    } else if (f.name == "eleven_thirteen") {
      report.structure.push_back(eleven_thirteen_square(f.board));
    } else if (f.name == "magic_square_plane" || f.name == "magic_square_skew") {
      report.structure.push_back(closure_check(f.name + "_closure", f.board));
    }
  }
  return report;
}

VerifyReport verify_all() { return verify(fixtures()); }

}  // namespace setmax
