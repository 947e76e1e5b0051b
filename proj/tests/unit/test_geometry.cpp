#include <random>
#include <set>

#include "doctest.h"
#include "setmax/counting.hpp"
#include "setmax/geometry.hpp"
#include "support/helpers.hpp"
#include "support/oracle.hpp"

using namespace setmax;
using testing::card;

TEST_CASE("encode_card") {
  CHECK(card({0, 0, 0, 0}).value == 0);
  CHECK(card({0, 0, 0, 2}).value == 2);
  // 0*27 + 1*9 + 2*3 + 0
  CHECK(card({0, 1, 2, 0}).value == oracle::from_digits({0, 1, 2, 0}));
  CHECK(card({0, 1, 2, 0}).value == 15);
  CHECK(decode_card(card({0, 1, 2, 0}), Dimension(4)) == Coords{0, 1, 2, 0});

  CHECK_THROWS_AS(card({0, 3, 0, 0}), Error);
  CHECK_THROWS_AS(card({0, -1, 0, 0}), Error);
  CHECK_THROWS_AS(card({1}), Error);
  try {
    card({0, 0, 0, 7});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_coordinates);
  }
}

TEST_CASE("decode_card") {
  const Dimension d4(4);
  CHECK(decode_card(CardId{0}, d4) == Coords{0, 0, 0, 0});
  CHECK(decode_card(CardId{80}, d4) == Coords{2, 2, 2, 2});
  CHECK(decode_card(card({0, 2, 2, 0}), d4) == Coords{0, 2, 2, 0});
  try {
    decode_card(CardId{81}, d4);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::invalid_card);
  }

  SUBCASE("round trip for every card, d = 2..6") {
    for (int d = 2; d <= 6; ++d) {
      const Dimension dim(d);
      for (std::uint32_t v = 0; v < dim.deck_size(); ++v) {
        const Coords c = decode_card(CardId{v}, dim);
        REQUIRE(c == oracle::digits(v, d));
        REQUIRE(encode_card(c).value == v);
      }
    }
  }
}

TEST_CASE("Dimension") {
  CHECK(Dimension(4).deck_size() == 81);
  CHECK(Dimension(3).deck_size() == 27);
  CHECK(Dimension(8).deck_size() == 6561);
  CHECK(Dimension(4).cube_count() == 9);
  CHECK_THROWS_AS(Dimension(1), Error);
  CHECK_THROWS_AS(Dimension(9), Error);
}

TEST_CASE("third_card") {
  CHECK(third_card(card({0, 0, 0, 0}), card({0, 0, 0, 1})) == card({0, 0, 0, 2}));
  CHECK(third_card(card({0, 1, 0, 0}), card({0, 0, 1, 0})) == card({0, 2, 2, 0}));
  try {
    third_card(card({1, 1, 1, 1}), card({1, 1, 1, 1}));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_pair);
  }

  SUBCASE("algebra over every pair, d = 4") {
    const int d = 4;
    for (unsigned a = 0; a < 81; ++a) {
      for (unsigned b = 0; b < 81; ++b) {
        if (a == b) continue;
        const CardId c = third_card(CardId{a}, CardId{b});
        REQUIRE(oracle::is_set(a, b, c.value, d));
        REQUIRE(c == third_card(CardId{b}, CardId{a}));
        REQUIRE(third_card(CardId{a}, c) == CardId{b});
        REQUIRE(is_line(CardId{a}, CardId{b}, c));
      }
    }
  }

  SUBCASE("agrees with the set rule at d = 8") {
    std::mt19937 rng(8);
    for (int trial = 0; trial < 5000; ++trial) {
      const auto pair = oracle::random_cards(rng, 8, 2);
      const CardId c = third_card(CardId{pair[0]}, CardId{pair[1]});
      REQUIRE(c.value < 6561);
      REQUIRE(oracle::is_set(pair[0], pair[1], c.value, 8));
    }
  }
}

TEST_CASE("is_line") {
  CHECK(is_line(card({0, 0, 0, 0}), card({0, 0, 0, 1}), card({0, 0, 0, 2})));
  CHECK_FALSE(is_line(card({0, 0, 0, 0}), card({0, 0, 0, 1}), card({0, 0, 1, 0})));
  CHECK(is_line(card({0, 0, 2, 0}), card({0, 1, 2, 0}), card({0, 2, 2, 0})));
  CHECK_FALSE(is_line(CardId{5}, CardId{5}, CardId{5}));

  SUBCASE("matches the set rule on every triple, d = 3, in every order") {
    for (unsigned a = 0; a < 27; ++a)
      for (unsigned b = 0; b < 27; ++b)
        for (unsigned c = 0; c < 27; ++c) {
          REQUIRE(is_line(CardId{a}, CardId{b}, CardId{c}) == oracle::is_set(a, b, c, 3));
        }
  }
}

TEST_CASE("Line::of") {
  const Line l = Line::of(CardId{2}, CardId{0}, CardId{1});
  CHECK(l.cards == std::array<CardId, 3>{CardId{0}, CardId{1}, CardId{2}});
  CHECK(l == Line::of(CardId{1}, CardId{2}, CardId{0}));
  CHECK_THROWS_AS(Line::of(CardId{0}, CardId{1}, CardId{3}), Error);
}

TEST_CASE("all_lines") {
  // Frozen from oracle::lines_in_space (brute force over all triples).
  CHECK(oracle::lines_in_space(2) == 12);
  CHECK(oracle::lines_in_space(3) == 117);
  CHECK(oracle::lines_in_space(4) == 1080);

  for (int d = 2; d <= 4; ++d) {
    const Dimension dim(d);
    const auto lines = all_lines(dim);
    CHECK(lines.size() == oracle::lines_in_space(d));
    CHECK(lines.size() == dim.line_count());
    CHECK(std::set<Line>(lines.begin(), lines.end()).size() == lines.size());

    // Every card is on (3^d - 1) / 2 lines.
    std::vector<int> tally(dim.deck_size(), 0);
    for (const Line& l : lines) {
      REQUIRE(oracle::is_set(l.cards[0].value, l.cards[1].value, l.cards[2].value, d));
      REQUIRE(l.cards[0] < l.cards[1]);
      REQUIRE(l.cards[1] < l.cards[2]);
      for (CardId c : l.cards) ++tally[c.value];
    }
    for (int t : tally) REQUIRE(t == static_cast<int>(dim.deck_size() - 1) / 2);
  }
  CHECK(all_lines(Dimension(2)).size() == 12);
  CHECK(all_lines(Dimension(3)).size() == 117);
  CHECK(all_lines(Dimension(4)).size() == 1080);
  CHECK(all_lines(Dimension(5)).size() == Dimension(5).line_count());
  CHECK(Dimension(5).line_count() == 81 * 242 / 2);
}

TEST_CASE("span_flat") {
  SUBCASE("coordinate plane") {
    const CardId pts[] = {card({0, 0, 0, 0}), card({0, 0, 0, 1}), card({0, 0, 1, 0})};
    const Flat f = span_flat(pts);
    CHECK(f.rank == 2);
    std::vector<CardId> plane;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3; ++y) plane.push_back(card({0, 0, x, y}));
    CHECK(f.cards == plane);
  }

  SUBCASE("skew magic square") {
    const CardId pts[] = {card({0, 0, 0, 0}), card({0, 1, 1, 0}), card({0, 0, 0, 1})};
    const Flat f = span_flat(pts);
    const Board expected = testing::board(4, {{0, 0, 0, 0}, {0, 1, 1, 0}, {0, 2, 2, 0},
                                              {0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1},
                                              {0, 0, 0, 2}, {0, 1, 1, 2}, {0, 2, 2, 2}});
    CHECK(std::equal(f.cards.begin(), f.cards.end(), expected.cards().begin(),
                     expected.cards().end()));
  }

  SUBCASE("lower and higher ranks") {
    const CardId one[] = {CardId{7}};
    CHECK(span_flat(one).cards == std::vector<CardId>{CardId{7}});
    CHECK(span_flat(one).rank == 0);
    const CardId two[] = {CardId{0}, CardId{1}};
    CHECK(span_flat(two).rank == 1);
    CHECK(span_flat(two).cards.size() == 3);
    const CardId four[] = {CardId{0}, CardId{1}, CardId{3}, CardId{9}};
    const Flat hyper = span_flat(four);
    CHECK(hyper.rank == 3);
    CHECK(hyper.cards.size() == 27);
  }

  SUBCASE("dependent input") {
    const CardId collinear[] = {card({0, 0, 0, 0}), card({0, 0, 0, 1}), card({0, 0, 0, 2})};
    try {
      span_flat(collinear);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::dependent_points);
    }
    const CardId repeated[] = {CardId{4}, CardId{4}};
    CHECK_THROWS_AS(span_flat(repeated), Error);
    CHECK_THROWS_AS(span_flat(std::span<const CardId>{}), Error);
  }

  SUBCASE("1000 random non-collinear triples span 9 cards with 12 sets") {
    std::mt19937 rng(2024);
    const Dimension d4(4);
    int done = 0;
    while (done < 1000) {
      const auto t = oracle::random_cards(rng, 4, 3);
      if (oracle::is_set(t[0], t[1], t[2], 4)) continue;
      const auto pts = testing::ids(t);
      const Flat f = span_flat(pts);
      REQUIRE(f.cards.size() == 9);
      REQUIRE(f.rank == 2);
      const Board b(d4, f.cards);
      REQUIRE(count_sets(b).count == 12);
      std::vector<unsigned> raw;
      for (CardId c : f.cards) raw.push_back(c.value);
      REQUIRE(oracle::count_sets(raw, 4) == 12);
      ++done;
    }
  }
}

TEST_CASE("cube_of") {
  const Dimension d4(4);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(cube_of(card({0, 0, x, y}), d4) == 0);

  std::set<std::uint32_t> cubes;
  for (std::uint32_t v = 0; v < 81; ++v) cubes.insert(cube_of(CardId{v}, d4));
  CHECK(cubes.size() == 9);
  CHECK(*cubes.rbegin() == 8);

  const Dimension d3(3);
  const auto one = cube_of(card({1, 0, 0}), d3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      CHECK(cube_of(card({1, x, y}), d3) == one);
      CHECK(cube_of(card({0, x, y}), d3) != one);
    }

  SUBCASE("same cube iff same leading d-2 digits") {
    for (unsigned a = 0; a < 81; ++a)
      for (unsigned b = 0; b < 81; ++b) {
        const auto da = oracle::digits(a, 4), db = oracle::digits(b, 4);
        const bool prefix = da[0] == db[0] && da[1] == db[1];
        REQUIRE((cube_of(CardId{a}, d4) == cube_of(CardId{b}, d4)) == prefix);
      }
  }
  CHECK_THROWS_AS(cube_of(CardId{81}, d4), Error);
}
