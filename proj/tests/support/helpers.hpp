#pragma once

#include <initializer_list>
#include <vector>

#include "setmax/board.hpp"

namespace testing {

inline std::vector<setmax::CardId> ids(const std::vector<unsigned>& values) {
  std::vector<setmax::CardId> out;
  for (unsigned v : values) out.emplace_back(v);
  return out;
}

inline setmax::CardId card(std::initializer_list<int> coords) {
  return setmax::encode_card(std::vector<int>(coords));
}

inline setmax::Board board(int props, std::initializer_list<std::initializer_list<int>> cards) {
  std::vector<setmax::CardId> out;
  for (auto c : cards) out.push_back(card(c));
  return setmax::Board(setmax::Dimension(props), out);
}

inline setmax::Board board(int props, const std::vector<unsigned>& values) {
  return setmax::Board(setmax::Dimension(props), ids(values));
}

inline std::vector<unsigned> values(const setmax::Board& b) {
  std::vector<unsigned> out;
  for (auto c : b.cards()) out.push_back(c.value);
  return out;
}

}  // namespace testing
