#pragma once

// Reference computations for tests. Nothing here goes through the library's
// card encoding or completion tables: cards are decoded with plain base-3
// arithmetic and sets are checked coordinate by coordinate.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

inline std::vector<int> digits(unsigned id, int d) {
  std::vector<int> out(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    out[i] = static_cast<int>(id % 3);
    id /= 3;
  }
  return out;
}

inline unsigned from_digits(const std::vector<int>& ds) {
  unsigned v = 0;
  for (int x : ds) v = 3 * v + static_cast<unsigned>(x);
  return v;
}

inline unsigned deck_size(int d) {
  unsigned n = 1;
  for (int i = 0; i < d; ++i) n *= 3;
  return n;
}

/// Each property all equal or all different.
inline bool is_set(unsigned a, unsigned b, unsigned c, int d) {
  if (a == b || b == c || a == c) return false;
  const auto x = digits(a, d), y = digits(b, d), z = digits(c, d);
  for (int i = 0; i < d; ++i) {
    const bool same = x[i] == y[i] && y[i] == z[i];
    const bool different = x[i] != y[i] && y[i] != z[i] && x[i] != z[i];
    if (!same && !different) return false;
  }
  return true;
}

inline std::uint64_t count_sets(const std::vector<unsigned>& cards, int d) {
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < cards.size(); ++i)
    for (std::size_t j = i + 1; j < cards.size(); ++j)
      for (std::size_t k = j + 1; k < cards.size(); ++k)
        if (is_set(cards[i], cards[j], cards[k], d)) ++count;
  return count;
}

/// Brute force over all C(3^d, 3) triples.
inline std::uint64_t lines_in_space(int d) {
  const unsigned n = deck_size(d);
  std::vector<std::vector<int>> pts;
  for (unsigned v = 0; v < n; ++v) pts.push_back(digits(v, d));
  std::uint64_t count = 0;
  for (unsigned a = 0; a < n; ++a)
    for (unsigned b = a + 1; b < n; ++b)
      for (unsigned c = b + 1; c < n; ++c) {
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) ok = (pts[a][i] + pts[b][i] + pts[c][i]) % 3 == 0;
        if (ok) ++count;
      }
  return count;
}

/// Distinct random card ids, unsorted.
inline std::vector<unsigned> random_cards(std::mt19937& rng, int d, std::size_t n) {
  std::vector<unsigned> all(deck_size(d));
  for (unsigned v = 0; v < all.size(); ++v) all[v] = v;
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(n);
  return all;
}

}  // namespace oracle
