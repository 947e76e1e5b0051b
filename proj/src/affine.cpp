#include "setmax/affine.hpp"

#include <string>
#include <utility>

#include "setmax/board.hpp"

namespace setmax {
namespace {

int mod3(int x) { return ((x % 3) + 3) % 3; }

std::vector<std::uint8_t> reduce(const std::vector<int>& values) {
  std::vector<std::uint8_t> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(mod3(values[i]));
  }
  return out;
}

// Gauss-Jordan over the 3-element field. Returns false when singular.
bool invert_mod3(std::vector<int> m, int size, std::vector<int>& inv) {
  inv.assign(static_cast<std::size_t>(size * size), 0);
  for (int i = 0; i < size; ++i) inv[i * size + i] = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && m[pivot * size + col] == 0) ++pivot;
    if (pivot == size) return false;
    for (int j = 0; j < size; ++j) {
      std::swap(m[col * size + j], m[pivot * size + j]);
      std::swap(inv[col * size + j], inv[pivot * size + j]);
    }
    // 1 and 2 are their own inverses mod 3.
    const int scale = m[col * size + col];
    for (int j = 0; j < size; ++j) {
      m[col * size + j] = mod3(m[col * size + j] * scale);
      inv[col * size + j] = mod3(inv[col * size + j] * scale);
    }
    for (int row = 0; row < size; ++row) {
      const int factor = m[row * size + col];
      if (row == col || factor == 0) continue;
      for (int j = 0; j < size; ++j) {
        m[row * size + j] = mod3(m[row * size + j] - factor * m[col * size + j]);
        inv[row * size + j] = mod3(inv[row * size + j] - factor * inv[col * size + j]);
      }
    }
  }
  return true;
}

}  // namespace

int determinant_mod3(std::vector<int> m, int size) {
  for (auto& x : m) x = mod3(x);
  int det = 1;
  for (int col = 0; col < size; ++col) {
    int pivot = col;
    while (pivot < size && m[pivot * size + col] == 0) ++pivot;
    if (pivot == size) return 0;
    if (pivot != col) {
      for (int j = 0; j < size; ++j) std::swap(m[col * size + j], m[pivot * size + j]);
      det = mod3(-det);
    }
    const int p = m[col * size + col];
    det = mod3(det * p);
    for (int row = col + 1; row < size; ++row) {
      // p^-1 == p mod 3
      const int factor = mod3(m[row * size + col] * p);
      if (factor == 0) continue;
      for (int j = col; j < size; ++j) {
        m[row * size + j] = mod3(m[row * size + j] - factor * m[col * size + j]);
      }
    }
  }
  return det;
}

AffineMap::AffineMap(Dimension dim, std::vector<std::uint8_t> matrix,
                     std::vector<std::uint8_t> translation, bool)
    : dim_(dim), matrix_(std::move(matrix)), translation_(std::move(translation)) {}

AffineMap::AffineMap(Dimension dim, std::vector<int> matrix, std::vector<int> translation)
    : dim_(dim) {
  const auto d = static_cast<std::size_t>(dim.props());
  if (matrix.size() != d * d || translation.size() != d) {
    throw Error(Errc::invalid_coordinates,
                "affine map for d=" + std::to_string(d) + " needs a " + std::to_string(d) +
                    "x" + std::to_string(d) + " matrix and " + std::to_string(d) +
                    " translation digits");
  }
  if (determinant_mod3(matrix, dim.props()) == 0) {
    throw Error(Errc::singular_map, "affine map matrix is singular mod 3");
  }
  matrix_ = reduce(matrix);
  translation_ = reduce(translation);
}

AffineMap AffineMap::identity(Dimension dim) {
  const int d = dim.props();
  std::vector<int> m(static_cast<std::size_t>(d * d), 0);
  for (int i = 0; i < d; ++i) m[i * d + i] = 1;
  return AffineMap(dim, std::move(m), std::vector<int>(static_cast<std::size_t>(d), 0));
}

AffineMap AffineMap::translation(Dimension dim, CardId offset) {
  const int d = dim.props();
  std::vector<int> m(static_cast<std::size_t>(d * d), 0);
  for (int i = 0; i < d; ++i) m[i * d + i] = 1;
  return AffineMap(dim, std::move(m), decode_card(offset, dim));
}

AffineMap AffineMap::pair_to_origin(Dimension dim, CardId a, CardId b) {
  if (a == b) throw Error(Errc::degenerate_pair, "pair_to_origin needs two distinct cards");
  const int d = dim.props();
  const Coords ca = decode_card(a, dim);
  const Coords cb = decode_card(b, dim);
  std::vector<int> v(static_cast<std::size_t>(d));
  int pivot = -1;
  for (int i = 0; i < d; ++i) {
    v[i] = mod3(cb[i] - ca[i]);
    if (v[i] != 0 && pivot < 0) pivot = i;
  }
  // Basis whose last vector is v: the unit vectors except e_pivot, then v.
  std::vector<int> basis(static_cast<std::size_t>(d * d), 0);
  int col = 0;
  for (int i = 0; i < d; ++i) {
    if (i == pivot) continue;
    basis[i * d + col] = 1;
    ++col;
  }
  for (int i = 0; i < d; ++i) basis[i * d + (d - 1)] = v[i];

  std::vector<int> m;
  invert_mod3(basis, d, m);
  std::vector<int> t(static_cast<std::size_t>(d), 0);
  for (int i = 0; i < d; ++i) {
    int sum = 0;
    for (int j = 0; j < d; ++j) sum += m[i * d + j] * ca[j];
    t[i] = mod3(-sum);
  }
  return AffineMap(dim, std::move(m), std::move(t));
}

CardId AffineMap::operator()(CardId card) const {
  const int d = dim_.props();
  const Coords x = decode_card(card, dim_);
  std::uint32_t value = 0;
  for (int i = 0; i < d; ++i) {
    int sum = translation_[i];
    for (int j = 0; j < d; ++j) sum += matrix_[i * d + j] * x[j];
    value = value * 3 + static_cast<std::uint32_t>(sum % 3);
  }
  return CardId{value};
}

AffineMap AffineMap::compose(const AffineMap& other) const {
  if (!(dim_ == other.dim_)) {
    throw Error(Errc::invalid_dimension, "cannot compose maps of different dimensions");
  }
  const int d = dim_.props();
  std::vector<std::uint8_t> m(static_cast<std::size_t>(d * d));
  std::vector<std::uint8_t> t(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    int shift = translation_[i];
    for (int k = 0; k < d; ++k) shift += matrix_[i * d + k] * other.translation_[k];
    t[i] = static_cast<std::uint8_t>(shift % 3);
    for (int j = 0; j < d; ++j) {
      int sum = 0;
      for (int k = 0; k < d; ++k) sum += matrix_[i * d + k] * other.matrix_[k * d + j];
      m[i * d + j] = static_cast<std::uint8_t>(sum % 3);
    }
  }
  return AffineMap(dim_, std::move(m), std::move(t), true);
}

AffineMap AffineMap::inverse() const {
  const int d = dim_.props();
  std::vector<int> inv;
  invert_mod3(std::vector<int>(matrix_.begin(), matrix_.end()), d, inv);
  std::vector<int> t(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    int sum = 0;
    for (int j = 0; j < d; ++j) sum += inv[i * d + j] * translation_[j];
    t[i] = mod3(-sum);
  }
  return AffineMap(dim_, reduce(inv), reduce(t), true);
}

Board apply_affine(const AffineMap& map, const Board& board) {
  if (!(map.dim() == board.dim())) {
    throw Error(Errc::invalid_dimension, "affine map and board have different dimensions");
  }
  std::vector<CardId> image;
  image.reserve(board.size());
  for (CardId card : board.cards()) image.push_back(map(card));
  return Board(board.dim(), image);
}

}  // namespace setmax
