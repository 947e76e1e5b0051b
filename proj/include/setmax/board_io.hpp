#pragma once

// Board text format: one card per line as d comma-separated digits in
// {0,1,2}, e.g. `0,1,2,0`. Whitespace around digits is allowed, blank lines
// and everything after `#` are ignored, and repeated cards are rejected.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "setmax/board.hpp"

namespace setmax {

/// Boards without any card line default to this dimension unless the
/// caller supplies one.
inline constexpr int kDefaultProps = 4;

/// Parses one card such as "0,1,2,0". Throws Errc::parse_error.
CardId parse_card(std::string_view text, std::optional<Dimension> dim = std::nullopt);

/// The dimension is inferred from the first card unless given. Errors are
/// Errc::parse_error with "<source>:<line>: " prefixed to the message.
Board parse_board(std::string_view text, std::optional<Dimension> dim = std::nullopt,
                  std::string_view source = "<input>");

Board load_board(const std::filesystem::path& path,
                 std::optional<Dimension> dim = std::nullopt);

std::string format_card(CardId card, Dimension dim);
/// Digits without separators, e.g. "0120"; used inside CSV cells.
std::string format_card_compact(CardId card, Dimension dim);
/// One card per line, newline terminated.
std::string format_board(const Board& board);

}  // namespace setmax
