#include "setmax/board_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace setmax {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<int> parse_digits(std::string_view text) {
  std::vector<int> digits;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto field = trim(text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start));
    if (field.size() != 1 || field[0] < '0' || field[0] > '2') {
      throw Error(Errc::parse_error,
                  "expected a digit 0, 1 or 2 but found '" + std::string(field) + "'");
    }
    digits.push_back(field[0] - '0');
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return digits;
}

}  // namespace

CardId parse_card(std::string_view text, std::optional<Dimension> dim) {
  const std::vector<int> digits = parse_digits(trim(text));
  if (dim && digits.size() != static_cast<std::size_t>(dim->props())) {
    throw Error(Errc::parse_error, "card has " + std::to_string(digits.size()) +
                                       " coordinates, expected " +
                                       std::to_string(dim->props()));
  }
  try {
    return encode_card(digits);
  } catch (const Error& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

Board parse_board(std::string_view text, std::optional<Dimension> dim, std::string_view source) {
  std::vector<CardId> cards;
  std::vector<std::size_t> line_of_card;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto where = std::string(source) + ":" + std::to_string(line_no) + ": ";
    try {
      const CardId card = parse_card(line, dim);
      if (!dim) dim = Dimension(static_cast<int>(parse_digits(line).size()));
      for (std::size_t i = 0; i < cards.size(); ++i) {
        if (cards[i] == card) {
          throw Error(Errc::parse_error, "duplicate card " + std::string(line) +
                                             " (first seen on line " +
                                             std::to_string(line_of_card[i]) + ")");
        }
      }
      cards.push_back(card);
      line_of_card.push_back(line_no);
    } catch (const Error& e) {
      throw Error(Errc::parse_error, where + e.what());
    }
  }
  return Board(dim.value_or(Dimension(kDefaultProps)), cards);
}

Board load_board(const std::filesystem::path& path, std::optional<Dimension> dim) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io_error, "cannot open board file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_board(text.str(), dim, path.string());
}

std::string format_card(CardId card, Dimension dim) {
  std::string out;
  for (int digit : decode_card(card, dim)) {
    if (!out.empty()) out += ',';
    out += static_cast<char>('0' + digit);
  }
  return out;
}

std::string format_card_compact(CardId card, Dimension dim) {
  std::string out;
  for (int digit : decode_card(card, dim)) out += static_cast<char>('0' + digit);
  return out;
}

std::string format_board(const Board& board) {
  std::string out;
  for (CardId card : board.cards()) {
    out += format_card(card, board.dim());
    out += '\n';
  }
  return out;
}

}  // namespace setmax
