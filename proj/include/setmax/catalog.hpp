#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "setmax/board.hpp"

namespace setmax {

/// A named board with its known set count. The boards live in
/// fixtures/*.board and are compiled into the library.
struct Fixture {
  std::string name;
  Board board;
  std::uint64_t expected_sets = 0;
  std::string note;
};

/// Every fixture, sorted by name.
const std::vector<Fixture>& fixtures();
/// Throws Errc::invalid_config for an unknown name.
const Fixture& fixture(std::string_view name);

/// Parses the `# name:`, `# expected_sets:` and `# note:` header comments
/// of a board file. Errc::parse_error when a header is missing.
Fixture parse_fixture(std::string_view text, std::string_view source);

struct FixtureCheck {
  std::string fixture;
  std::uint64_t expected = 0;
  std::uint64_t got = 0;
  std::uint64_t got_oracle = 0;
  bool pass = false;
};

struct StructureCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<FixtureCheck> fixtures;
  std::vector<StructureCheck> structure;

  bool passed() const noexcept;
  /// {"fixtures": [{fixture, expected, got, got_oracle, pass}, ...],
  ///  "structure": [{name, pass, detail}, ...], "pass": bool}
  std::string to_json() const;
};

/// Counts each fixture with both engines, then runs the structural checks
/// for whichever of the known fixtures are present.
VerifyReport verify(std::span<const Fixture> fixtures);
VerifyReport verify_all();

namespace detail {
struct EmbeddedBoard {
  const char* name;
  const char* text;
};
std::span<const EmbeddedBoard> embedded_fixture_boards();
}  // namespace detail

}  // namespace setmax
