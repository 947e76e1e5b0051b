#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace setmax {

enum class Errc {
  invalid_coordinates,
  invalid_card,
  invalid_dimension,
  degenerate_pair,
  not_a_line,
  dependent_points,
  singular_map,
  duplicate_card,
  missing_card,
  parse_error,
  invalid_config,
  budget_exceeded,
  checkpoint_corrupt,
  checkpoint_version,
  checkpoint_mismatch,
  io_error,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// front ends can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace setmax
