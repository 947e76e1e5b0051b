#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "setmax/geometry.hpp"

namespace setmax {

/// Resumable state of a pruned search, written at work-unit boundaries.
/// The on-disk layout is documented in docs/checkpoint-format.md.
struct Checkpoint {
  static constexpr int kVersion = 1;

  int props = 0;
  int n = 0;
  bool symmetry = true;

  std::uint64_t units_total = 0;
  /// Prefixes (card ids beyond the fixed cards) of the work units still to
  /// run, in lexicographic order. Every other unit has been folded into the
  /// fields below.
  std::vector<std::vector<CardId>> frontier;

  std::uint64_t best_so_far = 0;
  std::optional<std::uint64_t> witness_unit;
  std::vector<CardId> witness;
  std::uint64_t nodes_visited = 0;
  std::uint64_t configs_pruned = 0;

  bool complete() const noexcept { return frontier.empty(); }
};

/// Writes to a temporary sibling and renames, so a killed process leaves
/// either the previous checkpoint or the new one. Errc::io_error on failure.
void checkpoint_save(const Checkpoint& checkpoint, const std::filesystem::path& path);

/// Errc::checkpoint_version for another format version,
/// Errc::checkpoint_corrupt for anything unreadable or inconsistent,
/// Errc::io_error when the file cannot be opened.
Checkpoint checkpoint_load(const std::filesystem::path& path);

}  // namespace setmax
