#pragma once

#include <cstdint>
#include <iosfwd>
#include <stop_token>
#include <string>
#include <vector>

#include "setmax/geometry.hpp"

namespace setmax {

struct TableRow {
  int n = 0;
  std::uint64_t max_sets = 0;
  /// C(3^d, n) * C(n, 3) in decimal.
  std::string search_space;
  std::uint64_t nodes_visited = 0;
  double elapsed_seconds = 0;
  bool complete = false;
};

struct TableConfig {
  Dimension dim{3};
  int n_from = 3;
  int n_to = 27;
  int threads = 1;
  bool symmetry = true;
  std::stop_token stop;
};

inline constexpr const char* kTableCsvHeader =
    "n,max_sets,search_space,nodes_visited,elapsed_seconds,complete";

/// Exact decimal C(deck, n) * C(n, 3).
std::string search_space_size(Dimension dim, int n);

std::string format_table_row(const TableRow& row);

/// One pruned search per n. Rows are streamed to `csv` (header first) as
/// they finish; after an interruption the remaining rows are emitted with
/// complete = false.
std::vector<TableRow> run_table(const TableConfig& config, std::ostream* csv);

}  // namespace setmax
