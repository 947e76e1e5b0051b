#include "setmax/table.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>

#include "setmax/search.hpp"

namespace setmax {
namespace {

__extension__ using u128 = unsigned __int128;

std::optional<u128> exact_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return u128{0};
  k = std::min(k, n - k);
  u128 c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    // c * (n - i) is divisible by i + 1 at every step.
    if (c > std::numeric_limits<u128>::max() / (n - i)) return std::nullopt;
    c = c * (n - i) / (i + 1);
  }
  return c;
}

std::string to_decimal(u128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v > 0) {
    out.insert(out.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    v /= 10;
  }
  return out;
}

}  // namespace

std::string search_space_size(Dimension dim, int n) {
  const auto configs = exact_binomial(dim.deck_size(), static_cast<std::uint64_t>(n));
  const auto triples = exact_binomial(static_cast<std::uint64_t>(n), 3);
  if (configs && triples && (*triples == 0 ||
                             *configs <= std::numeric_limits<u128>::max() / *triples)) {
    return to_decimal(*configs * *triples);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", naive_triple_checks(dim, n));
  return buf;
}

std::string format_table_row(const TableRow& row) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3f", row.elapsed_seconds);
  return std::to_string(row.n) + "," + std::to_string(row.max_sets) + "," + row.search_space +
         "," + std::to_string(row.nodes_visited) + "," + elapsed + "," +
         (row.complete ? "true" : "false");
}

std::vector<TableRow> run_table(const TableConfig& config, std::ostream* csv) {
  const int deck = static_cast<int>(config.dim.deck_size());
  if (config.n_from < 3 || config.n_to > deck || config.n_from > config.n_to) {
    throw Error(Errc::invalid_config, "table range must satisfy 3 <= from <= to <= " +
                                          std::to_string(deck) + ", got " +
                                          std::to_string(config.n_from) + ".." +
                                          std::to_string(config.n_to));
  }
  if (csv) *csv << kTableCsvHeader << '\n' << std::flush;

  std::vector<TableRow> rows;
  for (int n = config.n_from; n <= config.n_to; ++n) {
    TableRow row;
    row.n = n;
    row.search_space = search_space_size(config.dim, n);
    if (!config.stop.stop_requested()) {
      SearchConfig search;
      search.dim = config.dim;
      search.n = n;
      search.mode = SearchMode::pruned;
      search.symmetry = config.symmetry;
      search.threads = config.threads;
      search.stop = config.stop;
      const SearchResult result = max_sets_pruned(search);
      row.max_sets = result.max_sets;
      row.nodes_visited = result.nodes_visited;
      row.elapsed_seconds = result.elapsed.count();
      row.complete = result.complete;
    }
    if (csv) *csv << format_table_row(row) << '\n' << std::flush;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace setmax
