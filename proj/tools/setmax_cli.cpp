// setmax: count sets on boards, search for the maximum number of sets on n
// cards, run the consecutive-maximisation heuristic, and check the bundled
// fixture boards.
//
// Exit status: 0 success, 1 unexpected error, 2 bad input (flags or board
// files), 3 fixture mismatch, 4 naive budget exceeded, 5 unusable
// checkpoint, 6 interrupted before completion.

#include <atomic>
#include <csignal>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "setmax/board_io.hpp"
#include "setmax/catalog.hpp"
#include "setmax/checkpoint.hpp"
#include "setmax/counting.hpp"
#include "setmax/heuristics.hpp"
#include "setmax/search.hpp"
#include "setmax/table.hpp"

namespace {

using namespace setmax;

enum Exit : int {
  kOk = 0,
  kInternal = 1,
  kBadInput = 2,
  kMismatch = 3,
  kBudget = 4,
  kCheckpoint = 5,
  kInterrupted = 6,
};

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::budget_exceeded: return kBudget;
    case Errc::checkpoint_corrupt:
    case Errc::checkpoint_version:
    case Errc::checkpoint_mismatch: return kCheckpoint;
    case Errc::io_error:
    case Errc::parse_error:
    case Errc::invalid_config:
    case Errc::invalid_coordinates:
    case Errc::invalid_card:
    case Errc::invalid_dimension:
    case Errc::duplicate_card: return kBadInput;
    default: return kInternal;
  }
}

std::atomic<bool> g_signalled{false};

extern "C" void on_signal(int) { g_signalled.store(true); }

// Turns SIGINT/SIGTERM into a stop request for the search.
class InterruptWatch {
 public:
  InterruptWatch() {
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    watcher_ = std::jthread([this](std::stop_token self) {
      while (!self.stop_requested()) {
        if (g_signalled.load()) {
          source_.request_stop();
          return;
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(50));
      }
    });
  }
  std::stop_token token() const { return source_.get_token(); }

 private:
  std::stop_source source_;
  std::jthread watcher_;
};

int default_threads() {
  if (const char* env = std::getenv("SET_SEARCH_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring SET_SEARCH_THREADS=" << env << '\n';
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::trunc);
  if (!file) throw Error(Errc::io_error, "cannot write " + path);
  return file;
}

void print_aligned(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << std::setw(static_cast<int>(width[i])) << row[i] << (i + 1 < row.size() ? "  " : "");
    }
    out << '\n';
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::stringstream in(line);
  for (std::string cell; std::getline(in, cell, ',');) cells.push_back(cell);
  return cells;
}

// --- count -----------------------------------------------------------------

struct CountArgs {
  std::string board_file;
  bool list_lines = false;
  bool oracle = false;
  int props = 0;
};

int cmd_count(const CountArgs& args) {
  const auto dim = args.props ? std::optional<Dimension>(Dimension(args.props)) : std::nullopt;
  const Board board = load_board(args.board_file, dim);
  const auto list = args.list_lines ? ListLines::yes : ListLines::no;
  const SetCount result = args.oracle ? count_sets_bruteforce(board, list) : count_sets(board, list);
  std::cout << result.count << '\n';
  if (result.lines) {
    for (const Line& line : *result.lines) {
      std::cout << '\n';
      for (CardId card : line.cards) std::cout << format_card(card, board.dim()) << '\n';
    }
  }
  return kOk;
}

// --- search ----------------------------------------------------------------

struct SearchArgs {
  int props = 4;
  int cards = 0;
  std::string mode = "pruned";
  bool symmetry = true;
  int threads = 0;
  std::string checkpoint;
  std::string resume;
  double budget = kDefaultNaiveBudget;
  double report_seconds = 10;
  bool quiet = false;
};

int cmd_search(const SearchArgs& args) {
  SearchConfig config;
  config.dim = Dimension(args.props);
  config.n = args.cards;
  config.mode = args.mode == "naive" ? SearchMode::naive : SearchMode::pruned;
  config.symmetry = args.symmetry;
  config.threads = args.threads > 0 ? args.threads : default_threads();
  config.naive_budget = args.budget;
  config.report_interval = std::chrono::milliseconds(static_cast<long>(args.report_seconds * 1000));
  if (config.mode == SearchMode::naive && (!args.checkpoint.empty() || !args.resume.empty())) {
    throw Error(Errc::invalid_config, "--checkpoint and --resume need --mode pruned");
  }
  if (!args.checkpoint.empty()) config.checkpoint_path = args.checkpoint;
  else if (!args.resume.empty()) config.checkpoint_path = args.resume;
  validate(config);

  std::optional<Checkpoint> resume;
  if (!args.resume.empty()) resume = checkpoint_load(args.resume);

  if (!args.quiet) {
    config.on_progress = [](const SearchProgress& p) {
      std::cerr << "progress: " << p.units_done << "/" << p.units_total
                << " units, best " << p.best_so_far << ", " << p.nodes_visited
                << " nodes, " << std::fixed << std::setprecision(1) << p.elapsed.count()
                << "s\n";
    };
  }

  InterruptWatch interrupt;
  config.stop = interrupt.token();
  const SearchResult result = config.mode == SearchMode::naive
                                  ? max_sets_naive(config)
                                  : max_sets_pruned(config, resume ? &*resume : nullptr);

  const bool canonical = config.mode == SearchMode::pruned && config.symmetry;
  std::cout << result.max_sets << '\n';
  std::cout << "# witness" << (canonical ? " (canonical orbit)" : "") << '\n';
  std::cout << format_board(result.witness);
  std::cout << "# nodes_visited: " << result.nodes_visited << '\n';
  std::cout << "# configs_pruned: " << result.configs_pruned << '\n';
  if (config.mode == SearchMode::pruned) std::cout << "# threads: " << config.threads << '\n';
  std::cout << "# elapsed_seconds: " << std::fixed << std::setprecision(3)
            << result.elapsed.count() << '\n';
  std::cout << "# complete: " << (result.complete ? "true" : "false") << '\n';
  return result.complete ? kOk : kInterrupted;
}

// --- table -----------------------------------------------------------------

struct TableArgs {
  int props = 3;
  int from = 3;
  int to = 0;
  std::string out;
  int threads = 0;
  bool symmetry = true;
  bool pretty = false;
};

int cmd_table(const TableArgs& args) {
  TableConfig config;
  config.dim = Dimension(args.props);
  config.n_from = args.from;
  config.n_to = args.to > 0 ? args.to : static_cast<int>(config.dim.deck_size());
  config.threads = args.threads > 0 ? args.threads : default_threads();
  config.symmetry = args.symmetry;

  InterruptWatch interrupt;
  config.stop = interrupt.token();

  std::ofstream file;
  std::vector<TableRow> rows;
  if (args.pretty) {
    rows = run_table(config, nullptr);
    std::vector<std::vector<std::string>> cells{split_csv(kTableCsvHeader)};
    for (const auto& row : rows) cells.push_back(split_csv(format_table_row(row)));
    print_aligned(open_output(args.out, file), cells);
  } else {
    rows = run_table(config, &open_output(args.out, file));
  }
  const bool complete =
      std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.complete; });
  return complete ? kOk : kInterrupted;
}

// --- cmm -------------------------------------------------------------------

struct CmmArgs {
  int props = 3;
  int upto = -1;
  std::string out;
  std::string board_out;
  bool pretty = false;
};

int cmd_cmm(const CmmArgs& args) {
  const Dimension dim(args.props);
  const CmmTrace trace =
      cmm_run(dim, args.upto >= 0 ? std::optional<int>(args.upto) : std::nullopt);

  std::vector<std::vector<std::string>> cells{{"turn", "card", "new_sets", "cumulative"}};
  for (const auto& t : trace.turns) {
    cells.push_back({std::to_string(t.turn), format_card_compact(t.card, dim),
                     std::to_string(t.new_sets), std::to_string(t.cumulative)});
  }
  std::ofstream file;
  std::ostream& out = open_output(args.out, file);
  if (args.pretty) {
    print_aligned(out, cells);
  } else {
    for (const auto& row : cells) out << row[0] << ',' << row[1] << ',' << row[2] << ',' << row[3] << '\n';
  }
  if (!args.board_out.empty()) {
    std::ofstream board(args.board_out, std::ios::trunc);
    if (!board) throw Error(Errc::io_error, "cannot write " + args.board_out);
    board << format_board(trace.final_board);
  }
  return kOk;
}

// --- verify / fixtures -------------------------------------------------------

int cmd_verify(const std::string& dir) {
  std::vector<Fixture> list;
  if (dir.empty()) {
    list = fixtures();
  } else {
    std::vector<std::filesystem::path> paths;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
      if (entry.path().extension() == ".board") paths.push_back(entry.path());
    }
    std::sort(paths.begin(), paths.end());
    for (const auto& path : paths) {
      std::ifstream in(path);
      std::stringstream text;
      text << in.rdbuf();
      list.push_back(parse_fixture(text.str(), path.string()));
    }
  }
  const VerifyReport report = verify(list);
  std::cout << report.to_json() << '\n';
  if (!report.passed()) {
    for (const auto& c : report.fixtures) {
      if (!c.pass) {
        std::cerr << "mismatch: " << c.fixture << " expected " << c.expected << ", got "
                  << c.got << " (oracle " << c.got_oracle << ")\n";
      }
    }
    for (const auto& c : report.structure) {
      if (!c.pass) std::cerr << "mismatch: " << c.name << ": " << c.detail << '\n';
    }
    return kMismatch;
  }
  return kOk;
}

int cmd_fixtures(const std::string& name) {
  if (!name.empty()) {
    const Fixture& f = fixture(name);
    std::cout << "# name: " << f.name << "\n# expected_sets: " << f.expected_sets << '\n';
    if (!f.note.empty()) std::cout << "# note: " << f.note << '\n';
    std::cout << format_board(f.board);
    return kOk;
  }
  for (const auto& f : fixtures()) {
    std::cout << f.name << ',' << f.board.size() << ',' << f.expected_sets << '\n';
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Maximum number of sets on a board of SET cards (points of AG(d,3)).\n"
               "Cards are written as 0-based digits, e.g. 0,1,2,0."};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count the sets on a board file");
  count->add_option("board", count_args.board_file, "Board file")->required();
  count->add_flag("--list-lines", count_args.list_lines, "Print every set, three cards per stanza");
  count->add_flag("--oracle", count_args.oracle, "Use the brute-force triple counter");
  count->add_option("--props", count_args.props, "Number of properties (default: inferred)")
      ->check(CLI::Range(Dimension::kMin, Dimension::kMax));

  SearchArgs search_args;
  auto* search = app.add_subcommand("search", "Exact maximum over all boards of n cards");
  search->add_option("--props,-d", search_args.props, "Number of properties")
      ->check(CLI::Range(Dimension::kMin, Dimension::kMax))
      ->capture_default_str();
  search->add_option("--cards,-n", search_args.cards, "Board size")->required();
  search->add_option("--mode", search_args.mode, "naive or pruned")
      ->check(CLI::IsMember({"naive", "pruned"}))
      ->capture_default_str();
  search->add_flag("--symmetry,!--no-symmetry", search_args.symmetry,
                   "Fix cards 0 and 1 (pruned mode; on by default)");
  search->add_option("--threads,-j", search_args.threads,
                     "Worker threads (default: $SET_SEARCH_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  search->add_option("--checkpoint", search_args.checkpoint, "Write resumable state here");
  search->add_option("--resume", search_args.resume, "Continue from this checkpoint");
  search->add_option("--budget", search_args.budget, "Naive mode limit in triple checks")
      ->capture_default_str();
  search->add_option("--report-interval", search_args.report_seconds,
                     "Seconds between progress lines and checkpoint writes")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  search->add_flag("--quiet,-q", search_args.quiet, "No progress output");

  TableArgs table_args;
  auto* table = app.add_subcommand("table", "Maximum sets for a range of board sizes (CSV)");
  table->add_option("--props,-d", table_args.props, "Number of properties")
      ->check(CLI::Range(Dimension::kMin, Dimension::kMax))
      ->capture_default_str();
  table->add_option("--from", table_args.from, "First board size")->capture_default_str();
  table->add_option("--to", table_args.to, "Last board size (default: whole deck)");
  table->add_option("--out,-o", table_args.out, "CSV output path (default: stdout)");
  table->add_option("--threads,-j", table_args.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  table->add_flag("--symmetry,!--no-symmetry", table_args.symmetry, "Fix cards 0 and 1");
  table->add_flag("--pretty", table_args.pretty, "Aligned columns instead of CSV");

  CmmArgs cmm_args;
  auto* cmm = app.add_subcommand("cmm", "Consecutive maximisation trace (CSV)");
  cmm->add_option("--props,-d", cmm_args.props, "Number of properties")
      ->check(CLI::Range(Dimension::kMin, Dimension::kMax))
      ->capture_default_str();
  cmm->add_option("--upto", cmm_args.upto, "Stop after this many turns")
      ->check(CLI::NonNegativeNumber);
  cmm->add_option("--out,-o", cmm_args.out, "CSV output path (default: stdout)");
  cmm->add_option("--board-out", cmm_args.board_out, "Write the final board here");
  cmm->add_flag("--pretty", cmm_args.pretty, "Aligned columns instead of CSV");

  std::string verify_dir;
  auto* verify_cmd = app.add_subcommand("verify", "Check every fixture board (JSON report)");
  verify_cmd->add_option("--dir", verify_dir, "Verify *.board files from this directory instead")
      ->check(CLI::ExistingDirectory);

  std::string fixture_name;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "List fixtures or print one as a board");
  fixtures_cmd->add_option("name", fixture_name, "Fixture to print");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? kOk : kBadInput;
  }

  try {
    if (*count) return cmd_count(count_args);
    if (*search) return cmd_search(search_args);
    if (*table) return cmd_table(table_args);
    if (*cmm) return cmd_cmm(cmm_args);
    if (*verify_cmd) return cmd_verify(verify_dir);
    if (*fixtures_cmd) return cmd_fixtures(fixture_name);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
