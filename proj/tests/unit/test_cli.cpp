#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SETMAX_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string fixture_path(const std::string& name) {
  return std::string(SETMAX_FIXTURE_DIR) + "/" + name + ".board";
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "setmax-test-cli";
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::trunc);
  out << text;
}

std::string last_row(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty()) last = line;
  return last;
}

}  // namespace

TEST_CASE("count") {
  Run r = run("count " + fixture_path("twelve_fourteen"));
  CHECK(r.status == 0);
  CHECK(r.out == "14\n");

  const fs::path empty = scratch_dir() / "empty.board";
  write(empty, "# no cards\n");
  r = run("count " + empty.string());
  CHECK(r.status == 0);
  CHECK(r.out == "0\n");

  r = run("count --oracle " + fixture_path("seven_five"));
  CHECK(r.out == "5\n");

  r = run("count --list-lines " + fixture_path("five_two"));
  CHECK(r.out == "2\n\n0,0,0,0\n0,0,0,1\n0,0,0,2\n\n0,0,0,0\n0,0,1,0\n0,0,2,0\n");
}

TEST_CASE("count rejects bad boards") {
  const fs::path bad = scratch_dir() / "bad.board";
  write(bad, "0,0,0,0\n0,0,0,1\n0,0,0,0\n");
  const std::string cmd = std::string(SETMAX_CLI_PATH) + " count " + bad.string() + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  char buf[512] = {};
  const std::size_t n = std::fread(buf, 1, sizeof buf - 1, pipe);
  const int raw = pclose(pipe);
  CHECK(WEXITSTATUS(raw) == 2);
  CHECK(std::string(buf, n).find("bad.board:3:") != std::string::npos);

  CHECK(run("count /nonexistent.board").status == 2);
  CHECK(run("count").status == 2);
  CHECK(run("frobnicate").status == 2);
}

TEST_CASE("search") {
  Run r = run("search --props 3 --cards 12 --mode pruned -q");
  CHECK(r.status == 0);
  CHECK(first_line(r.out) == "14");
  CHECK(r.out.find("# witness (canonical orbit)") != std::string::npos);
  CHECK(r.out.find("# complete: true") != std::string::npos);

  r = run("search --props 4 --cards 4 --mode naive -q");
  CHECK(r.status == 0);
  CHECK(first_line(r.out) == "1");
  CHECK(r.out.find("canonical orbit") == std::string::npos);

  r = run("search --props 2 --cards 9 -q");
  CHECK(first_line(r.out) == "12");

  r = run("search --props 3 --cards 8 --no-symmetry -j 3 -q");
  CHECK(first_line(r.out) == "8");
}

TEST_CASE("search errors") {
  CHECK(run("search --props 4 --cards 7 --mode naive -q").status == 4);
  CHECK(run("search --props 4 --cards 7 --mode naive --checkpoint x.json -q").status == 2);
  CHECK(run("search --props 3 --cards 30 -q").status == 2);
  CHECK(run("search --props 9 --cards 3 -q").status == 2);
  CHECK(run("search --props 3 --cards 5 --mode greedy -q").status == 2);

  const fs::path corrupt = scratch_dir() / "corrupt.json";
  write(corrupt, "{ not json");
  CHECK(run("search --props 3 --cards 13 -q --resume " + corrupt.string()).status == 5);
}

TEST_CASE("search checkpoint survives SIGKILL") {
  const fs::path cp = scratch_dir() / "killed.json";
  fs::remove(cp);
  const std::string base = std::string(SETMAX_CLI_PATH) + " search --props 4 --cards 10 -j 1 -q" +
                           " --report-interval 0 --checkpoint " + cp.string();
  // Start in the background, kill hard after a moment, then resume.
  const std::string cmd = "(" + base + " >/dev/null 2>&1 & pid=$!; sleep 0.5; kill -9 $pid; wait $pid) 2>/dev/null";
  CHECK(std::system(cmd.c_str()) != -1);
  REQUIRE(fs::exists(cp));
  const Run r = run("search --props 4 --cards 10 -j 1 -q --resume " + cp.string());
  CHECK(r.status == 0);
  CHECK(first_line(r.out) == "12");
}

TEST_CASE("table") {
  Run r = run("table --props 3 --from 5 --to 5");
  CHECK(r.status == 0);
  CHECK(r.out.rfind("n,max_sets,search_space,nodes_visited,elapsed_seconds,complete\n", 0) == 0);
  CHECK(last_row(r.out).rfind("5,2,807300,", 0) == 0);
  CHECK(last_row(r.out).find(",true") != std::string::npos);

  r = run("table --props 2 --from 3 --to 9");
  CHECK(last_row(r.out).rfind("9,12,", 0) == 0);

  const fs::path out = scratch_dir() / "table.csv";
  r = run("table --props 3 --from 3 --to 27 -o " + out.string());
  CHECK(r.status == 0);
  std::ifstream in(out);
  std::string line;
  std::getline(in, line);
  const int expected[] = {1, 1, 2, 3, 5, 8, 12, 12, 13, 14, 16, 19, 23,
                          26, 30, 36, 41, 47, 54, 62, 71, 81, 92, 104, 117};
  for (int n = 3; n <= 27; ++n) {
    REQUIRE(std::getline(in, line));
    CHECK(line.rfind(std::to_string(n) + "," + std::to_string(expected[n - 3]) + ",", 0) == 0);
  }

  r = run("table --props 3 --from 9 --to 10 --pretty");
  CHECK(r.status == 0);
  CHECK(r.out.find("max_sets") != std::string::npos);
  CHECK(run("table --props 3 --from 10 --to 9").status == 2);
}

TEST_CASE("cmm") {
  Run r = run("cmm --props 3");
  CHECK(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "turn,card,new_sets,cumulative");
  std::string row18;
  for (int i = 0; i < 18; ++i) std::getline(in, row18);
  CHECK(row18.rfind("18,", 0) == 0);
  CHECK(row18.substr(row18.rfind(',') + 1) == "35");

  r = run("cmm --props 3 --upto 3");
  CHECK(last_row(r.out) == "3,200,1,1");

  const fs::path board = scratch_dir() / "cmm.board";
  r = run("cmm --props 4 --board-out " + board.string());
  CHECK(last_row(r.out).substr(last_row(r.out).rfind(',') + 1) == "1080");
  CHECK(run("count " + board.string()).out == "1080\n");
}

TEST_CASE("verify and fixtures") {
  Run r = run("verify");
  CHECK(r.status == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report.at("pass").get<bool>());
  CHECK(report.at("fixtures").size() == 9);

  const fs::path dir = scratch_dir() / "mutated";
  fs::create_directories(dir);
  for (const auto& e : fs::directory_iterator(SETMAX_FIXTURE_DIR))
    fs::copy_file(e.path(), dir / e.path().filename(), fs::copy_options::overwrite_existing);
  write(dir / "seven_five.board", "# name: seven_five\n# expected_sets: 6\n0,0,0,0\n0,0,0,1\n0,0,0,2\n");
  r = run("verify --dir " + dir.string());
  CHECK(r.status == 3);
  CHECK_FALSE(nlohmann::json::parse(r.out).at("pass").get<bool>());

  r = run("fixtures");
  CHECK(r.status == 0);
  CHECK(r.out.find("twelve_fourteen,12,14\n") != std::string::npos);
  r = run("fixtures eight_eight");
  CHECK(r.out.find("# expected_sets: 8") != std::string::npos);
  CHECK(run("fixtures nope").status == 2);
}

TEST_CASE("SET_SEARCH_THREADS sets the default thread count") {
  const std::string cmd = "SET_SEARCH_THREADS=3 " + std::string(SETMAX_CLI_PATH) +
                          " search --props 3 --cards 10 -q";
  FILE* pipe = popen(cmd.c_str(), "r");
  char buf[1024] = {};
  const std::size_t got = std::fread(buf, 1, sizeof buf - 1, pipe);
  CHECK(pclose(pipe) == 0);
  CHECK(got > 0);
  CHECK(first_line(buf) == "12");
  CHECK(std::string(buf).find("# threads: 3\n") != std::string::npos);
}
