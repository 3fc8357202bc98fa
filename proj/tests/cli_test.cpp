#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "combty/bench.hpp"
#include "doctest.h"
#include "json.hpp"

namespace {

const char* cli_path() { return std::getenv("COMBTY_CLI"); }

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  RunResult result;
  std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
    result.output.append(buf.data(), n);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace

TEST_CASE("cli exit codes and outputs") {
  if (!cli_path()) {
    MESSAGE("COMBTY_CLI not set; skipping CLI checks");
    return;
  }

  CHECK(run_cli("infer \"S S S S S\"").exit_code == 0);
  CHECK(run_cli("infer \"cond tt tt zero\"").exit_code == 1);
  CHECK(run_cli("infer \"(S(SKK)(SKK))(S(SKK)(SKK))\"").exit_code == 2);
  CHECK(run_cli("infer \"(S K\"").exit_code == 3);

  RunResult reduce = run_cli("reduce \"fst (pair K S)\"");
  CHECK(reduce.exit_code == 0);
  CHECK(reduce.output == "K\n");

  RunResult desugar = run_cli("desugar \"\\\\x. K S S x\"");
  CHECK(desugar.exit_code == 0);
  CHECK(desugar.output == "S(K(KSS))I, size 6\n");

  RunResult ctx = run_cli("infer --context \"x:Bool\" \"cond x zero zero\"");
  CHECK(ctx.exit_code == 0);
  CHECK(ctx.output.find("Nat") != std::string::npos);
}

TEST_CASE("cli json output is lossless") {
  if (!cli_path()) {
    MESSAGE("COMBTY_CLI not set; skipping CLI checks");
    return;
  }

  RunResult r = run_cli("infer --format json \"S S S S S\"");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.output);
  CHECK(j["verdict"] == "yes");
  CHECK(j["size"] == 5);
  CHECK(j["calls"] == 10);
  CHECK(j["type"] == "S2 S0 (S2 S0 S0)");
  CHECK(j["limit"] == 500);

  // Every bench JSON line parses back to the BenchRow that produced it.
  RunResult bench = run_cli("bench --format json");
  CHECK(bench.exit_code == 0);
  auto rows = combty::run_corpus(combty::builtin_corpus(), 100);
  std::size_t i = 0;
  std::istringstream lines(bench.output);
  std::string line;
  while (std::getline(lines, line)) {
    REQUIRE(i < rows.size());
    auto row = nlohmann::json::parse(line);
    CHECK(row["label"] == rows[i].label);
    CHECK(row["verdict"] == rows[i].verdict);
    CHECK(row["size"] == rows[i].size);
    CHECK(row["calls"] == rows[i].calls);
    CHECK(row["ratio"] == rows[i].ratio);
    ++i;
  }
  CHECK(i == rows.size());
}

TEST_CASE("corpus files load with labels") {
  const char* path = "combty_test_corpus.txt";
  {
    std::ofstream out(path);
    out << "# identity applied\n";
    out << "SKK K\n";
    out << "\n";
    out << "cond tt ff tt\n";
  }
  auto corpus = combty::load_corpus_file(path);
  std::remove(path);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].label == "identity applied");
  CHECK(corpus[1].label == "cond tt ff tt");
  CHECK(combty::term_size(corpus[0].term) == 4);
}

TEST_CASE("corpus files skip malformed rows without aborting") {
  const char* path = "combty_test_corpus_bad.txt";
  {
    std::ofstream out(path);
    out << "S K\n";
    out << "(S K\n";  // unbalanced
    out << "K K\n";
  }
  std::vector<std::string> errors;
  auto corpus = combty::load_corpus_file(path, &errors);
  std::remove(path);
  CHECK(corpus.size() == 2);
  REQUIRE(errors.size() == 1);
  CHECK(errors[0].find("line 2") != std::string::npos);
}
