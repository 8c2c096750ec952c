#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>

#include "conglat/report_json.hpp"
#include "doctest.h"

using namespace conglat;

namespace {

std::string run_cli(std::string const& args, int* exit_code = nullptr) {
  std::string cmd = std::string(CONGLAT_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buffer;
  size_t got;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    out.append(buffer.data(), got);
  }
  int status = pclose(pipe);
  if (exit_code != nullptr) {
    *exit_code = WEXITSTATUS(status);
  }
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("report json round-trips") {
  for (auto const& report :
       {formula_heights(Family::pn, 3), formula_heights(Family::mnq, 2, 7),
        brute_heights(build(Family::tn, 2))}) {
    auto dumped = to_json(report).dump(2);
    auto reparsed = nlohmann::json::parse(dumped).dump(2);
    CHECK(dumped == reparsed);
  }
}

TEST_CASE("formula json output carries the published values") {
  int code = -1;
  auto out = run_cli("formula --family tn --n 3 --side all --format json", &code);
  CHECK(code == 0);
  auto j = nlohmann::json::parse(out);
  CHECK(j["lcong"] == 12);
  CHECK(j["rcong"] == 11);
  CHECK(j["cong"] == 7);
  CHECK(j["mode"] == "formula");
  // emitted documents re-serialise to themselves
  CHECK(j.dump(2) + "\n" == out);
}

TEST_CASE("exit codes") {
  int code = -1;
  run_cli("verify --family tn --n 2 --side all", &code);
  CHECK(code == 0);
  run_cli("formula --family nosuch --n 2", &code);
  CHECK(code == 2);
  run_cli("formula --family tn", &code);  // missing --n
  CHECK(code == 2);
  run_cli("brute --family tn --n 9", &code);  // above the element limit
  CHECK(code == 2);
  run_cli("formula --family mnq --n 2", &code);  // missing q
  CHECK(code == 2);
}

TEST_CASE("cayley ingestion") {
  auto path = std::string("/tmp/conglat_cli_test_chain.txt");
  {
    std::ofstream out(path);
    out << "3\n0 0 0\n0 1 1\n0 1 2\n";  // the chain semilattice min(a,b)
  }
  int code = -1;
  auto text = run_cli("cayley --input " + path + " --then brute --side all",
                      &code);
  CHECK(code == 0);
  // a k-chain semilattice has all three heights k
  CHECK(text.find("height: 3") != std::string::npos);
  auto green = run_cli("cayley --input " + path + " --then green", &code);
  CHECK(code == 0);
  CHECK(green.find("3 D-classes") != std::string::npos);

  run_cli("cayley --input /nonexistent --then green", &code);
  CHECK(code == 2);
  {
    std::ofstream out(path);
    out << "2\n0 1\n1 0 0\n";  // ragged
  }
  run_cli("cayley --input " + path + " --then green", &code);
  CHECK(code == 2);
}

TEST_CASE("brute csv format") {
  int code = -1;
  auto out = run_cli("brute --family tln --n 3 --side all --format csv", &code);
  CHECK(code == 0);
  CHECK(out.rfind("family,n,side,height,mode\n", 0) == 0);
  CHECK(out.find("tln,3,left,5,brute\n") != std::string::npos);
  CHECK(out.find("tln,3,two,4,brute\n") != std::string::npos);
}

TEST_SUITE_END();
