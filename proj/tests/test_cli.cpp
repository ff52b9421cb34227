#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MODCAT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& file) { return std::string(MODCAT_DATA_DIR) + "/" + file; }

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check") {
    const Run r = run("check " + data("su2_9_mod2.json"));
    CHECK(r.status == 0);
    for (const char* c : {"(i) ", "(ii) ", "(iii) ", "(iv) ", "(v) ", "(vi) ", "(vii) "}) CHECK(r.out.find(c) != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);

    const Run j = run("--json check " + data("su2_9_mod2.json"));
    CHECK(j.status == 0);
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc["schema"] == "modcat-cli/1");
    CHECK(doc["command"] == "check");
  }

  TEST_CASE("a failing datum exits 1") {
    auto doc = nlohmann::json::parse(slurp(data("su2_9_mod2.json")));
    doc["torder"] = 33;
    for (auto& e : doc["t_exponents"]) e = e.get<int>() * 3;
    doc["t_exponents"][1] = doc["t_exponents"][1].get<int>() + 11;
    const auto path = (std::filesystem::temp_directory_path() / "modcat_cli_bad.json").string();
    std::ofstream(path) << doc.dump();
    CHECK(run("check " + path).status == 1);
    std::filesystem::remove(path);
  }

  TEST_CASE("fusion prints five 5x5 matrices") {
    const Run r = run("fusion " + data("su2_4_family_0.json"));
    CHECK(r.status == 0);
    std::istringstream in(r.out);
    std::string line;
    int headers = 0, rows = 0;
    while (std::getline(in, line)) {
      if (line.rfind("N_", 0) == 0) {
        ++headers;
        continue;
      }
      std::istringstream ls(line);
      int v, count = 0;
      while (ls >> v) ++count;
      if (count == 5) ++rows;
    }
    CHECK(headers == 5);
    CHECK(rows == 25);
  }

  TEST_CASE("levels") {
    const Run r = run("levels p=3,m=1,r=1");
    CHECK(r.status == 0);
    CHECK(r.out == "7 9 14 18 21 28 36 42 56 72 84 168\n");
    CHECK(run("levels p=4,m=1,r=1").status == 2);
  }

  TEST_CASE("catalog output matches the golden files") {
    CHECK(run("catalog su2-4 -i 3").out == slurp(data("su2_4_family_3.json")));
    CHECK(run("catalog su2-odd-mod2 -a 5 -b 1").out == slurp(data("su2_9_mod2.json")));
    CHECK(run("catalog pointed -a 5 -b 1").out == slurp(data("pointed_z5.json")));
    CHECK(run("catalog pointed -a 4").status == 2);
    CHECK(run("catalog nonsense").status == 2);
  }

  TEST_CASE("galois, rep and classify-rank5") {
    CHECK(run("galois " + data("su2_4_family_0.json")).status == 0);
    CHECK(run("rep " + data("su2_9_mod2.json")).status == 0);
    const Run r = run("--json classify-rank5");
    CHECK(r.status == 0);
    CHECK(nlohmann::json::parse(r.out)["schema"] == "modcat-cli/1");
  }

  TEST_CASE("equiv") {
    CHECK(run("equiv " + data("su2_4_family_0.json") + " " + data("su2_4_family_9.json")).status == 0);
    const Run r = run("equiv " + data("su2_9_mod2.json") + " " + data("pointed_z5.json"));
    CHECK(r.status == 1);
    CHECK(r.out.find("inequivalent") != std::string::npos);
  }

  TEST_CASE("usage and IO errors exit 2") {
    CHECK(run("").status == 2);
    CHECK(run("bogus").status == 2);
    CHECK(run("check /nonexistent/file.json").status == 2);
    CHECK(run("--precision 99 check " + data("su2_9_mod2.json")).status == 2);
  }
}
