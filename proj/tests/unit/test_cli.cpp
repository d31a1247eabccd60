#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>

#include "doctest.h"
#include "helpers.hpp"
#include "json.hpp"
#include "mbb/edge_list.hpp"
#include "mbb/oracle.hpp"
#include "mbb/report.hpp"

using namespace mbb;
namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MBB_BINARY) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() /
             ("mbb-cli-" + std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string put(const std::string& name, const std::string& text) {
  const auto p = scratch() / name;
  std::ofstream(p) << text;
  return p.string();
}

}  // namespace

TEST_CASE("gen then solve agrees with the oracle") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto path = (scratch() / ("g" + std::to_string(seed) + ".txt")).string();
    const auto density = 0.1 + 0.03 * double(seed % 25);
    REQUIRE(run("gen --left 9 --right 8 --density " + std::to_string(density) + " --seed " + std::to_string(seed) +
                " --out " + path)
                .code == 0);
    const auto g = read_edge_list(path);
    const auto expected = brute_force_mbb(g).per_side();
    for (const char* algo : {"hbv", "dense", "basic", "oracle"}) {
      const auto r = run("solve " + path + " --json --algo " + algo);
      REQUIRE(r.code == 0);
      const auto j = json::parse(r.out);
      REQUIRE(check_report_schema(j).empty());
      REQUIRE(j["per_side_size"] == expected);
      REQUIRE(j["algo"] == algo);
    }
  }
}

TEST_CASE("human readable solve") {
  const auto path = put("k22.txt", "2 2 4\n1 1\n1 2\n2 1\n2 2\n");
  const auto r = run("solve " + path);
  CHECK(r.code == 0);
  CHECK(r.out.find("per_side_size 2\n") != std::string::npos);
  CHECK(r.out.find("left 1 2\n") != std::string::npos);
  CHECK(r.out.find("certified yes\n") != std::string::npos);
}

TEST_CASE("decompose") {
  const auto path = put("gx.txt", "1 1\n1 2\n2 1\n");
  auto r = run("decompose " + path + " --mode core --json");
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["degeneracy"] == 1);
  r = run("decompose " + path + " --mode bicore");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("bidegeneracy ", 0) == 0);
}

TEST_CASE("exit codes") {
  const auto bad = put("bad.txt", "1 1\n1 zz\n");
  auto r = run("solve " + bad + " --json");
  CHECK(r.code == 3);
  const auto j = json::parse(r.out);
  CHECK(j["error"]["kind"] == "parse");
  CHECK(j["error"]["line"] == 2);

  CHECK(run("solve " + put("dup.txt", "1 1\n1 1\n")).code == 3);
  CHECK(run("solve " + (scratch() / "nope.txt").string()).code == 1);
  CHECK(run("solve").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("solve " + put("ok.txt", "1 1\n") + " --algo quick").code == 2);
  CHECK(run("gen --left 2 --right 2 --density 2 --seed 1 --out " + (scratch() / "x.txt").string()).code == 2);
  CHECK(run("fetch no-such-dataset --offline").code == 5);
  CHECK(run("fetch moreno-crime --offline --cache-dir " + (scratch() / "empty-cache").string()).code == 5);

  const auto big = put("k13.txt", [] {
    std::string s;
    for (int i = 1; i <= 13; ++i)
      for (int k = 1; k <= 13; ++k) s += std::to_string(i) + " " + std::to_string(k) + "\n";
    return s;
  }());
  CHECK(run("solve " + big + " --algo oracle").code == 1);
}

TEST_CASE("timeout exits with code 4 and a valid partial answer") {
  const auto path = (scratch() / "dense200.txt").string();
  REQUIRE(run("gen --left 200 --right 200 --density 0.8 --seed 3 --out " + path).code == 0);
  const auto r = run("solve " + path + " --algo dense --json --timeout-secs 1");
  CHECK(r.code == 4);
  const auto j = json::parse(r.out);
  CHECK(j["timeout_hit"] == true);
  CHECK(j["certified"] == false);
  CHECK(j["per_side_size"].get<int>() > 0);
}

TEST_CASE("repeated runs are identical apart from wall times") {
  const auto path = (scratch() / "det.txt").string();
  REQUIRE(run("gen --left 60 --right 60 --density 0.3 --seed 8 --out " + path).code == 0);
  const auto a = run("solve " + path + " --json --threads 1 --seed 8");
  const auto b = run("solve " + path + " --json --threads 1 --seed 8");
  REQUIRE(a.code == 0);
  CHECK(without_wall_times(json::parse(a.out)) == without_wall_times(json::parse(b.out)));

  const auto other = (scratch() / "det2.txt").string();
  REQUIRE(run("gen --left 60 --right 60 --density 0.3 --seed 8 --out " + other).code == 0);
  std::ifstream fa(path), fb(other);
  CHECK(std::string(std::istreambuf_iterator<char>(fa), {}) == std::string(std::istreambuf_iterator<char>(fb), {}));
}

TEST_CASE("bench writes a report") {
  const auto out = (scratch() / "bench.json").string();
  REQUIRE(run("bench --suite dense --sizes 16 --instances 1 --out " + out).code == 0);
  std::ifstream in(out);
  const auto j = json::parse(in);
  CHECK(j["suite"] == "dense");
  CHECK(j["rows"].size() == 6);

  const auto r = run("bench --suite sparse --offline --cache-dir " + (scratch() / "empty-cache").string());
  CHECK(r.code == 0);
  for (const auto& row : json::parse(r.out)["rows"]) CHECK(row["status"] == "skipped: not cached");
}
