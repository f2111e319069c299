#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(RTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("formulas table") {
    auto r = run("formulas --table bk --kmax 8");
    CHECK(r.code == 0);
    CHECK(r.out.find("k,parity,numerator,denominator,decimal") == 0);
    CHECK(r.out.find("\n4,even,1,8,") != std::string::npos);
    CHECK(r.out.find("\n5,odd,1,4,") != std::string::npos);
    CHECK(r.out.find("\n6,even,2,7,") != std::string::npos);
    CHECK(r.out.find("\n7,odd,1,3,") != std::string::npos);
    CHECK(r.out.find("\n8,even,7,20,") != std::string::npos);
    CHECK(r.out.find("\n9,") == std::string::npos);
  }

  TEST_CASE("census of a named graph") {
    auto r = run("census --graph K4 --r 2 --k 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"valid\": \"18\"") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(run("census --graph K12 --r 2 --k 3").code == 3);
    CHECK(run("be --n 201").code == 2);
    CHECK(run("construct --family hst --s 3 --t 4 --n 30").code == 2);
    CHECK(run("nonsense").code == 1);
    CHECK(run("census --r").code == 1);
    CHECK(run("--help").code == 0);
  }

  TEST_CASE("dry run prints the budget and does no work") {
    auto r = run("--dry-run census --graph K12 --r 2 --k 3");
    CHECK(r.code == 0);
    CHECK(r.out.find("dry-run") != std::string::npos);
    CHECK(r.out.find("2^66") != std::string::npos);
  }

  TEST_CASE("reports are reproducible and the seed comes from RTLAB_SEED") {
    auto a = run("construct --family hnk --n 40 --k 6 --seed 5");
    auto b = run("construct --family hnk --n 40 --k 6 --seed 5");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto env = run("construct --family gamma --n 40");
    setenv("RTLAB_SEED", "5", 1);
    auto env5 = run("construct --family gamma --n 40");
    unsetenv("RTLAB_SEED");
    auto explicit5 = run("construct --family gamma --n 40 --seed 5");
    CHECK(env5.out == explicit5.out);
    CHECK(env5.out.find("\"seed\": 5") != std::string::npos);
    CHECK(env.out.find("\"seed\": 1") != std::string::npos);
  }

  TEST_CASE("manifest and graph output") {
    const std::string dir = "cli_test_out";
    std::filesystem::create_directories(dir);
    auto r = run("--manifest " + dir + "/m.json be --n 60 --seed 2 --out " + dir + "/be.graph --report " + dir +
                 "/be.json");
    CHECK(r.code == 0);
    std::string report = slurp(dir + "/be.json");
    CHECK(report.find("\"k4_free\": true") != std::string::npos);
    CHECK(report.find("\"cross_density\"") != std::string::npos);
    std::string manifest = slurp(dir + "/m.json");
    CHECK(manifest.find("\"wall_seconds\"") != std::string::npos);
    CHECK(manifest.find("be.graph") != std::string::npos);
    CHECK(slurp(dir + "/be.graph").rfind("60 ", 0) == 0);
  }

  TEST_CASE("partition from a coloring file") {
    const std::string path = "cli_test_coloring.json";
    {
      std::ofstream out(path);
      out << "{\"r\":2,\"edges\":[";
      bool first = true;
      for (int u = 0; u < 10; ++u)
        for (int v = u + 1; v < 10; ++v) {
          out << (first ? "" : ",") << "[" << u << "," << v << "," << ((u < 5) == (v < 5) ? 1 : 2) << "]";
          first = false;
        }
      out << "]}";
    }
    auto r = run("partition --graph K10 --coloring " + path + " --c 0.5");
    CHECK(r.code == 0);
    CHECK(r.out.find("\"ok\": true") != std::string::npos);
  }

  TEST_CASE("family and symmetrize") {
    auto f = run("family --t 1 --i 1 --n 20 --samples 50");
    CHECK(f.code == 0);
    CHECK(f.out.find("\"failures\": 0") != std::string::npos);
    auto s = run("symmetrize --n 5 --t 6 --oracle exhaustive");
    CHECK(s.code == 0);
    CHECK(s.out.find("\"agrees\": true") != std::string::npos);
  }

  TEST_CASE("verify a single criterion") {
    auto r = run("verify --suite desk --only 1 7");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS [1]") != std::string::npos);
    CHECK(r.out.find("PASS [7]") != std::string::npos);
  }
}
