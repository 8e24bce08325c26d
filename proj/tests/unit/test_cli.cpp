#include "severi/cli.hpp"
#include "severi/moduli.hpp"
#include "severi/session.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <unistd.h>

using namespace severi;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("severi-cli-" + std::to_string(::getpid()) + "-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("value commands") {
  CHECK(run({"lambda", "--d", "4", "--delta", "1", "--no-timings"}).out == "45\n");
  CHECK(run({"degree", "--d", "4", "--delta", "3", "--irreducible", "--no-timings"}).out == "620\n");
  CHECK(run({"bnum", "--d", "4", "--delta", "1", "--no-timings"}).out == "117\n");
  CHECK(run({"degree", "--d", "3", "--delta", "0", "--alpha", "1", "--beta", "0,1", "--no-timings"}).out == "2\n");
  const auto timed = run({"lambda", "--d", "4", "--delta", "1"});
  CHECK(timed.out == "45\n");
  CHECK(timed.err.find("elapsed_ms") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({"bnum", "--d", "4", "--delta", "1", "--irreducible"}).code == 2);
  CHECK(run({"degree", "--d", "4", "--delta", "1", "--irreducible", "--beta", "4"}).code == 2);
  CHECK(run({"degree", "--d", "4", "--delta", "7"}).code == 2);
  CHECK(run({"degree", "--d", "4", "--delta", "1", "--beta", "3"}).code == 2);
  CHECK(run({"degree", "--d", "4", "--delta", "1", "--beta", "x"}).code == 2);
  CHECK(run({"degree", "--d", "4"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"degree", "--d", "4", "--delta", "1", "--format", "xml"}).code == 2);
  CHECK(run({"polyfit", "--delta", "1", "--quantity", "L", "--d-from", "4", "--d-to", "8"}).code == 2);
  CHECK(run({"polyfit", "--delta", "1", "--quantity", "Q", "--d-from", "4", "--d-to", "12"}).code == 2);
  CHECK(run({"slope-table", "--g-min", "1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("counts and polyfit") {
  const auto c = run({"counts", "--d", "4", "--delta", "1", "--no-timings"});
  CHECK(c.code == 0);
  CHECK(c.out.find("CU=72\n") != std::string::npos);
  const auto p = run({"polyfit", "--delta", "0", "--quantity", "L", "--d-from", "3", "--d-to", "8", "--no-timings"});
  CHECK(p.out.find("fit: (1/2)*d^2 - (3/2)*d + 1") != std::string::npos);
  const auto j = nlohmann::json::parse(
      run({"polyfit", "--delta", "1", "--quantity", "L", "--d-from", "4", "--d-to", "11", "--format", "json"}).out);
  CHECK(j["degree"] == 4);
  CHECK(j["leading"] == "3/2");
  CHECK(j["leading_ok"] == true);
}

TEST_CASE("json output carries the library's exact values") {
  Session s(1);
  const auto j = nlohmann::json::parse(run({"lambda", "--d", "7", "--delta", "9", "--format", "json"}).out);
  CHECK(ExactScalar::parse(j["exact"].get<std::string>()) ==
        s.engine().lambda_degree(SeveriKey::plain(7, 9)));
  CHECK(j.contains("elapsed_ms"));

  const auto t = nlohmann::json::parse(
      run({"slope-table", "--g-min", "2", "--g-max", "7", "--format", "json", "--no-timings"}).out);
  CHECK_FALSE(t.contains("elapsed_ms"));
  const auto rows = slope_table(s, 2, 7);
  REQUIRE(t["rows"].size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(ExactScalar::parse(t["rows"][i]["slope_exact"].get<std::string>()) == *rows[i].slope);
    CHECK(t["rows"][i]["slope_2dp"] == rows[i].slope->to_decimal(2));
  }
}

TEST_CASE("csv escapes sequences") {
  const auto r = run({"degree", "--d", "3", "--delta", "0", "--beta", "1,1", "--alpha", "0,0,0", "--format", "csv",
                      "--no-timings"});
  CHECK(r.out == "quantity,d,delta,alpha,beta,irreducible,exact,decimal_2dp\nN,3,0,,\"1,1\",false,4,4.00\n");
}

TEST_CASE("verify modes") {
  const auto v = run({"lambda", "--d", "4", "--delta", "1", "--verify", "--no-timings"});
  CHECK(v.code == 0);
  CHECK(v.out.find("verification: pass") != std::string::npos);
  const auto all = run({"verify", "--no-timings"});
  CHECK(all.code == 0);
  CHECK(all.out.find("mismatch (flagged)") != std::string::npos);
}

TEST_CASE("warm and cold caches give identical output") {
  TempDir dir;
  const std::string cache = (dir.path / "memo.txt").string();
  const std::vector<std::string> args{"slope-table", "--g-max", "8", "--format", "json", "--no-timings",
                                      "--cache-path", cache};
  const auto cold = run(args);
  REQUIRE(fs::exists(cache));
  const auto warm = run(args);
  CHECK(cold.code == 0);
  CHECK(cold.out == warm.out);
  const auto checked = run({"lambda", "--d", "5", "--delta", "2", "--verify-cache", "--cache-path", cache});
  CHECK(checked.code == 0);
  CHECK(checked.out == "2807\n");
}

TEST_CASE("cache path from the environment") {
  TempDir dir;
  const std::string cache = (dir.path / "env.txt").string();
  ::setenv("SEVERI_CACHE", cache.c_str(), 1);
  const auto r = run({"degree", "--d", "5", "--delta", "2", "--no-timings"});
  ::unsetenv("SEVERI_CACHE");
  CHECK(r.out == "882\n");
  CHECK(fs::exists(cache));
}

TEST_CASE("damaged caches are reported") {
  TempDir dir;
  const auto cache = dir.path / "bad.txt";
  std::ofstream(cache) << "severi-cache v1\nN|4|1||4|nonsense\n";
  const auto r = run({"degree", "--d", "4", "--delta", "1", "--cache-path", cache.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("line 2") != std::string::npos);

  std::ofstream(cache) << "severi-cache v1\nN|4|1||4|28\n";
  CHECK(run({"degree", "--d", "4", "--delta", "1", "--verify-cache", "--cache-path", cache.string()}).code == 1);
}

TEST_CASE("output does not depend on parallelism") {
  const auto one = run({"slope-table", "--g-max", "9", "--format", "json", "--no-timings", "--parallelism", "1"});
  const auto four = run({"slope-table", "--g-max", "9", "--format", "json", "--no-timings", "--parallelism", "4"});
  CHECK(one.out == four.out);
}
