#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using sqfree::json;

namespace {
  struct Result {
    int         status;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "sqfree");
    std::ostringstream out, err;
    int status = sqfree::cli::run(args, out, err);
    return {status, out.str(), err.str()};
  }

  std::string const data = SQFREE_DATA_DIR;

  fs::path temp_path(std::string const& name) {
    return fs::temp_directory_path() / ("sqfree_test_" + name);
  }

  json read_json(fs::path const& p) {
    std::ifstream in(p);
    return json::parse(in);
  }
}  // namespace

TEST_CASE("generate", "[cli]") {
  auto r = run({"generate", "--avoid", "s1", "--n", "12"});
  CHECK(r.status == 0);
  CHECK(r.out == "abcacbabcbac\n");
  CHECK(run({"generate", "--avoid", "s3", "--n", "10"}).out == "abcacbacab\n");

  auto path = temp_path("gen.txt");
  r = run({"generate", "--avoid", "s2", "--n", "100", "--out", path.string()});
  CHECK(r.status == 0);
  std::ifstream in(path);
  std::string   line;
  std::getline(in, line);
  CHECK(line.size() == 100);
  fs::remove(path);
}

TEST_CASE("test-morphism verdicts and reports", "[cli]") {
  auto path = temp_path("thue.json");
  auto r = run({"test-morphism", "--avoid", "s1", "--morphism", data + "/thue.mor",
                "--json", path.string()});
  CHECK(r.status == 0);
  auto j = read_json(path);
  CHECK(j["verdict"] == "pass");
  CHECK(j["exit_status"] == 0);
  CHECK(j["command"].get<std::string>().find("test-morphism") != std::string::npos);
  CHECK(j.contains("timing"));
  CHECK(j.contains("budgets"));
  CHECK(j["counts"]["checked_factors"] == 89);

  r = run({"test-morphism", "--avoid", "s1", "--morphism", data + "/constant.mor",
           "--json", path.string()});
  CHECK(r.status == 1);
  j = read_json(path);
  CHECK(j["verdict"] == "fail");
  CHECK(j["counts"]["minimal_failing_length"] == 2);
  CHECK(j["witnesses"][0]["factor"].get<std::string>().size() == 2);
  CHECK(j.contains("decomposition"));
  fs::remove(path);
}

TEST_CASE("reports replay byte-identically apart from timing", "[cli]") {
  auto path = temp_path("replay.json");
  std::vector<std::string> args{"probe-s3", "--target-size", "3", "--max-len", "3",
                                "--samples", "200", "--seed", "9", "--k-max", "8",
                                "--json", path.string()};
  auto replay = [&] {
    CHECK(run(args).status == 0);
    auto j = read_json(path);
    j.erase("timing");
    return j.dump();
  };
  auto first = replay();
  CHECK(first == replay());
  CHECK(read_json(path)["command"].get<std::string>().find("--seed 9") != std::string::npos);
  fs::remove(path);
}

TEST_CASE("other subcommands", "[cli]") {
  CHECK(run({"crochemore", "--morphism", data + "/thue.mor"}).status == 1);
  CHECK(run({"crochemore", "--morphism", data + "/constant.mor"}).status == 1);
  CHECK(run({"crochemore", "--morphism", data + "/identity.mor"}).status == 0);
  CHECK(run({"check-word", "--word", "abcacb"}).status == 0);
  CHECK(run({"check-word", "--word", "abaab"}).status == 1);
  CHECK(run({"check-word", "--avoid", "s2", "--n", "3000"}).status == 0);
  CHECK(run({"check-word", "--word", "0110", "--alphabet", "01"}).status == 1);
  CHECK(run({"scan", "--word", "acabcbacbcabcbaca", "--templates", "azbza"}).status == 1);
  CHECK(run({"scan", "--avoid", "s1", "--n", "5000"}).status == 0);
  CHECK(run({"scan", "--avoid", "s2", "--n", "5000", "--templates", "azbza,azcza",
             "--min-z", "3"}).status == 0);
  auto census = run({"census", "--avoid", "s2", "--n", "4096"});
  CHECK(census.status == 0);
  CHECK(census.out == "missing: aba aca\n");
  auto remark = run({"remark17"});
  CHECK(remark.status == 0);
  CHECK(remark.out.find("azbza with z = cabcbac") != std::string::npos);
  CHECK(run({"verify-theorem1", "--avoid", "s2", "--max-len", "2"}).status == 0);
  CHECK(run({"probe-s3", "--max-len", "2", "--k-max", "6"}).status == 0);
}

TEST_CASE("usage and input errors exit 2", "[cli]") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"generate", "--avoid", "s1"}).status == 2);
  CHECK(run({"generate", "--avoid", "s9", "--n", "3"}).status == 2);
  CHECK(run({"generate", "--avoid", "s1", "--n", "0"}).status == 2);
  CHECK(run({"check-word", "--word", "abd"}).status == 2);
  CHECK(run({"check-word"}).status == 2);
  CHECK(run({"scan", "--word", "abc", "--templates", "nope"}).status == 2);
  CHECK(run({"verify-theorem1", "--avoid", "s3", "--max-len", "1"}).status == 2);
  CHECK(run({"verify-theorem1", "--target-size", "9"}).status == 2);

  auto bad = temp_path("bad.mor");
  std::ofstream(bad) << "a=01\nb=0\n";
  auto r = run({"test-morphism", "--avoid", "s1", "--morphism", bad.string()});
  CHECK(r.status == 2);
  CHECK(r.err.find("missing definition for c") != std::string::npos);
  CHECK(r.err.find(bad.string()) != std::string::npos);
  fs::remove(bad);
}

TEST_CASE("budget exhaustion exits 3", "[cli]") {
  CHECK(run({"generate", "--avoid", "s2", "--n", "5000", "--max-steps", "10"}).status == 3);
  CHECK(run({"generate", "--avoid", "s1", "--n", "5000", "--max-prefix", "100"}).status == 3);
}
