#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "permpat/cli.hpp"
#include "permpat/engines.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = permpat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table: csv output matches the library export byte for byte") {
  auto r = run({"table", "--family", "abc", "--n-max", "10", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out == permpat::engines::build_table(permpat::engines::GridFamily::Abc, 10).to_csv());
}

TEST_CASE("table: n-max 0 prints the single avoider") {
  auto r = run({"table", "--family", "abc", "--n-max", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == "n  I=0\n0    1\n");
}

TEST_CASE("table: unknown family is a usage error") {
  auto r = run({"table", "--family", "bogus", "--n-max", "3"});
  CHECK(r.code == 2);
  CHECK(r.err.find("bogus") != std::string::npos);
}

TEST_CASE("table: abcd slices render and the full cube requires json") {
  auto i1 = run({"table", "--family", "abcd-I1", "--n-max", "10", "--format", "csv"});
  CHECK(i1.code == 0);
  CHECK(i1.out.find("10,586590,586590,586590,548325,471795,372565,268909,175474,101036,48620,16796\n") !=
        std::string::npos);
  auto i2 = run({"table", "--family", "abcd-I2", "--n-max", "7", "--format", "csv"});
  CHECK(i2.code == 0);
  CHECK(i2.out.find("7,2761,2761,1588,640,190,42,7,1\n") != std::string::npos);
  CHECK(run({"table", "--family", "abcd", "--n-max", "4", "--format", "csv"}).code == 2);
  CHECK(run({"table", "--family", "abcd", "--n-max", "4", "--format", "json"}).code == 0);
}

TEST_CASE("table: json export round-trips through the grid parser") {
  auto r = run({"table", "--family", "cab-one", "--n-max", "8", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto grid = permpat::engines::TableGrid::from_json(nlohmann::json::parse(r.out));
  CHECK(grid == permpat::engines::build_table(permpat::engines::GridFamily::CabOne, 8));
}

TEST_CASE("commands are deterministic") {
  const std::vector<std::string> args = {"table", "--family", "abc-two", "--n-max", "9", "--format", "csv"};
  CHECK(run(args).out == run(args).out);
  const std::vector<std::string> gargs = {"guess", "--family", "abc", "--column", "I=1",
                                          "--n-max", "16", "--max-order", "1", "--max-degree", "1"};
  CHECK(run(gargs).out == run(gargs).out);
}

TEST_CASE("genpoly") {
  CHECK(run({"genpoly", "--pattern", "abc", "--n", "4"}).out == "14 6 3 0 1\n");
  CHECK(run({"genpoly", "--pattern", "abc", "--n", "3"}).out == "5 1\n");
  CHECK(run({"genpoly", "--pattern", "abc", "--n", "1"}).out == "1\n");
  CHECK(run({"genpoly", "--pattern", "abc", "--n", "4", "--at-one"}).out == "24 16 9 4 1\n");
  CHECK(run({"genpoly", "--pattern", "123", "--n", "4"}).out == "14 6 3 0 1\n");
  // ceiling exceeded is a usage error
  CHECK(run({"genpoly", "--pattern", "abc", "--n", "11"}).code == 2);
  CHECK(run({"genpoly", "--pattern", "abc", "--n", "9", "--ceiling", "8"}).code == 2);
}

TEST_CASE("bruteforce single counts") {
  CHECK(run({"bruteforce", "--family", "abc", "--n", "5", "--r", "0", "--I", "2"}).out == "28\n");
  CHECK(run({"bruteforce", "--family", "abcd", "--n", "7", "--I1", "1", "--I2", "3"}).out == "640\n");
  CHECK(run({"bruteforce", "--family", "abc+bac", "--n", "6"}).out == "32\n");
  CHECK(run({"bruteforce", "--family", "nope", "--n", "3"}).code == 2);
}

TEST_CASE("guess from an engine column and from a file") {
  auto cat = run({"guess", "--family", "abc", "--column", "I=1", "--n-max", "20",
                  "--max-order", "1", "--max-degree", "1"});
  CHECK(cat.code == 0);
  CHECK(cat.out.find("(n+2)*a(n+1) + (-4n-2)*a(n) = 0") != std::string::npos);

  auto abcd = run({"guess", "--family", "abcd", "--column", "I1=1,I2=1", "--n-max", "24",
                   "--max-order", "2", "--max-degree", "2"});
  CHECK(abcd.code == 0);
  CHECK(abcd.out.find("(n^2+8n+16)*a(n+2) + (-10n^2-42n-41)*a(n+1) + (9n^2+18n+9)*a(n) = 0") != std::string::npos);

  auto doubling = run({"guess", "--family", "abc+bac", "--column", "I=1", "--n-max", "16",
                       "--max-order", "1", "--max-degree", "0"});
  CHECK(doubling.code == 0);
  CHECK(doubling.out.find("(1)*a(n+1) + (-2)*a(n) = 0") != std::string::npos);

  const char* path = "ones_tmp_test.txt";
  {
    std::ofstream f(path);
    for (int i = 0; i < 12; ++i) f << "1\n";
  }
  auto ones = run({"guess", "--file", path, "--max-order", "1", "--max-degree", "1"});
  std::remove(path);
  CHECK(ones.code == 0);
  CHECK(ones.out.find("(1)*a(n+1) + (-1)*a(n) = 0") != std::string::npos);

  // insufficient terms: usage error naming the required count
  const char* short_path = "short_tmp_test.txt";
  {
    std::ofstream f(short_path);
    f << "1 2 3\n";
  }
  auto too_short = run({"guess", "--file", short_path, "--max-order", "2", "--max-degree", "2"});
  std::remove(short_path);
  CHECK(too_short.code == 2);
  CHECK(too_short.err.find("15") != std::string::npos);
}

TEST_CASE("guess json output carries the recurrence") {
  auto r = run({"guess", "--family", "abc", "--column", "I=1", "--n-max", "20", "--max-order", "1",
                "--max-degree", "1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("validated_terms") == 4);
  CHECK(j.at("found").at("order") == 1);
  CHECK(j.at("found").at("coeffs")[1] == nlohmann::json({"2", "1"}));
}

TEST_CASE("verify exit codes") {
  auto ok = run({"verify", "--suite", "closed-forms", "--n-max", "12"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("all checks passed") != std::string::npos);
  auto fe = run({"verify", "--suite", "functional-eq", "--n-max", "4"});
  CHECK(fe.code == 0);
  auto oracle = run({"verify", "--suite", "oracle", "--n-max", "5"});
  CHECK(oracle.code == 0);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
}

TEST_CASE("verify --suite all runs every check") {
  auto r = run({"verify", "--suite", "all", "--n-max", "12", "--ceiling", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("oracle equivalence") != std::string::npos);
  CHECK(r.out.find("closed-form ballot") != std::string::npos);
  CHECK(r.out.find("functional equation") != std::string::npos);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify --format json reports per-suite results") {
  auto r = run({"verify", "--suite", "closed-forms", "--n-max", "10", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("passed") == true);
  REQUIRE(j.at("suites").size() == 1);
  const auto& cf = j.at("suites")[0];
  CHECK(cf.at("suite") == "closed-forms");
  CHECK(cf.at("column_recurrence_ok") == true);
  REQUIRE(cf.at("reports").size() == 5);
  CHECK(cf.at("reports")[0].at("form") == "ballot");
  CHECK(cf.at("reports")[0].at("status") == "proved");
  CHECK(cf.at("reports")[3].at("status") == "conjecture");
  CHECK(cf.at("reports")[0].at("mismatches").empty());
}

TEST_CASE("PERMPAT_BRUTE_CEILING lowers the default brute ceiling") {
  setenv("PERMPAT_BRUTE_CEILING", "3", 1);
  auto blocked = run({"genpoly", "--pattern", "abc", "--n", "4"});
  auto passed = run({"genpoly", "--pattern", "abc", "--n", "3"});
  auto overridden = run({"genpoly", "--pattern", "abc", "--n", "4", "--ceiling", "5"});
  unsetenv("PERMPAT_BRUTE_CEILING");
  CHECK(blocked.code == 2);
  CHECK(passed.code == 0);
  CHECK(overridden.code == 0);
  CHECK(overridden.out == "14 6 3 0 1\n");
}

TEST_CASE("table --out writes a file") {
  const char* path = "grid_tmp_test.csv";
  auto r = run({"table", "--family", "abc", "--n-max", "3", "--format", "csv", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream buf;
  buf << f.rdbuf();
  std::remove(path);
  CHECK(buf.str() == permpat::engines::build_table(permpat::engines::GridFamily::Abc, 3).to_csv());
}
