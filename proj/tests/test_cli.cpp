#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sunstrip/cli.hpp"
#include "sunstrip/errors.hpp"
#include "sunstrip/oracle.hpp"

using namespace sunstrip;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count") {
  CHECK(run({"count", "--model", "riviera", "--n", "12"}).out == "46\n");
  CHECK(run({"count", "--model", "riviera", "--n", "0"}).out == "1\n");
  CHECK(run({"count", "--model", "riviera", "--n", "12", "--oracle"}).out == "46\n");
  CHECK(run({"count", "--model", "flory", "--n", "12"}).out == "28\n");
  CHECK(run({"count", "--model", "riviera", "--n", "12", "--boundary", "periodic"}).out ==
        std::to_string(enumerate_maximal(ModelSpec::riviera().with_boundary(Boundary::Periodic), 12).size()) + "\n");
  CHECK(run({"count", "--model", "riviera", "--n", "10", "--boundary", "no-sun"}).out ==
        std::to_string(enumerate_maximal(ModelSpec::riviera().with_boundary(Boundary::NoSun), 10).size()) + "\n");
}

TEST_CASE("enumerate agrees with the oracle") {
  const Run r = run({"enumerate", "--model", "riviera", "--n", "9"});
  REQUIRE(r.code == 0);
  std::string expected;
  for (const auto& c : enumerate_maximal(ModelSpec::riviera(), 9)) expected += c.to_string() + "\n";
  CHECK(r.out == expected);
}

TEST_CASE("table") {
  const Run r = run({"table", "--model", "riviera", "--nmax", "4"});
  CHECK(r.out == "n,k,count\n0,0,1\n1,1,1\n2,2,1\n3,2,3\n4,2,1\n4,3,2\n");
  CHECK(run({"table", "--model", "flory-mixed", "--nmax", "1"}).out.rfind("n,k1,k2,count\n", 0) == 0);
}

TEST_CASE("gf and verification") {
  const Run r = run({"gf", "--model", "riviera", "--verify-appendix"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verified") != std::string::npos);
  CHECK(run({"gf", "--model", "riviera-k2", "--verify-appendix"}).code == 0);
  CHECK(run({"gf", "--model", "riviera-k2", "--method", "resolvent"}).out ==
        run({"gf", "--model", "riviera-k2", "--method", "reconstruction"}).out);
  CHECK(run({"gf", "--model", "flory", "--verify-appendix"}).code == 2);
}

TEST_CASE("stats") {
  const Run r = run({"stats", "--model", "riviera"});
  CHECK(r.out.find("lambda: 1.401268\n") != std::string::npos);
  CHECK(r.out.find("efficiency: 0.865804\n") != std::string::npos);
  const Run j = run({"stats", "--model", "riviera", "--json", "--n", "20"});
  CHECK(j.out.find("\"occupancySlope\": 0.577203") != std::string::npos);
  CHECK(j.out.find("\"maxOccupancy\"") != std::string::npos);
}

TEST_CASE("bijections") {
  CHECK(run({"bijection", "perm", "--config", "10110"}).out == "(3,1,5,2,4,8,9,6,7)\n");
  CHECK(run({"bijection", "perm", "--config", "(3,1,5,2,4,8,9,6,7)", "--inverse"}).out == "10110\n");
  CHECK(run({"bijection", "composition", "--config", "200200"}).out == "3+3+5\n");
  CHECK(run({"bijection", "composition", "--config", "3+3+5", "--k", "2", "--inverse"}).out == "200200\n");
  CHECK(run({"bijection", "tuple", "--config", "(1,1,0,2)", "--k", "2", "--inverse"}).out == "02000200200\n");
  const std::string walk = run({"bijection", "p3", "--config", "10110"}).out;
  CHECK(run({"bijection", "p3", "--config", walk.substr(0, walk.size() - 1), "--inverse"}).out == "10110\n");
  CHECK(run({"bijection", "perm", "--config", "10010"}).code == 2);
}

TEST_CASE("export writes b-files that read back") {
  const std::string path = "test_cli_export.b";
  REQUIRE(run({"export", "--model", "riviera", "--by", "length", "--nmax", "30", "--out", path}).code == 0);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  const auto terms = parse_bfile(ss.str());
  REQUIRE(terms.size() == 31);
  CHECK(terms.front().first == 0);
  CHECK(terms[12].second == 46);
  CHECK(terms[30].second == count_length(build_automaton(ModelSpec::riviera()), 30));
  std::remove(path.c_str());
  CHECK(parse_bfile("# header\n\n3 7\n").at(0).second == 7);
  CHECK_THROWS_AS(parse_bfile("3\n"), DomainError);
}

TEST_CASE("house counts match a length-bounded search") {
  // with k houses a maximal one-story Riviera word has length at most 3k + 2
  const auto counts = counts_by_houses(model_info("riviera"), build_automaton(ModelSpec::riviera()), 6);
  std::vector<mpz_class> brute(7, 0);
  for (int n = 0; n <= 20; ++n)
    for (const auto& c : enumerate_maximal(ModelSpec::riviera(), n))
      if (c.house_count() <= 6) ++brute[c.house_count()];
  CHECK(counts == brute);
}

TEST_CASE("exit codes and determinism") {
  CHECK(run({}).code == 2);
  CHECK(run({"count", "--model", "nope", "--n", "3"}).code == 2);
  CHECK(run({"count", "--model", "riviera", "--n", "-1"}).code == 2);
  CHECK(run({"count", "--model", "flory", "--n", "3", "--boundary", "periodic"}).code == 2);
  CHECK(run({"enumerate", "--model", "grid3", "--n", "12", "--budget", "10"}).code == 3);
  CHECK(run({"--help"}).code == 0);
  const std::vector<std::string> args{"gf", "--model", "grid2"};
  CHECK(run(args).out == run(args).out);
}
