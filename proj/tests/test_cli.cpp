#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "theo/cli.hpp"

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = theo::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify one-liners per method") {
  CliResult r = run({"classify", "17"});
  CHECK(r.code == 0);
  CHECK(r.out == "17: inconclusive: 1 mod 8 but not a perfect square\n");

  r = run({"classify", "9", "--method", "oracle"});
  CHECK(r.code == 0);
  CHECK(r.out == "9: rational: root 3\n");

  r = run({"classify", "17", "--method", "naive"});
  CHECK(r.code == 0);
  CHECK(r.out == "17: irrational: not a perfect square (asserted)\n");

  r = run({"classify", "19", "--method", "anthyphairesis"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "19: irrational: subtraction is periodic, period length 6\n");

  r = run({"classify", "12"});
  CHECK(r.out == "12: irrational: reduces to 2^2 * 3\n");
}

TEST_CASE("invalid inputs exit with 2") {
  CHECK(run({"classify", "0"}).code == 2);
  CHECK(run({"classify", "abc"}).code == 2);
  CHECK(run({"classify", "-4"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"classify", "9", "--method", "astrology"}).code == 2);
  CHECK(run({"frobnicate", "9"}).code == 2);
  CHECK(run({"lesson", "--start", "2"}).code == 2);
  CHECK(run({"lesson", "--start", "1"}).code == 2);
  CHECK(run({"lesson", "--exhaust", "--until-inconclusive"}).code == 2);
  CHECK(run({"coverage"}).code == 2);
  CHECK(run({"coverage", "--max", "0"}).code == 2);
  CHECK(run({"anthyphairesis", "46"}).code == 2);
  CHECK(run({"anthyphairesis", "0", "5"}).code == 2);
  CHECK(run({"anthyphairesis", "46", "10", "--surd", "7"}).code == 2);
}

TEST_CASE("lesson csv reproduces the canonical table") {
  const CliResult r = run({"lesson", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "n,remainder_mod8,verdict,reason\n"
        "3,3,proved_irrational,odd_remainder_not_1\n"
        "5,5,proved_irrational,odd_remainder_not_1\n"
        "7,7,proved_irrational,odd_remainder_not_1\n"
        "9,1,proved_rational,root=3\n"
        "11,3,proved_irrational,odd_remainder_not_1\n"
        "13,5,proved_irrational,odd_remainder_not_1\n"
        "15,7,proved_irrational,odd_remainder_not_1\n"
        "17,1,inconclusive,\n");
}

TEST_CASE("lesson text mentions the stop") {
  const CliResult r = run({"lesson"});
  CHECK(r.code == 0);
  CHECK(r.out.find("stopped at n = 17") != std::string::npos);

  const CliResult later = run({"lesson", "--start", "19"});
  CHECK(later.out.find("stopped at n = 33") != std::string::npos);

  const CliResult exhausted = run({"lesson", "--exhaust"});
  CHECK(exhausted.out.find("range exhausted") != std::string::npos);
  CHECK(exhausted.out.find("97") != std::string::npos);
}

TEST_CASE("coverage in both formats") {
  const CliResult csv = run({"coverage", "--max", "17", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out ==
        "range_max,conclusive,inconclusive,fraction_num,fraction_den\n"
        "17,16,1,16,17\n");

  const CliResult text = run({"coverage", "--max", "100"});
  CHECK(text.code == 0);
  CHECK(text.out.find("conclusive   91") != std::string::npos);
}

TEST_CASE("anthyphairesis subcommand") {
  const CliResult pair = run({"anthyphairesis", "46", "10"});
  CHECK(pair.code == 0);
  CHECK(pair.out.find("46 = 4 * 10 + 6") != std::string::npos);
  CHECK(pair.out.find("gcd(46, 10) = 2") != std::string::npos);

  const CliResult surd = run({"anthyphairesis", "--surd", "19"});
  CHECK(surd.code == 0);
  CHECK(surd.out ==
        "sqrt(19): quotients [4] then [2 1 3 1 2 8] repeating; "
        "no common measure\n");

  const CliResult square = run({"anthyphairesis", "--surd", "9"});
  CHECK(square.out == "sqrt(9) = 3, commensurable with the unit\n");

  const CliResult starved =
      run({"anthyphairesis", "--surd", "7", "--max-states", "3"});
  CHECK(starved.code == 1);
  CHECK(starved.err.find("no repeated state") != std::string::npos);
}

TEST_CASE("criteria prints six lines and sets the exit code") {
  const CliResult ok = run({"criteria"});
  CHECK(ok.code == 0);
  int lines = 0;
  for (char c : ok.out) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 6);
  for (const char* tag : {"c1 pass", "c2 pass", "c3 pass", "c4 pass",
                          "c5 pass", "c6 pass"}) {
    CHECK(ok.out.find(tag) != std::string::npos);
  }

  const CliResult tight = run({"criteria", "--budget", "10"});
  CHECK(tight.code == 1);
  CHECK(tight.out.find("c5 FAIL") != std::string::npos);
  CHECK(tight.out.find("c1 pass") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  const CliResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("classify") != std::string::npos);
}
