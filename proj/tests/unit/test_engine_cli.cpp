#include <sstream>

#include "../support/brute_force.hpp"
#include "doctest.h"
#include "nimcash/cli.hpp"
#include "nimcash/engine.hpp"
#include "nimcash/output.hpp"

using namespace nimcash;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Run r;
  r.code = run(args, in, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

bool has_line(const std::string& s, const std::string& line) {
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("engine bases") {
  const Engine fam(MoveSet::create({1, 4}));
  REQUIRE(fam.family());
  const Decision d = fam.decide(13, 8, 7);
  CHECK(d.basis == Basis::CriticalSolutionSet);
  CHECK(d.winner == Winner::Mover);
  CHECK(d.cs == CsTriple{3, 1, 0});
  CHECK(fam.decide(10, 20, 20).basis == Basis::Rich);
  CHECK(fam.decide(9, 3, 2).basis == Basis::Poor);

  const Engine generic(MoveSet::create({3, 5, 6, 10, 11}));
  CHECK_FALSE(generic.family());
  const Decision g = generic.decide(20, 2, 9);
  CHECK(g.winner == Winner::Opponent);

  const Engine small(MoveSet::create({2, 3}), 30);
  bool saw_oracle = false;
  for (Amount n = 0; n <= 30 && !saw_oracle; ++n) {
    for (Amount d2 = 0; d2 <= n; ++d2) {
      if (small.decide(n, d2, d2).basis == Basis::Oracle) saw_oracle = true;
    }
  }
  CHECK(saw_oracle);
}

TEST_CASE("engine matches the reference and reports winning moves") {
  for (std::vector<Amount> values : {std::vector<Amount>{1, 3, 4}, {2, 3}, {1, 6}}) {
    const Engine engine(MoveSet::create(values));
    brute::Solver ref(values);
    for (Amount n = 0; n <= 20; ++n) {
      for (Amount d = 0; d <= n; ++d) {
        for (Amount e = 0; e <= n; ++e) {
          const CashState s = CashState::of(n, d, e);
          REQUIRE((engine.decide(s).winner == Winner::Mover) == ref.mover_wins(n, d, e));
          REQUIRE(engine.winning_moves(s) == ref.winning_moves(n, d, e));
        }
      }
    }
  }
}

TEST_CASE("engine resource bound") {
  const Engine engine(MoveSet::create({2, 3}), 16);
  bool limited = false;
  for (Amount d = 0; d <= 40 && !limited; ++d) {
    try {
      engine.decide(40, d, d);
    } catch (const Error& e) {
      limited = e.kind() == ErrorKind::ResourceLimit;
    }
  }
  CHECK(limited);
}

TEST_CASE("records serialise deterministically") {
  const Engine engine(MoveSet::create({1, 4}));
  std::vector<OutputRecord> rows{make_record(engine, CashState::of(13, 8, 7)),
                                 make_record(engine, CashState::of(10, 20, 20))};
  std::ostringstream csv;
  write_csv(csv, rows);
  CHECK(csv.str() ==
        "n,d,e,region,winner,winning_moves,cs\n"
        "13,8,7,CRITICAL,I,1,\"(3,1,0)\"\n"
        "10,10,10,RICH_BOTH,II,,\n");
  std::ostringstream json;
  write_json(json, rows);
  CHECK(json.str().find("\"cs\": null") != std::string::npos);
  CHECK(json.str().find("\"region\": \"CRITICAL\"") != std::string::npos);
}

TEST_CASE("solve command") {
  CHECK(first_line(invoke({"solve", "-A", "1,3,4", "-n", "14", "-d", "9", "-e", "9"}).out)
            .rfind("Player I wins", 0) == 0);
  CHECK(first_line(invoke({"solve", "-A", "1,3,4", "-n", "14", "-d", "UF", "-e", "10"}).out) ==
        "Player II wins (rich regime)");
  CHECK(first_line(invoke({"solve", "-A", "1,3,4", "-n", "0", "-d", "5", "-e", "5"}).out)
            .rfind("Player II wins", 0) == 0);
  const Run explained = invoke({"solve", "-A", "3,5,6,10,11", "-n", "20", "-d", "2", "-e", "9", "--explain"});
  CHECK(explained.code == 0);
  CHECK(explained.out.find("decided by:") != std::string::npos);

  const Run bad = invoke({"solve", "-A", "1,1", "-n", "3"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(invoke({"solve", "-A", "1,x", "-n", "3"}).code == 2);
  CHECK(invoke({"solve", "-A", "1,3", "-n", "3", "-d", "rich"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
}

TEST_CASE("table command") {
  const Run t = invoke({"table", "-A", "1,4", "--n-max", "20"});
  CHECK(t.code == 0);
  CHECK(has_line(t.out, "13,I,10,8,7,7"));
  CHECK(invoke({"table", "-A", "1,4", "--n-max", "0"}).out == "n,standard,fI,fII,gI,gII\n");
  const Run j = invoke({"table", "-A", "1,4", "--n-max", "3", "--format", "json"});
  CHECK(j.out.front() == '[');
  CHECK(invoke({"table", "-A", "1,4", "--n-max", "3"}).out ==
        invoke({"table", "-A", "1,4", "--n-max", "3"}).out);
  const Run cube = invoke({"table", "-A", "1,4", "--n-max", "13", "--d-max", "8", "--e-max", "7"});
  CHECK(has_line(cube.out, "13,8,7,CRITICAL,I,1,\"(3,1,0)\""));
  const Run limited = invoke({"--max-n", "10", "table", "-A", "2,3", "--n-max", "30", "--d-max", "30"});
  CHECK(limited.code == 2);
}

TEST_CASE("period command") {
  CHECK(first_line(invoke({"period", "-A", "1,4"}).out) == "m=5");
  CHECK(first_line(invoke({"period", "-A", "1,4,5"}).out) == "m=8");
  CHECK(first_line(invoke({"period", "-A", "3,5,6,10,11", "--m-max", "64"}).out) ==
        "none found (checked m ≤ 64, n ≤ 2000)");
}

TEST_CASE("verify command") {
  const Run ok = invoke({"verify", "--family", "oneL", "4"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  CHECK(invoke({"verify", "--family", "oneLL-odd", "5"}).code == 0);
  const Run printed = invoke({"verify", "--family", "oneLL-odd", "5", "--rule", "printed"});
  CHECK(printed.code == 1);
  CHECK(printed.out.find("first violation") != std::string::npos);
  CHECK(invoke({"verify", "--set", "1,4", "--oracle-box", "40"}).code == 0);
  CHECK(invoke({"verify", "--family", "oneL", "5"}).code == 2);
  CHECK(invoke({"verify"}).code == 2);
}

TEST_CASE("conjecture command") {
  const Run r = invoke({"conjecture", "2", "4"});
  CHECK(r.code == 0);
  CHECK(r.out.find("theta=") != std::string::npos);
  CHECK(invoke({"conjecture", "1", "1"}).code == 0);
}

TEST_CASE("play command") {
  // the engine as Player II keeps taking one stone and wins
  const Run r = invoke({"play", "-A", "1,3,4", "-n", "14", "-d", "4", "-e", "4", "--human", "I"},
                       "1\n1\n1\n1\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("Player II removes 3") == std::string::npos);
  CHECK(r.out.find("Player II wins") != std::string::npos);

  const Run resign = invoke({"play", "-A", "1,3,4", "-n", "14", "-d", "9", "-e", "9"}, "resign\n");
  CHECK(resign.code == 0);
  CHECK(resign.out.find("resigns") != std::string::npos);

  const Run retry = invoke({"play", "-A", "1,3,4", "-n", "5", "-d", "5", "-e", "5"}, "2\nfoo\n1\nresign\n");
  CHECK(retry.out.find("illegal move '2'") != std::string::npos);
  CHECK(retry.out.find("illegal move 'foo'") != std::string::npos);

  // Player I follows the winning line from (14;9,9); the engine answers
  const Run line = invoke({"play", "-A", "1,3,4", "-n", "14", "-d", "9", "-e", "9", "--human", "I"},
                          "1\n1\n1\n1\n1\n1\n1\n1\n1\n");
  CHECK(line.out.find("(13;9,8) Player II to move") != std::string::npos);
}

TEST_CASE("congruence table command") {
  const Run r = invoke({"appendix", "--k-max", "12"});
  CHECK(r.out.find("formulas match") != std::string::npos);
  CHECK((r.code == 0) == (r.out.find("\nPASS\n") != std::string::npos));
  CHECK(invoke({"appendix", "--k-max", "3"}).code == 2);
}
