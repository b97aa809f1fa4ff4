#include "../support/brute_force.hpp"
#include "doctest.h"
#include "nimcash/thresholds.hpp"

using namespace nimcash;

TEST_CASE("rich thresholds for {1,4}") {
  const ThresholdTables t(MoveSet::create({1, 4}), 40);
  CHECK(t.mover(13) == 10);
  CHECK(t.opponent(13) == 8);
  CHECK(t.opponent(9) == 6);
  CHECK(t.mover(5) == 3);
  CHECK(t.opponent(5) == 4);
  CHECK(t.mover(0) == 0);
  CHECK(t.opponent(0) == 0);
  CHECK_THROWS_AS(t.mover(41), Error);
}

TEST_CASE("rich thresholds for {1,3,4} and {3,5,6,10,11}") {
  const ThresholdTables t(MoveSet::create({1, 3, 4}), 20);
  CHECK(t.mover(14) == 10);
  CHECK(t.opponent(14) == 10);
  const ThresholdTables u(MoveSet::create({3, 5, 6, 10, 11}), 80);
  CHECK(u.mover(65) == 43);
  CHECK(u.opponent(68) == 43);
  for (Amount n = 0; n < 3; ++n) CHECK(u.mover(n) == 0);
}

TEST_CASE("mover threshold is the least winning cash against unlimited funds") {
  for (std::vector<Amount> values : {std::vector<Amount>{1, 4}, {1, 3, 4}, {2, 5}, {3, 5, 6}}) {
    const ThresholdTables t(MoveSet::create(values), 30);
    brute::Solver ref(values);
    for (Amount n = 0; n <= 30; ++n) {
      if (t.standard(n) != Winner::Mover) continue;
      CHECK_MESSAGE(t.mover(n) == ref.least_cash(n), "n=" << n);
    }
  }
}

TEST_CASE("poor thresholds") {
  CHECK(g_values(1, 5) == PoorThresholds{3, 3});
  CHECK(g_values(1, 13) == PoorThresholds{7, 7});
  CHECK(g_values(1, 9) == PoorThresholds{5, 5});
  CHECK(g_values(3, 0) == PoorThresholds{1, 0});
  CHECK(g_values(3, 4) == PoorThresholds{3, 2});
  CHECK_THROWS_AS(g_values(0, 4), Error);
}

TEST_CASE("classification and regime winners") {
  const MoveSet a = MoveSet::create({1, 4});
  const ThresholdTables t(a, 40);
  CHECK(classify(t, 13, 8, 7) == Region::Critical);
  CHECK(classify(t, 10, 20, 20) == Region::RichBoth);
  CHECK(rich_winner(t, 10, 20, 20) == Winner::Opponent);
  CHECK(classify(t, 13, 12, 2) == Region::RichI);
  CHECK(rich_winner(t, 13, 12, 2) == Winner::Mover);
  // rich cases are tested first, so a poor mover facing a rich opponent
  // is a rich case
  CHECK(classify(t, 5, 0, 9) == Region::RichII);
  CHECK(classify(t, 9, 3, 2) == Region::PoorBoth);
  CHECK(poor_winner(1, 9, 3, 2) == Winner::Mover);
  CHECK_THROWS_AS(rich_winner(t, 13, 8, 7), Error);
  CHECK_THROWS_AS(poor_winner(Region::Critical, 1, 0, 0), Error);

  const ThresholdTables u(MoveSet::create({1, 3, 4}), 20);
  CHECK(classify(u, 14, 14, 10) == Region::RichBoth);
  CHECK(rich_winner(u, 14, 14, 10) == Winner::Opponent);
  CHECK(to_string(Region::PoorBoth) == "POOR_BOTH");
}

TEST_CASE("poor-threshold identities") {
  for (Amount a1 : {1, 2, 3}) {
    std::vector<Amount> values{a1, a1 + 2, a1 + 3};
    const ThresholdTables t(MoveSet::create(values), 120);
    const AuditReport r = audit_poor_lemmas(t);
    CHECK(r.passed());
    CHECK(r.checked == 121);
  }
}

TEST_CASE("poor thresholds stay below rich ones except on small piles") {
  for (std::vector<Amount> values : {std::vector<Amount>{1, 4}, {1, 6}, {1, 5, 6}, {1, 4, 5},
                                     {1, 3, 4}, {3, 5, 6, 10, 11}, {2, 3}, {2, 5, 7}}) {
    const MoveSet a = MoveSet::create(values);
    const ThresholdTables t(a, 1000);
    const auto exceptions = threshold_order_exceptions(t);
    CHECK_FALSE(exceptions.empty());
    CHECK_MESSAGE(exceptions.back() < 2 * a.max() + a.min(), a.to_string());
  }
}

TEST_CASE("rich threshold semantics against the table") {
  for (std::vector<Amount> values : {std::vector<Amount>{1, 6}, {1, 4, 5}, {3, 5, 6, 10, 11}}) {
    const MoveSet a = MoveSet::create(values);
    const ThresholdTables t(a, 60);
    const CashTable table(a, 60);
    CHECK(audit_rich_semantics(t, table).passed());
  }
}
