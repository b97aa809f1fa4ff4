#include "doctest.h"
#include "nimcash/families.hpp"
#include "nimcash/periodicity.hpp"

using namespace nimcash;

namespace {

std::optional<Amount> period_of(std::vector<Amount> values, Amount n_check = 2000) {
  const MoveSet a = MoveSet::create(std::move(values));
  const ThresholdTables t(a, n_check);
  auto cert = detect_cash_period(a, t, 64, n_check);
  if (!cert) return std::nullopt;
  return cert->period();
}

}  // namespace

TEST_CASE("detected periods") {
  CHECK(period_of({1, 4}) == 5);
  CHECK(period_of({1, 5, 6}) == 11);
  CHECK(period_of({1, 4, 5}) == 8);
  CHECK(period_of({1, 3, 4}) == 7);
  CHECK(period_of({1, 2}) == 3);
  CHECK(period_of({3, 5, 6, 10, 11}) == std::nullopt);
}

TEST_CASE("costs use the minus-a convention") {
  const MoveSet a = MoveSet::create({1, 4});
  const ThresholdTables t(a, 60);
  const MoveCosts c = compute_costs(a, t, 13, 1);
  CHECK(c.mover == t.mover(13) - t.opponent(12) - 1);
  CHECK(c.opponent == t.opponent(13) - t.mover(12));
  CHECK_THROWS_AS(compute_costs(a, t, 13, 2), Error);
  CHECK_THROWS_AS(compute_costs(a, t, 3, 4), Error);
}

TEST_CASE("corresponding states and steps") {
  const MoveSet a = MoveSet::create({1, 4});
  const ThresholdTables t(a, 400);
  const auto cert = detect_cash_period(a, t, 64, 400);
  REQUIRE(cert);
  const CsTriple cs = corresponding_state(*cert, t, 13, 8, 7);
  CHECK(cs == CsTriple{3, 1, 0});
  CHECK(cs.to_string() == "(3,1,0)");
  CHECK(step_cs(*cert, cs, 1) == CsTriple{2, 0, 1});
  CHECK(step_cs(*cert, cs, 1) == corresponding_state(*cert, t, 12, 7, 7));

  const AuditReport r = audit_cs_commutation(*cert, t);
  CHECK(r.passed());
  CHECK(r.checked > 0);
}

TEST_CASE("closure check accepts the family rule and rejects a tampered one") {
  const Family fam = Family::create(FamilyKind::OneL, 4);
  const PeriodCertificate cert = fam.certificate();
  CHECK(verify_solution_set(cert, fam.solution_set(), 40).passed());

  const SolutionSet everything([](const CsTriple& t) { return t.in_box(); }, "all triples");
  const VerificationReport bad = verify_solution_set(cert, everything, 10);
  CHECK_FALSE(bad.passed());
  REQUIRE_FALSE(bad.violations.empty());
  CHECK(bad.violations.front().member_clause);

  const PeriodCertificate shifted = cert.with_costs([&](Amount i, Amount m) {
    MoveCosts c = cert.costs(i, m);
    c.mover += 1;
    return c;
  });
  CHECK_FALSE(verify_solution_set(shifted, fam.solution_set(), 20).passed());
}

TEST_CASE("induced labels are consistent and closed for {1,4}") {
  const MoveSet a = MoveSet::create({1, 4});
  const ThresholdTables t(a, 400);
  const auto cert = detect_cash_period(a, t, 64, 400);
  REQUIRE(cert);
  const CashTable table(a, 60);
  const InducedCandidate induced = induce_candidate(t, *cert, table);
  CHECK(induced.consistent);
  CHECK(induced.critical_states > 0);
  CHECK(verify_induced(*cert, induced, 10).passed());

  const Family fam = Family::create(FamilyKind::OneL, 4);
  for (const auto& [triple, w] : induced.labels) {
    CHECK(fam.solution_set().contains(triple) == (w == Winner::Mover));
  }
}

TEST_CASE("critical winner") {
  const MoveSet a = MoveSet::create({1, 4});
  const ThresholdTables t(a, 100);
  const Family fam = Family::create(FamilyKind::OneL, 4);
  const PeriodCertificate cert = fam.certificate();
  CHECK(critical_winner(cert, fam.solution_set(), t, 13, 8, 7) == Winner::Mover);
  CHECK_THROWS_AS(critical_winner(cert, fam.solution_set(), t, 10, 20, 20), Error);
}
