// Randomised checks with small hand-rolled generators. Seeds are fixed so
// failures reproduce.
#include <algorithm>
#include <random>
#include <set>

#include "../support/brute_force.hpp"
#include "doctest.h"
#include "nimcash/engine.hpp"
#include "nimcash/families.hpp"
#include "nimcash/oracle.hpp"
#include "nimcash/periodicity.hpp"
#include "nimcash/thresholds.hpp"

using namespace nimcash;

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  Amount between(Amount lo, Amount hi) {
    return std::uniform_int_distribution<Amount>(lo, hi)(rng_);
  }

  std::vector<Amount> move_set(Amount max_value, std::size_t max_size) {
    std::set<Amount> values;
    const auto size = static_cast<std::size_t>(between(1, static_cast<Amount>(max_size)));
    while (values.size() < size) values.insert(between(1, max_value));
    std::vector<Amount> out(values.begin(), values.end());
    std::shuffle(out.begin(), out.end(), rng_);
    return out;
  }

  Funds funds(Amount hi) {
    if (between(0, 5) == 0) return Funds::unlimited();
    return Funds::finite(between(0, hi));
  }

 private:
  std::mt19937_64 rng_;
};

brute::Cash cash(const Funds& f) {
  return f.is_unlimited() ? brute::Cash() : brute::Cash(f.dollars());
}

std::vector<brute::Int> as_brute(const MoveSet& a) { return {a.values().begin(), a.values().end()}; }

}  // namespace

TEST_CASE("random sets: engine and table agree with the reference, including unlimited funds") {
  Gen gen(0x5eed01);
  for (int trial = 0; trial < 40; ++trial) {
    const MoveSet a = MoveSet::create(gen.move_set(7, 4));
    brute::Solver ref(as_brute(a));
    const Engine engine(a);
    const CashTable table(a, 30);
    for (int q = 0; q < 150; ++q) {
      const Amount n = gen.between(0, 30);
      const CashState s{n, gen.funds(n + 5), gen.funds(n + 5)};
      const bool expected = ref.mover_wins(n, cash(s.mover), cash(s.opponent));
      REQUIRE_MESSAGE((engine.decide(s).winner == Winner::Mover) == expected,
                      a.to_string() << ' ' << s.to_string());
      REQUIRE((table.winner(s) == Winner::Mover) == expected);
      REQUIRE(table.winning_moves(s) == ref.winning_moves(n, cash(s.mover), cash(s.opponent)));
    }
  }
}

TEST_CASE("random moves conserve stones and charge exactly the move") {
  Gen gen(0x5eed02);
  for (int trial = 0; trial < 500; ++trial) {
    const MoveSet a = MoveSet::create(gen.move_set(9, 4));
    const Amount n = gen.between(0, 40);
    const CashState s{n, gen.funds(40), gen.funds(40)};
    for (Amount m : legal_moves(a, s)) {
      const CashState t = apply_move(a, s, m);
      CHECK(t.stones == n - m);
      CHECK(t.mover == s.opponent);
      if (!s.mover.is_unlimited()) CHECK(t.opponent.dollars() == s.mover.dollars() - m);
    }
    CHECK(is_terminal_loss(a, s) == legal_moves(a, s).empty());
  }
}

TEST_CASE("random sets: classification winners agree with the table outside the critical region") {
  Gen gen(0x5eed03);
  for (int trial = 0; trial < 25; ++trial) {
    const MoveSet a = MoveSet::create(gen.move_set(8, 4));
    const ThresholdTables t(a, 45);
    const CashTable table(a, 45);
    for (Amount n = 0; n <= 45; ++n) {
      for (Amount d = 0; d <= n; ++d) {
        for (Amount e = 0; e <= n; ++e) {
          const Region r = classify(t, n, d, e);
          if (r == Region::Critical) continue;
          const Winner w = is_rich(r) ? rich_winner(r, t.standard(n)) : poor_winner(r, a.min(), d, e);
          REQUIRE_MESSAGE(w == table.winner(n, d, e), a.to_string() << ' ' << CashState::of(n, d, e).to_string());
        }
      }
    }
    CHECK(audit_poor_lemmas(t).passed());
    CHECK(audit_rich_semantics(t, table).passed());
  }
}

TEST_CASE("random sets: detected periods make the CS step commute") {
  Gen gen(0x5eed04);
  int certified = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Amount> values = gen.move_set(9, 3);
    values.push_back(1);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const MoveSet a = MoveSet::create(values);
    const ThresholdTables t(a, 600);
    const auto cert = detect_cash_period(a, t, 40, 600);
    if (!cert) continue;
    ++certified;
    const ThresholdTables small(a, 150);
    CHECK_MESSAGE(audit_cs_commutation(*cert, small).passed(), a.to_string());
  }
  CHECK(certified > 10);
}

TEST_CASE("random states: miserly wins agree with a direct recursion") {
  // direct recursion: the constrained side must take a1 when on move
  struct Miser {
    std::vector<Amount> moves;
    std::map<std::tuple<Amount, Amount, Amount, bool>, bool> memo;
    // true iff the constrained player wins; `constrained_moves` says who is on move
    bool wins(Amount n, Amount d, Amount e, bool constrained_moves) {
      const auto key = std::make_tuple(n, d, e, constrained_moves);
      if (auto it = memo.find(key); it != memo.end()) return it->second;
      const Amount a1 = moves.front();
      bool result;
      if (constrained_moves) {
        result = a1 <= n && a1 <= d && wins(n - a1, e, d - a1, false);
      } else {
        result = true;
        for (Amount a : moves) {
          if (a <= n && a <= d && !wins(n - a, e, d - a, true)) result = false;
        }
      }
      memo.emplace(key, result);
      return result;
    }
  };
  Gen gen(0x5eed05);
  for (int trial = 0; trial < 30; ++trial) {
    const MoveSet a = MoveSet::create(gen.move_set(6, 3));
    Miser m{as_brute(a), {}};
    for (int q = 0; q < 40; ++q) {
      const Amount n = gen.between(0, 25);
      const Amount d = gen.between(0, n), e = gen.between(0, n);
      const CashState s = CashState::of(n, d, e);
      CHECK(wins_miserly(a, s, Side::Mover) == m.wins(n, d, e, true));
      CHECK(wins_miserly(a, s, Side::Opponent) == m.wins(n, d, e, false));
    }
  }
}

TEST_CASE("random family states: closed-form pipeline agrees with the table") {
  Gen gen(0x5eed06);
  const std::vector<std::pair<FamilyKind, Amount>> kinds = {
      {FamilyKind::OneL, 2},     {FamilyKind::OneL, 8},      {FamilyKind::OneLLOdd, 3},
      {FamilyKind::OneLLOdd, 9}, {FamilyKind::OneLLEven, 2}, {FamilyKind::OneLLEven, 8}};
  for (const auto& [kind, L] : kinds) {
    const Family fam = Family::create(kind, L);
    const CashTable table(fam.moves(), 120);
    for (int q = 0; q < 3000; ++q) {
      const Amount n = gen.between(0, 120);
      const Amount d = gen.between(0, n + 3), e = gen.between(0, n + 3);
      REQUIRE_MESSAGE(fam.win(n, d, e) == table.winner(n, d, e),
                      to_string(kind) << L << ' ' << CashState::of(n, d, e).to_string());
    }
  }
}
