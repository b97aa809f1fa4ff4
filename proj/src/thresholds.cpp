#include "nimcash/thresholds.hpp"

#include <algorithm>
#include <limits>

namespace nimcash {

ThresholdTables::ThresholdTables(const MoveSet& moves, Amount n_max)
    : a1_(moves.min()), standard_(moves, n_max) {
  if (n_max < 0) throw Error(ErrorKind::BadParams, "n_max must be non-negative");
  const auto size = static_cast<std::size_t>(n_max + 1);
  mover_.assign(size, 0);
  opponent_.assign(size, 0);
  witness_.assign(size, 0);
  constexpr Amount kNone = std::numeric_limits<Amount>::max();
  for (Amount n = a1_; n <= n_max; ++n) {
    const auto at = [](const std::vector<Amount>& v, Amount i) { return v[static_cast<std::size_t>(i)]; };
    // the largest mover threshold among successors is what the opponent
    // needs in either case
    Amount best_successor = 0;
    for (Amount a : moves.values()) {
      if (a > n) break;
      best_successor = std::max(best_successor, at(mover_, n - a));
    }
    Amount least = kNone;
    Amount witness = 0;
    const bool winning = standard_.winner(n) == Winner::Mover;
    for (Amount a : moves.values()) {
      if (a > n) break;
      const bool eligible = winning ? standard_.winner(n - a) == Winner::Opponent
                                    : at(mover_, n - a) == best_successor;
      if (eligible && at(opponent_, n - a) + a < least) {
        least = at(opponent_, n - a) + a;
        witness = a;
      }
    }
    const auto i = static_cast<std::size_t>(n);
    mover_[i] = least;
    opponent_[i] = best_successor;
    witness_[i] = witness;
  }
}

ThresholdTables build_thresholds(const MoveSet& moves, Amount n_max) {
  return ThresholdTables(moves, n_max);
}

void ThresholdTables::check(Amount n) const {
  if (n < 0 || n > n_max()) {
    throw Error(ErrorKind::OutOfRange, "thresholds cover n <= " + std::to_string(n_max()) +
                                           ", got " + std::to_string(n));
  }
}

Amount ThresholdTables::mover(Amount n) const {
  check(n);
  return mover_[static_cast<std::size_t>(n)];
}

Amount ThresholdTables::opponent(Amount n) const {
  check(n);
  return opponent_[static_cast<std::size_t>(n)];
}

Winner ThresholdTables::standard(Amount n) const {
  check(n);
  return standard_.winner(n);
}

std::optional<Amount> ThresholdTables::mover_witness(Amount n) const {
  check(n);
  Amount w = witness_[static_cast<std::size_t>(n)];
  if (w == 0) return std::nullopt;
  return w;
}

PoorThresholds g_values(Amount a1, Amount n) {
  if (n < 0 || a1 < 1) throw Error(ErrorKind::BadParams, "need n >= 0 and a1 >= 1");
  const Amount i = n % (2 * a1);
  const Amount half = (n - i) / 2;
  return {half + std::min(i + 1, a1), half + std::max<Amount>(0, i - a1 + 1)};
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::RichI: return "RICH_I";
    case Region::RichII: return "RICH_II";
    case Region::RichBoth: return "RICH_BOTH";
    case Region::PoorI: return "POOR_I";
    case Region::PoorII: return "POOR_II";
    case Region::PoorBoth: return "POOR_BOTH";
    case Region::Critical: return "CRITICAL";
  }
  return "UNKNOWN";
}

bool is_rich(Region r) noexcept {
  return r == Region::RichI || r == Region::RichII || r == Region::RichBoth;
}

bool is_poor(Region r) noexcept {
  return r == Region::PoorI || r == Region::PoorII || r == Region::PoorBoth;
}

Region classify_by(Amount d, Amount e, Amount rich_mover, Amount rich_opponent,
                   PoorThresholds poor) {
  const bool mover_rich = d >= rich_mover;
  const bool opponent_rich = e >= rich_opponent;
  if (mover_rich && opponent_rich) return Region::RichBoth;
  if (mover_rich) return Region::RichI;
  if (opponent_rich) return Region::RichII;
  const bool mover_poor = d < poor.mover;
  const bool opponent_poor = e < poor.opponent;
  if (mover_poor && opponent_poor) return Region::PoorBoth;
  if (opponent_poor) return Region::PoorI;
  if (mover_poor) return Region::PoorII;
  return Region::Critical;
}

Region classify(const ThresholdTables& tables, Amount n, Amount d, Amount e) {
  if (n > tables.n_max()) {
    throw Error(ErrorKind::OutOfRange, "thresholds cover n <= " + std::to_string(tables.n_max()));
  }
  return classify_by(d, e, tables.mover(n), tables.opponent(n), g_values(tables.a1(), n));
}

Winner rich_winner(Region region, Winner standard) {
  switch (region) {
    case Region::RichI: return Winner::Mover;
    case Region::RichII: return Winner::Opponent;
    case Region::RichBoth: return standard;
    default:
      throw Error(ErrorKind::WrongRegion,
                  "rich rule does not apply to " + std::string(to_string(region)));
  }
}

Winner rich_winner(const ThresholdTables& tables, Amount n, Amount d, Amount e) {
  return rich_winner(classify(tables, n, d, e), tables.standard(n));
}

Winner poor_winner(Region region, Amount a1, Amount d, Amount e) {
  switch (region) {
    case Region::PoorI: return Winner::Mover;
    case Region::PoorII: return Winner::Opponent;
    case Region::PoorBoth: return d / a1 > e / a1 ? Winner::Mover : Winner::Opponent;
    default:
      throw Error(ErrorKind::WrongRegion,
                  "poor rule does not apply to " + std::string(to_string(region)));
  }
}

Winner poor_winner(Amount a1, Amount n, Amount d, Amount e) {
  const PoorThresholds g = g_values(a1, n);
  const bool mover_poor = d < g.mover;
  const bool opponent_poor = e < g.opponent;
  Region region = Region::Critical;
  if (mover_poor && opponent_poor) region = Region::PoorBoth;
  else if (opponent_poor) region = Region::PoorI;
  else if (mover_poor) region = Region::PoorII;
  return poor_winner(region, a1, d, e);
}

AuditReport audit_poor_lemmas(const ThresholdTables& tables) {
  AuditReport report;
  const Amount a1 = tables.a1();
  const auto where = [](const char* what, Amount n) {
    return std::string(what) + " at n=" + std::to_string(n);
  };
  for (Amount n = 0; n <= tables.n_max(); ++n) {
    const PoorThresholds g = g_values(a1, n);
    ++report.checked;
    for (Amount k = 1; k <= 3; ++k) {
      const PoorThresholds shifted = g_values(a1, n + 2 * k * a1);
      if (shifted.mover != g.mover + k * a1 || shifted.opponent != g.opponent + k * a1) {
        report.fail(where("shift identity", n));
      }
    }
    // every a >= a1 is checked, not just the members of A
    for (Amount a = a1; a <= n; ++a) {
      if (g.mover - a > g_values(a1, n - a).opponent) report.fail(where("g_mover(n)-a bound", n));
    }
    if (n >= a1 && g.opponent != g_values(a1, n - a1).mover) {
      report.fail(where("g_opponent(n) == g_mover(n-a1)", n));
    }
    // not-poor propagation, as stated over d/e just above the thresholds
    if (n >= a1 && g.mover + 1 - a1 <= g_values(a1, n - a1).opponent) {
      report.fail(where("mover not-poor propagation", n));
    }
    for (Amount a = a1; a <= n; ++a) {
      if (g.opponent + 1 <= g_values(a1, n - a).mover) {
        report.fail(where("opponent not-poor propagation", n));
      }
    }
    // floor-quotient coverage, enumerated over a window of budgets
    for (Amount d = 0; d <= n + 2 * a1; ++d) {
      for (Amount e = 0; e <= n + 2 * a1; ++e) {
        if (e < g.opponent && d >= g.mover && !(d / a1 > e / a1)) {
          report.fail(where("coverage part 1", n));
        }
        if (d < g.mover && e >= g.opponent && !(d / a1 <= e / a1)) {
          report.fail(where("coverage part 2", n));
        }
      }
    }
  }
  return report;
}

std::vector<Amount> threshold_order_exceptions(const ThresholdTables& tables) {
  std::vector<Amount> out;
  for (Amount n = 0; n <= tables.n_max(); ++n) {
    const PoorThresholds g = g_values(tables.a1(), n);
    if (g.mover > tables.mover(n) || g.opponent > tables.opponent(n)) out.push_back(n);
  }
  return out;
}

AuditReport audit_rich_semantics(const ThresholdTables& tables, const CashTable& table) {
  AuditReport report;
  const Amount top = std::min(tables.n_max(), table.n_max());
  for (Amount n = 0; n <= top; ++n) {
    const Amount fm = tables.mover(n);
    const Amount fo = tables.opponent(n);
    ++report.checked;
    if (tables.standard(n) == Winner::Mover) {
      Amount least = n + 1;
      for (Amount d = 0; d <= n; ++d) {
        if (table.winner(n, d, n) == Winner::Mover) {
          least = d;
          break;
        }
      }
      if (least != fm) {
        report.fail("least cash " + std::to_string(least) + " != threshold " +
                    std::to_string(fm) + " at n=" + std::to_string(n));
      }
    }
    if (fo >= 1 && table.winner(n, fm, fo - 1) != Winner::Mover) {
      report.fail("(f_mover, f_opponent-1) not a mover win at n=" + std::to_string(n));
    }
    if (fm >= 1 && table.winner(n, fm - 1, fo) != Winner::Opponent) {
      report.fail("(f_mover-1, f_opponent) not an opponent win at n=" + std::to_string(n));
    }
  }
  return report;
}

}  // namespace nimcash
