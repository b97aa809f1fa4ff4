// Exact solvers: standard NIM over one pile and the full NIM-with-cash
// table, built bottom-up in the stone count.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nimcash/game_core.hpp"

namespace nimcash {

/// Largest stone count for which a full cash table is built unless the
/// caller raises it.
inline constexpr Amount kDefaultMaxStones = 2048;

/// Winner of standard NIM(A; n) for 0 <= n <= n_max.
class StandardTable {
 public:
  StandardTable(const MoveSet& moves, Amount n_max);

  Winner winner(Amount n) const;
  Amount n_max() const noexcept { return static_cast<Amount>(wins_.size()) - 1; }

 private:
  std::vector<bool> wins_;
};

Winner solve_standard(const MoveSet& moves, Amount n);

/// Dense winner table over every (n, d, e) with 0 <= d, e <= n <= n_max.
/// Funds above n are equivalent to n, so queries are clamped before lookup.
/// One bit per state; state (n, d, e) lives at n(n+1)(2n+1)/6 + d(n+1) + e.
class CashTable {
 public:
  /// Throws ResourceLimit if n_max exceeds `limit`.
  CashTable(MoveSet moves, Amount n_max, Amount limit = kDefaultMaxStones);

  const MoveSet& moves() const noexcept { return moves_; }
  Amount n_max() const noexcept { return n_max_; }
  std::uint64_t state_count() const noexcept;

  /// Throws OutOfRange if n > n_max.
  Winner winner(Amount n, Amount d, Amount e) const;
  Winner winner(const CashState& state) const;

  /// All legal a whose successor is lost for the player moving there.
  std::vector<Amount> winning_moves(const CashState& state) const;

 private:
  bool mover_wins(Amount n, Amount d, Amount e) const noexcept;
  MoveSet moves_;
  Amount n_max_;
  std::vector<std::uint64_t> bits_;
};

struct SolveResult {
  Winner winner = Winner::Opponent;
  std::vector<Amount> winning_moves;  // empty iff winner == Opponent
  Amount plies_bound = 0;             // floor(n / a1): no game lasts longer
};

/// Builds a table sized to the query. Throws ResourceLimit if n > limit.
SolveResult solve_cash(const MoveSet& moves, const CashState& state,
                       Amount limit = kDefaultMaxStones);
SolveResult solve_cash(const CashTable& table, const CashState& state);

/// Mover wins (n; d, UF).
bool wins_normally(const MoveSet& moves, Amount n, Funds d, Amount limit = kDefaultMaxStones);

/// Does `who` win when forced to remove a1 on each of their turns while the
/// other player moves freely? The constrained player loses as soon as a1 is
/// unaffordable or exceeds the pile.
bool wins_miserly(const MoveSet& moves, const CashState& state, Side who,
                  Amount limit = kDefaultMaxStones);

/// Smallest winning move, if the mover wins.
std::optional<Amount> best_move(const MoveSet& moves, const CashState& state,
                                Amount limit = kDefaultMaxStones);
std::optional<Amount> best_move(const CashTable& table, const CashState& state);

struct AuditReport {
  std::uint64_t checked = 0;
  std::vector<std::string> failures;  // first few offending states
  std::uint64_t failure_count = 0;
  bool passed() const noexcept { return failure_count == 0; }
  void fail(std::string what);
};

/// Re-derives every entry from its successors.
AuditReport audit_recursion(const CashTable& table);

/// Mover wins (n;d,e) => mover wins (n;d+1,e); opponent wins (n;d,e) =>
/// opponent wins (n;d,e+1).
AuditReport audit_cash_monotonicity(const CashTable& table);

/// Evaluates states whose funds exceed the pile (up to n + extra) by the raw
/// recursion and compares them with the clamped entry.
AuditReport audit_fund_cap(const CashTable& table, Amount extra);

}  // namespace nimcash
