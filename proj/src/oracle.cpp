#include "nimcash/oracle.hpp"

#include <algorithm>
#include <sstream>

namespace nimcash {
namespace {

std::uint64_t layer_offset(Amount n) {
  auto k = static_cast<std::uint64_t>(n);
  return k * (k + 1) * (2 * k + 1) / 6;
}

std::uint64_t cube_index(Amount n, Amount d, Amount e) {
  return layer_offset(n) + static_cast<std::uint64_t>(d) * static_cast<std::uint64_t>(n + 1) +
         static_cast<std::uint64_t>(e);
}

/// Bit cube with the same (n, d <= n, e <= n) layout as CashTable.
class BitCube {
 public:
  explicit BitCube(Amount n_max) : words_((layer_offset(n_max + 1) + 63) / 64, 0) {}

  bool get(Amount n, Amount d, Amount e) const {
    std::uint64_t i = cube_index(n, std::min(d, n), std::min(e, n));
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }
  void set(Amount n, Amount d, Amount e) {
    std::uint64_t i = cube_index(n, d, e);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  std::vector<std::uint64_t> release() && { return std::move(words_); }

 private:
  std::vector<std::uint64_t> words_;
};

void check_limit(Amount n, Amount limit) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "negative stone count");
  if (n > limit) {
    throw Error(ErrorKind::ResourceLimit, "n = " + std::to_string(n) +
                                              " exceeds the cash table bound " +
                                              std::to_string(limit));
  }
}

}  // namespace

StandardTable::StandardTable(const MoveSet& moves, Amount n_max)
    : wins_(static_cast<std::size_t>(std::max<Amount>(n_max, 0) + 1), false) {
  for (Amount n = 0; n <= n_max; ++n) {
    for (Amount a : moves.values()) {
      if (a > n) break;
      if (!wins_[static_cast<std::size_t>(n - a)]) {
        wins_[static_cast<std::size_t>(n)] = true;
        break;
      }
    }
  }
}

Winner StandardTable::winner(Amount n) const {
  if (n < 0 || n > n_max()) {
    throw Error(ErrorKind::OutOfRange, "standard table covers n <= " + std::to_string(n_max()));
  }
  return wins_[static_cast<std::size_t>(n)] ? Winner::Mover : Winner::Opponent;
}

Winner solve_standard(const MoveSet& moves, Amount n) { return StandardTable(moves, n).winner(n); }

CashTable::CashTable(MoveSet moves, Amount n_max, Amount limit)
    : moves_(std::move(moves)), n_max_(n_max) {
  check_limit(n_max, limit);
  BitCube cube(n_max);
  const auto values = moves_.values();
  for (Amount n = 0; n <= n_max; ++n) {
    for (Amount d = 0; d <= n; ++d) {
      for (Amount e = 0; e <= n; ++e) {
        for (Amount a : values) {
          if (a > d || a > n) break;
          // successor (n - a; e, d - a), read clamped
          if (!cube.get(n - a, e, d - a)) {
            cube.set(n, d, e);
            break;
          }
        }
      }
    }
  }
  bits_ = std::move(cube).release();
}

std::uint64_t CashTable::state_count() const noexcept { return layer_offset(n_max_ + 1); }

bool CashTable::mover_wins(Amount n, Amount d, Amount e) const noexcept {
  std::uint64_t i = cube_index(n, std::min(d, n), std::min(e, n));
  return (bits_[i >> 6] >> (i & 63)) & 1U;
}

Winner CashTable::winner(Amount n, Amount d, Amount e) const {
  if (n < 0 || n > n_max_) {
    throw Error(ErrorKind::OutOfRange, "cash table covers n <= " + std::to_string(n_max_) +
                                           ", got " + std::to_string(n));
  }
  if (d < 0 || e < 0) throw Error(ErrorKind::BadParams, "funds must be non-negative");
  return mover_wins(n, d, e) ? Winner::Mover : Winner::Opponent;
}

Winner CashTable::winner(const CashState& state) const {
  CashState s = state.clamped();
  return winner(s.stones, s.mover.dollars(), s.opponent.dollars());
}

std::vector<Amount> CashTable::winning_moves(const CashState& state) const {
  std::vector<Amount> out;
  for (Amount a : legal_moves(moves_, state)) {
    if (winner(apply_move(moves_, state, a)) == Winner::Opponent) out.push_back(a);
  }
  return out;
}

SolveResult solve_cash(const CashTable& table, const CashState& state) {
  SolveResult result;
  result.winning_moves = table.winning_moves(state);
  result.winner = result.winning_moves.empty() ? Winner::Opponent : Winner::Mover;
  result.plies_bound = state.stones / table.moves().min();
  return result;
}

SolveResult solve_cash(const MoveSet& moves, const CashState& state, Amount limit) {
  check_limit(state.stones, limit);
  return solve_cash(CashTable(moves, state.stones, limit), state);
}

bool wins_normally(const MoveSet& moves, Amount n, Funds d, Amount limit) {
  return solve_cash(moves, CashState{n, d, Funds::unlimited()}, limit).winner == Winner::Mover;
}

bool wins_miserly(const MoveSet& moves, const CashState& state, Side who, Amount limit) {
  const Amount top = state.stones;
  check_limit(top, limit);
  const Amount a1 = moves.min();
  // constrained[n,d,e]: the constrained player moves with d, the other has e.
  // free[n,d,e]: the free player moves with d, the constrained one has e.
  // A set bit means the constrained player wins.
  BitCube constrained(top);
  BitCube free(top);
  for (Amount n = 0; n <= top; ++n) {
    for (Amount d = 0; d <= n; ++d) {
      for (Amount e = 0; e <= n; ++e) {
        if (a1 <= n && a1 <= d && free.get(n - a1, e, d - a1)) constrained.set(n, d, e);
        bool all_replies_lose = true;
        for (Amount a : moves.values()) {
          if (a > n || a > d) break;
          if (!constrained.get(n - a, e, d - a)) {
            all_replies_lose = false;
            break;
          }
        }
        if (all_replies_lose) free.set(n, d, e);
      }
    }
  }
  CashState s = state.clamped();
  const BitCube& cube = who == Side::Mover ? constrained : free;
  return cube.get(s.stones, s.mover.dollars(), s.opponent.dollars());
}

std::optional<Amount> best_move(const CashTable& table, const CashState& state) {
  auto moves = table.winning_moves(state);
  if (moves.empty()) return std::nullopt;
  return moves.front();
}

std::optional<Amount> best_move(const MoveSet& moves, const CashState& state, Amount limit) {
  check_limit(state.stones, limit);
  return best_move(CashTable(moves, state.stones, limit), state);
}

void AuditReport::fail(std::string what) {
  ++failure_count;
  if (failures.size() < 10) failures.push_back(std::move(what));
}

AuditReport audit_recursion(const CashTable& table) {
  AuditReport report;
  const auto& moves = table.moves();
  for (Amount n = 0; n <= table.n_max(); ++n) {
    for (Amount d = 0; d <= n; ++d) {
      for (Amount e = 0; e <= n; ++e) {
        bool expected = false;
        for (Amount a : moves.values()) {
          if (a <= n && a <= d && table.winner(n - a, e, d - a) == Winner::Opponent) {
            expected = true;
          }
        }
        ++report.checked;
        if (expected != (table.winner(n, d, e) == Winner::Mover)) {
          report.fail("recursion broken at " + CashState::of(n, d, e).to_string());
        }
      }
    }
  }
  return report;
}

AuditReport audit_cash_monotonicity(const CashTable& table) {
  AuditReport report;
  for (Amount n = 0; n <= table.n_max(); ++n) {
    for (Amount d = 0; d <= n; ++d) {
      for (Amount e = 0; e <= n; ++e) {
        Winner w = table.winner(n, d, e);
        ++report.checked;
        if (w == Winner::Mover && d < n && table.winner(n, d + 1, e) != Winner::Mover) {
          report.fail("more mover cash loses at " + CashState::of(n, d + 1, e).to_string());
        }
        if (w == Winner::Opponent && e < n && table.winner(n, d, e + 1) != Winner::Opponent) {
          report.fail("more opponent cash loses at " + CashState::of(n, d, e + 1).to_string());
        }
      }
    }
  }
  return report;
}

AuditReport audit_fund_cap(const CashTable& table, Amount extra) {
  AuditReport report;
  const auto& moves = table.moves();
  for (Amount n = 0; n <= table.n_max(); ++n) {
    for (Amount d = 0; d <= n + extra; ++d) {
      for (Amount e = 0; e <= n + extra; ++e) {
        if (d <= n && e <= n) continue;
        // raw recursion: legality uses the unclamped d; successors are
        // looked up with the unclamped amounts as well.
        bool raw = false;
        for (Amount a : moves.values()) {
          if (a <= n && a <= d && table.winner(n - a, e, d - a) == Winner::Opponent) raw = true;
        }
        ++report.checked;
        if (raw != (table.winner(n, d, e) == Winner::Mover)) {
          report.fail("fund cap fails at " + CashState::of(n, d, e).to_string());
        }
      }
    }
  }
  return report;
}

}  // namespace nimcash
