#include "nimcash/engine.hpp"

#include <algorithm>

namespace nimcash {
namespace {

// closure checks grow with period * box^2, so very large L gets a smaller box
Amount closure_box(Amount L) { return std::min<Amount>(10 * L, 120); }

Amount grown(Amount n, Amount current) { return std::max({n, 2 * current, Amount{64}}); }

}  // namespace

std::string_view to_string(Basis basis) {
  switch (basis) {
    case Basis::Rich: return "rich regime";
    case Basis::Poor: return "poor regime";
    case Basis::CriticalSolutionSet: return "critical regime, solution set";
    case Basis::Oracle: return "critical regime, oracle fallback";
  }
  return "unknown";
}

Engine::Engine(MoveSet moves, Amount limit) : moves_(std::move(moves)), limit_(limit) {
  if (auto fam = Family::recognize(moves_)) {
    const VerificationReport report =
        verify_solution_set(fam->certificate(), fam->solution_set(), closure_box(fam->L()));
    if (report.passed()) family_ = std::move(fam);
  }
}

std::shared_ptr<const ThresholdTables> Engine::tables(Amount n) const {
  if (n > kMaxThresholdStones) {
    throw Error(ErrorKind::ResourceLimit, "threshold tables stop at " +
                                              std::to_string(kMaxThresholdStones) + " stones");
  }
  std::lock_guard lock(mutex_);
  if (!tables_ || tables_->n_max() < n) {
    const Amount size = std::min(grown(n, tables_ ? tables_->n_max() : 0), kMaxThresholdStones);
    tables_ = std::make_shared<const ThresholdTables>(moves_, size);
  }
  return tables_;
}

std::shared_ptr<const CashTable> Engine::table(Amount n) const {
  std::lock_guard lock(mutex_);
  if (!table_ || table_->n_max() < n) {
    if (n > limit_) {
      throw Error(ErrorKind::ResourceLimit, "critical state with n = " + std::to_string(n) +
                                                " needs the exact table beyond the bound " +
                                                std::to_string(limit_));
    }
    const Amount size = std::min(grown(n, table_ ? table_->n_max() : 0), limit_);
    table_ = std::make_shared<const CashTable>(moves_, size, limit_);
  }
  return table_;
}

Amount Engine::mover_threshold(Amount n) const {
  return family_ ? family_->mover_threshold(n) : tables(n)->mover(n);
}

Amount Engine::opponent_threshold(Amount n) const {
  return family_ ? family_->opponent_threshold(n) : tables(n)->opponent(n);
}

Winner Engine::standard(Amount n) const {
  return family_ ? family_->standard(n) : tables(n)->standard(n);
}

Decision Engine::decide(const CashState& state) const {
  if (state.stones < 0) throw Error(ErrorKind::BadParams, "negative stone count");
  const CashState s = state.clamped();
  const Amount n = s.stones, d = s.mover.dollars(), e = s.opponent.dollars();
  Decision out;
  out.region = classify_by(d, e, mover_threshold(n), opponent_threshold(n), g_values(moves_, n));
  if (is_rich(out.region)) {
    out.basis = Basis::Rich;
    out.winner = rich_winner(out.region, standard(n));
  } else if (is_poor(out.region)) {
    out.basis = Basis::Poor;
    out.winner = poor_winner(out.region, moves_.min(), d, e);
  } else if (family_) {
    out.basis = Basis::CriticalSolutionSet;
    out.cs = family_->corresponding_state(n, d, e);
    out.winner = family_->solution_set().contains(*out.cs) ? Winner::Mover : Winner::Opponent;
  } else {
    out.basis = Basis::Oracle;
    out.winner = table(n)->winner(n, d, e);
  }
  return out;
}

std::vector<Amount> Engine::winning_moves(const CashState& state) const {
  const CashState s = state.clamped();
  std::vector<Amount> out;
  for (Amount a : legal_moves(moves_, s)) {
    if (decide(apply_move(moves_, s, a)).winner == Winner::Opponent) out.push_back(a);
  }
  return out;
}

std::optional<Amount> Engine::engine_move(const CashState& state) const {
  const auto wins = winning_moves(state);
  if (!wins.empty()) return wins.front();
  const auto legal = legal_moves(moves_, state.clamped());
  if (legal.empty()) return std::nullopt;
  return legal.front();
}

}  // namespace nimcash
