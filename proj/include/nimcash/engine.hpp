// Winner of an arbitrary cash state by regime: rich thresholds first, then
// the poor rule, then either a family solution set or the exact table.
#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string_view>
#include <vector>

#include "nimcash/families.hpp"
#include "nimcash/game_core.hpp"
#include "nimcash/oracle.hpp"
#include "nimcash/periodicity.hpp"
#include "nimcash/thresholds.hpp"

namespace nimcash {

enum class Basis { Rich, Poor, CriticalSolutionSet, Oracle };

std::string_view to_string(Basis basis);  // "rich regime", ...

struct Decision {
  Winner winner = Winner::Opponent;
  Region region = Region::Critical;
  Basis basis = Basis::Oracle;
  std::optional<CsTriple> cs;  // set for critical states of a family
};

/// Largest pile for which generic threshold tables are built.
inline constexpr Amount kMaxThresholdStones = 10'000'000;

class Engine {
 public:
  /// `limit` bounds the exact table used for critical states of sets
  /// without closed forms.
  explicit Engine(MoveSet moves, Amount limit = kDefaultMaxStones);

  const MoveSet& moves() const noexcept { return moves_; }
  /// The recognised family, if its solution set passed the closure check.
  const std::optional<Family>& family() const noexcept { return family_; }

  Decision decide(const CashState& state) const;
  Decision decide(Amount n, Amount d, Amount e) const { return decide(CashState::of(n, d, e)); }

  Amount mover_threshold(Amount n) const;
  Amount opponent_threshold(Amount n) const;
  Winner standard(Amount n) const;

  /// Legal moves after which the opponent loses, ascending.
  std::vector<Amount> winning_moves(const CashState& state) const;
  /// Smallest winning move, else a1 when legal, else nothing.
  std::optional<Amount> engine_move(const CashState& state) const;

 private:
  std::shared_ptr<const ThresholdTables> tables(Amount n) const;
  std::shared_ptr<const CashTable> table(Amount n) const;

  MoveSet moves_;
  Amount limit_;
  std::optional<Family> family_;
  mutable std::mutex mutex_;
  mutable std::shared_ptr<const ThresholdTables> tables_;
  mutable std::shared_ptr<const CashTable> table_;
};

}  // namespace nimcash
