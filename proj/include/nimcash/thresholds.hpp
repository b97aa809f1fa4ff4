// Rich-side thresholds (the least cash that lets a player win against an
// opponent with a given budget) and poor-side thresholds (below which both
// players can only afford the smallest move), plus the regime classifier.
#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "nimcash/game_core.hpp"
#include "nimcash/oracle.hpp"

namespace nimcash {

/// Rich thresholds for every n in [0, n_max].
///
/// For the standard-NIM winner the threshold is the cash needed to win
/// against an unlimited opponent; for the loser it is the completion that
/// makes the two rich rules exact:
///   d >= mover(n), e <  opponent(n)  => mover wins
///   d <  mover(n), e >= opponent(n)  => opponent wins
///   d >= mover(n), e >= opponent(n)  => standard winner wins
class ThresholdTables {
 public:
  ThresholdTables(const MoveSet& moves, Amount n_max);

  Amount n_max() const noexcept { return static_cast<Amount>(mover_.size()) - 1; }
  Amount a1() const noexcept { return a1_; }

  Amount mover(Amount n) const;     // threshold for the player to move
  Amount opponent(Amount n) const;  // threshold for the other player
  Winner standard(Amount n) const;  // standard NIM winner at n

  /// Smallest move attaining the mover threshold's minimum (absent for
  /// n < a1). It is the first step of the mover's rich strategy when the
  /// mover is the standard winner.
  std::optional<Amount> mover_witness(Amount n) const;

 private:
  void check(Amount n) const;
  Amount a1_;
  StandardTable standard_;
  std::vector<Amount> mover_;
  std::vector<Amount> opponent_;
  std::vector<Amount> witness_;  // 0 when absent
};

ThresholdTables build_thresholds(const MoveSet& moves, Amount n_max);

/// Poor thresholds; depend on the move set only through a1.
struct PoorThresholds {
  Amount mover = 0;
  Amount opponent = 0;
  friend bool operator==(const PoorThresholds&, const PoorThresholds&) = default;
};

PoorThresholds g_values(Amount a1, Amount n);
inline PoorThresholds g_values(const MoveSet& moves, Amount n) { return g_values(moves.min(), n); }

enum class Region { RichI, RichII, RichBoth, PoorI, PoorII, PoorBoth, Critical };

std::string_view to_string(Region region);
bool is_rich(Region region) noexcept;
bool is_poor(Region region) noexcept;

/// Region of (n; d, e) given its two rich and two poor thresholds. Rich
/// cases take precedence over poor ones.
Region classify_by(Amount d, Amount e, Amount rich_mover, Amount rich_opponent,
                   PoorThresholds poor);

/// d and e must already be clamped to n. Throws OutOfRange if n > n_max.
Region classify(const ThresholdTables& tables, Amount n, Amount d, Amount e);

/// Winner in a rich region; throws WrongRegion otherwise.
Winner rich_winner(Region region, Winner standard);
Winner rich_winner(const ThresholdTables& tables, Amount n, Amount d, Amount e);

/// Winner in a poor region; throws WrongRegion otherwise.
Winner poor_winner(Region region, Amount a1, Amount d, Amount e);
Winner poor_winner(Amount a1, Amount n, Amount d, Amount e);

/// Enumerative checks of the poor-threshold identities for 0 <= n <= n_max:
/// shift by 2*a1, g_mover(n) - a <= g_opponent(n - a), g_opponent(n) ==
/// g_mover(n - a1), the not-poor propagations and the floor-quotient
/// coverage statements.
AuditReport audit_poor_lemmas(const ThresholdTables& tables);

/// Piles where a poor threshold exceeds the matching rich one. This
/// happens for a few small piles only; rich cases take precedence there.
std::vector<Amount> threshold_order_exceptions(const ThresholdTables& tables);

/// Least-cash and boundary checks of the rich thresholds against the oracle
/// for n <= table.n_max().
AuditReport audit_rich_semantics(const ThresholdTables& tables, const CashTable& table);

}  // namespace nimcash
