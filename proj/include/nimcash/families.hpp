// Closed forms for the solved move-set families {1,L} and {1,L,L+1}, the
// standard patterns of interval sets {L..M}, the interval-set conjecture
// sweep, and the congruence table check for {3,5,6,10,11}.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nimcash/game_core.hpp"
#include "nimcash/periodicity.hpp"
#include "nimcash/thresholds.hpp"

namespace nimcash {

enum class FamilyKind {
  OneL,       // {1,L}, L even
  OneLLOdd,   // {1,L,L+1}, L odd
  OneLLEven,  // {1,L,L+1}, L even
};

std::string_view to_string(FamilyKind kind);  // "oneL", "oneLL-odd", "oneLL-even"
std::optional<FamilyKind> parse_family_kind(std::string_view text);

class Family {
 public:
  /// Throws BadParams when the parity of L does not match the kind, or
  /// L < 2 (L < 3 for the odd kind).
  static Family create(FamilyKind kind, Amount L);
  /// The family a move set belongs to, if any.
  static std::optional<Family> recognize(const MoveSet& moves);

  FamilyKind kind() const noexcept { return kind_; }
  Amount L() const noexcept { return L_; }
  Amount ell() const noexcept { return L_ / 2; }
  const MoveSet& moves() const noexcept { return moves_; }
  Amount period() const noexcept;

  Winner standard(Amount n) const;
  /// Threshold of the standard winner at n and of the standard loser.
  Amount winner_threshold(Amount n) const;
  Amount loser_threshold(Amount n) const;
  Amount mover_threshold(Amount n) const;
  Amount opponent_threshold(Amount n) const;

  MoveCosts costs(Amount residue, Amount a) const;
  PeriodCertificate certificate() const;
  SolutionSet solution_set() const;

  /// d and e are clamped to n first. Throws BadParams on negative input.
  CsTriple corresponding_state(Amount n, Amount d, Amount e) const;
  Region region(Amount n, Amount d, Amount e) const;
  Winner win(Amount n, Amount d, Amount e) const;

 private:
  Family(FamilyKind kind, Amount L);
  FamilyKind kind_;
  Amount L_;
  MoveSet moves_;
};

/// W for A = {L..M}: the opponent wins iff n mod (L+M) < L.
Winner range_standard(Amount L, Amount M, Amount n);

/// The odd-family rule with modulus L-1 in its member tests. It fails the
/// closure check and is kept as a negative control.
SolutionSet printed_odd_solution_set(Amount L);

/// Piecewise rule over (i, b, b') for A = {L..M} with residues mod L+M.
SolutionSet conjecture_solution_set(Amount L, Amount M);

struct ConjectureReport {
  Amount L = 0;
  Amount M = 0;
  Amount n_max = 0;
  Amount oracle_n = 0;
  std::optional<Amount> theta;  // absent when no offset leaves three periods
  Amount theta_bound = 0;       // 5(M-L)^2 + 2
  bool bound_holds = false;
  bool special_case_applies = false;  // M >= 2L
  bool special_case_holds = false;    // theta == 2(L+1), when it applies
  std::uint64_t critical_states = 0;
  std::uint64_t x_disagreements = 0;
  std::vector<CashState> counterexamples;  // first few
};

/// Report-only; never throws on a failed conjecture. Throws BadParams
/// unless 1 <= L <= M and n_max covers three periods past the oracle range.
ConjectureReport conjecture_check(Amount L, Amount M, Amount n_max = 2000, Amount oracle_n = 120);

struct Linear {
  Amount slope = 0;
  Amount intercept = 0;
  Amount at(Amount k) const noexcept { return slope * k + intercept; }
  friend bool operator==(const Linear&, const Linear&) = default;
};

/// Thresholds at n = 16k + r written as linear functions of k.
struct CongruenceTable {
  std::array<Linear, 16> mover;
  std::array<Linear, 16> opponent;
};

/// The published table for {3,5,6,10,11}.
CongruenceTable appendix_table();

struct AppendixMismatch {
  Amount k = 0;
  Amount r = 0;
  bool mover = true;
  Amount expected = 0;
  Amount computed = 0;
  std::string to_string() const;
};

struct AppendixReport {
  Amount k_max = 0;
  std::vector<AppendixMismatch> mismatches;
  std::array<bool, 16> mover_matches{};
  std::array<bool, 16> opponent_matches{};
  /// Computed fI, fII for n <= 63, reported as is.
  std::vector<std::pair<Amount, Amount>> irregular;
  /// Linear fits of the computed values over 4 <= k <= k_max, when linear.
  std::array<std::optional<Linear>, 16> fitted_mover;
  std::array<std::optional<Linear>, 16> fitted_opponent;

  int formulas_matched() const noexcept;
  bool passed() const noexcept { return mismatches.empty(); }
};

/// Throws BadParams if k_max < 4.
AppendixReport appendix_check(Amount k_max = 12, const CongruenceTable& table = appendix_table());

}  // namespace nimcash
