// Corresponding-state algebra for the middle-class regime: move costs in
// threshold coordinates, empirical detection of cash periods, bounded
// verification of solution sets, and the critical-regime winner.
#pragma once

#include <compare>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nimcash/game_core.hpp"
#include "nimcash/oracle.hpp"
#include "nimcash/thresholds.hpp"

namespace nimcash {

/// (residue, mover slack, opponent slack) where a slack is the distance
/// below the rich threshold: f_mover(n) - 1 - d and f_opponent(n) - 1 - e.
struct CsTriple {
  Amount residue = 0;
  Amount mover_slack = 0;
  Amount opponent_slack = 0;

  bool in_box() const noexcept { return mover_slack >= 0 && opponent_slack >= 0; }
  std::string to_string() const;  // "(3,1,0)"
  friend auto operator<=>(const CsTriple&, const CsTriple&) = default;
};

/// How a move shifts the slacks: the mover's slack drops by `mover` and
/// becomes the opponent slack; the opponent's slack drops by `opponent` and
/// becomes the mover slack.
struct MoveCosts {
  Amount mover = 0;
  Amount opponent = 0;
  friend bool operator==(const MoveCosts&, const MoveCosts&) = default;
};

/// (f_mover(n) - f_opponent(n-a) - a, f_opponent(n) - f_mover(n-a)).
/// Throws OutOfRange unless a <= n <= n_max and a is a move.
MoveCosts compute_costs(const MoveSet& moves, const ThresholdTables& tables, Amount n, Amount a);

/// Evidence that the standard winner and the move costs repeat with
/// period m over the checked range.
class PeriodCertificate {
 public:
  PeriodCertificate(MoveSet moves, Amount period, Amount offset, Amount verified_up_to,
                    std::vector<Winner> pattern, std::vector<MoveCosts> costs);

  const MoveSet& moves() const noexcept { return moves_; }
  Amount period() const noexcept { return period_; }
  Amount offset() const noexcept { return offset_; }
  Amount verified_up_to() const noexcept { return verified_up_to_; }

  Winner standard(Amount residue) const;
  MoveCosts costs(Amount residue, Amount a) const;
  Amount residue_of(Amount n) const noexcept;

  /// Replaces the cost table; used to build tampered certificates in tests
  /// and to install closed-form tables.
  PeriodCertificate with_costs(std::function<MoveCosts(Amount residue, Amount a)> costs) const;

 private:
  MoveSet moves_;
  Amount period_;
  Amount offset_;
  Amount verified_up_to_;
  std::vector<Winner> pattern_;
  std::vector<MoveCosts> costs_;  // residue-major, one entry per move
};

/// Least m <= m_max such that, for every n <= n_check:
///   standard(n) == standard(n - m)           when n - m >= start
///   costs(n, a) == costs(n - m, a)           when n - m - a >= start
/// where start = max(A) + offset. Costs of the initial stretch are excluded
/// because the thresholds for piles smaller than max(A) follow their own
/// pattern. Requires tables to reach n_check.
std::optional<PeriodCertificate> detect_cash_period(const MoveSet& moves,
                                                    const ThresholdTables& tables, Amount m_max,
                                                    Amount n_check, Amount offset = 0);

CsTriple corresponding_state(const PeriodCertificate& cert, const ThresholdTables& tables,
                             Amount n, Amount d, Amount e);

/// CS after removing a: (i - a mod m, b' - c_opp, b - c_mover) with the two
/// slacks swapping roles.
CsTriple step_cs(const PeriodCertificate& cert, const CsTriple& t, Amount a);

/// A set of corresponding states given by a total membership predicate, so
/// that successors outside any finite box can still be queried.
class SolutionSet {
 public:
  using Predicate = std::function<bool(const CsTriple&)>;
  SolutionSet(Predicate member, std::string description)
      : member_(std::move(member)), description_(std::move(description)) {}

  bool contains(const CsTriple& t) const { return member_(t); }
  const std::string& description() const noexcept { return description_; }

  static SolutionSet empty() { return {[](const CsTriple&) { return false; }, "empty set"}; }

 private:
  Predicate member_;
  std::string description_;
};

struct Violation {
  CsTriple triple;
  bool member_clause = false;  // member rule (a1 reply) vs non-member rule
  Amount move = 0;
  CsTriple successor;
  std::string to_string() const;
};

struct VerificationReport {
  Amount box = 0;
  std::vector<Violation> violations;  // capped; see violation_count
  std::uint64_t violation_count = 0;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;  // partial checks only
  bool passed() const noexcept { return violation_count == 0; }
};

/// Checks both closure rules on every triple with 0 <= slacks <= box.
VerificationReport verify_solution_set(const PeriodCertificate& cert, const SolutionSet& set,
                                       Amount box, std::size_t keep = 16);

struct InducedCandidate;

/// Closure check of an oracle-induced labelling: only labelled triples in
/// the box are judged, and a triple is skipped when a successor the rules
/// need to inspect lies in the box but carries no label.
VerificationReport verify_induced(const PeriodCertificate& cert, const InducedCandidate& induced,
                                  Amount box, std::size_t keep = 16);

struct InducedCandidate {
  std::map<CsTriple, Winner> labels;
  bool consistent = true;
  std::vector<std::pair<CsTriple, CashState>> conflicts;  // first few
  std::uint64_t critical_states = 0;
};

/// Labels every corresponding state reached by a critical (n; d, e) with
/// n <= table.n_max() with the oracle's winner.
InducedCandidate induce_candidate(const ThresholdTables& tables, const PeriodCertificate& cert,
                                  const CashTable& table);

/// Mover wins a critical state iff its corresponding state is in the set.
/// Throws WrongRegion for non-critical input.
Winner critical_winner(const PeriodCertificate& cert, const SolutionSet& set,
                       const ThresholdTables& tables, Amount n, Amount d, Amount e);

/// For every state with n <= tables.n_max(), d, e <= n and every legal a
/// whose costs the certificate covers (n - a >= max(A) + offset), stepping
/// the CS agrees with the CS of the successor.
AuditReport audit_cs_commutation(const PeriodCertificate& cert, const ThresholdTables& tables);

}  // namespace nimcash
