#include "nimcash/periodicity.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace nimcash {
namespace {

Amount mod(Amount x, Amount m) {
  Amount r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::string CsTriple::to_string() const {
  std::ostringstream out;
  out << '(' << residue << ',' << mover_slack << ',' << opponent_slack << ')';
  return out.str();
}

MoveCosts compute_costs(const MoveSet& moves, const ThresholdTables& tables, Amount n, Amount a) {
  if (!moves.contains(a) || a > n || n > tables.n_max()) {
    throw Error(ErrorKind::OutOfRange, "costs need a in A and a <= n <= " +
                                           std::to_string(tables.n_max()) + " (a=" +
                                           std::to_string(a) + ", n=" + std::to_string(n) + ")");
  }
  return {tables.mover(n) - tables.opponent(n - a) - a, tables.opponent(n) - tables.mover(n - a)};
}

PeriodCertificate::PeriodCertificate(MoveSet moves, Amount period, Amount offset,
                                     Amount verified_up_to, std::vector<Winner> pattern,
                                     std::vector<MoveCosts> costs)
    : moves_(std::move(moves)),
      period_(period),
      offset_(offset),
      verified_up_to_(verified_up_to),
      pattern_(std::move(pattern)),
      costs_(std::move(costs)) {
  if (period_ < 1 || pattern_.size() != static_cast<std::size_t>(period_) ||
      costs_.size() != static_cast<std::size_t>(period_) * moves_.size()) {
    throw Error(ErrorKind::BadParams, "inconsistent certificate tables");
  }
}

Amount PeriodCertificate::residue_of(Amount n) const noexcept { return mod(n, period_); }

Winner PeriodCertificate::standard(Amount residue) const {
  return pattern_.at(static_cast<std::size_t>(mod(residue, period_)));
}

MoveCosts PeriodCertificate::costs(Amount residue, Amount a) const {
  const auto row = static_cast<std::size_t>(mod(residue, period_));
  return costs_[row * moves_.size() + moves_.index_of(a)];
}

PeriodCertificate PeriodCertificate::with_costs(
    std::function<MoveCosts(Amount residue, Amount a)> costs) const {
  std::vector<MoveCosts> table;
  table.reserve(costs_.size());
  for (Amount i = 0; i < period_; ++i) {
    for (Amount a : moves_.values()) table.push_back(costs(i, a));
  }
  return PeriodCertificate(moves_, period_, offset_, verified_up_to_, pattern_, std::move(table));
}

std::optional<PeriodCertificate> detect_cash_period(const MoveSet& moves,
                                                    const ThresholdTables& tables, Amount m_max,
                                                    Amount n_check, Amount offset) {
  if (n_check > tables.n_max()) {
    throw Error(ErrorKind::OutOfRange, "thresholds reach " + std::to_string(tables.n_max()) +
                                           ", period check needs " + std::to_string(n_check));
  }
  if (offset < 0) throw Error(ErrorKind::BadParams, "offset must be non-negative");
  const Amount start = moves.max() + offset;
  for (Amount m = 1; m <= m_max; ++m) {
    // every residue needs a representative for each move
    if (start + moves.max() + m - 1 > n_check) break;
    bool periodic = true;
    for (Amount n = start + m; n <= n_check && periodic; ++n) {
      if (tables.standard(n) != tables.standard(n - m)) periodic = false;
      for (Amount a : moves.values()) {
        if (!periodic || n - m - a < start) break;
        if (compute_costs(moves, tables, n, a) != compute_costs(moves, tables, n - m, a)) {
          periodic = false;
        }
      }
    }
    if (!periodic) continue;

    std::vector<Winner> pattern;
    std::vector<MoveCosts> costs;
    for (Amount i = 0; i < m; ++i) {
      Amount rep = i;
      while (rep < start) rep += m;
      pattern.push_back(tables.standard(rep));
      for (Amount a : moves.values()) {
        Amount n = i;
        while (n - a < start) n += m;
        costs.push_back(compute_costs(moves, tables, n, a));
      }
    }
    return PeriodCertificate(moves, m, offset, n_check, std::move(pattern), std::move(costs));
  }
  return std::nullopt;
}

CsTriple corresponding_state(const PeriodCertificate& cert, const ThresholdTables& tables,
                             Amount n, Amount d, Amount e) {
  if (n < 0 || n > tables.n_max()) {
    throw Error(ErrorKind::OutOfRange, "thresholds cover n <= " + std::to_string(tables.n_max()));
  }
  return {cert.residue_of(n), tables.mover(n) - 1 - d, tables.opponent(n) - 1 - e};
}

CsTriple step_cs(const PeriodCertificate& cert, const CsTriple& t, Amount a) {
  const MoveCosts c = cert.costs(t.residue, a);
  return {cert.residue_of(t.residue - a), t.opponent_slack - c.opponent, t.mover_slack - c.mover};
}

std::string Violation::to_string() const {
  std::ostringstream out;
  out << (member_clause ? "member " : "non-member ") << triple.to_string() << " --" << move
      << "--> " << successor.to_string();
  return out.str();
}

VerificationReport verify_solution_set(const PeriodCertificate& cert, const SolutionSet& set,
                                       Amount box, std::size_t keep) {
  if (box < 0) throw Error(ErrorKind::BadParams, "box must be non-negative");
  VerificationReport report;
  report.box = box;
  const Amount a1 = cert.moves().min();
  const auto record = [&](const CsTriple& t, bool member, Amount a, const CsTriple& next) {
    ++report.violation_count;
    if (report.violations.size() < keep) report.violations.push_back({t, member, a, next});
  };
  for (Amount i = 0; i < cert.period(); ++i) {
    for (Amount b = 0; b <= box; ++b) {
      for (Amount bd = 0; bd <= box; ++bd) {
        const CsTriple t{i, b, bd};
        ++report.checked;
        if (set.contains(t)) {
          const CsTriple s = step_cs(cert, t, a1);
          const bool ok = (s.in_box() && !set.contains(s)) ||
                          (s.mover_slack >= 0 && s.opponent_slack < 0) ||
                          (s.mover_slack < 0 && s.opponent_slack < 0 &&
                           cert.standard(s.residue) == Winner::Opponent);
          if (!ok) record(t, true, a1, s);
        } else {
          for (Amount a : cert.moves().values()) {
            const CsTriple s = step_cs(cert, t, a);
            const bool ok = (s.in_box() && set.contains(s)) ||
                            (s.mover_slack < 0 && s.opponent_slack >= 0) ||
                            (s.mover_slack < 0 && s.opponent_slack < 0 &&
                             cert.standard(s.residue) == Winner::Mover);
            if (!ok) record(t, false, a, s);
          }
        }
      }
    }
  }
  return report;
}

VerificationReport verify_induced(const PeriodCertificate& cert, const InducedCandidate& induced,
                                  Amount box, std::size_t keep) {
  VerificationReport report;
  report.box = box;
  const auto label = [&](const CsTriple& t) -> std::optional<bool> {
    auto it = induced.labels.find(t);
    if (it == induced.labels.end()) return std::nullopt;
    return it->second == Winner::Mover;
  };
  for (const auto& [t, w] : induced.labels) {
    if (t.mover_slack > box || t.opponent_slack > box) continue;
    const bool member = w == Winner::Mover;
    std::vector<Amount> moves;
    if (member) {
      moves.push_back(cert.moves().min());
    } else {
      moves.assign(cert.moves().values().begin(), cert.moves().values().end());
    }
    bool unknown = false;
    std::vector<std::pair<Amount, CsTriple>> bad;
    for (Amount a : moves) {
      const CsTriple s = step_cs(cert, t, a);
      bool ok = false;
      if (s.in_box()) {
        const auto l = label(s);
        if (!l) {
          unknown = true;
          continue;
        }
        ok = member ? !*l : *l;
      } else if (s.mover_slack < 0 && s.opponent_slack < 0) {
        ok = cert.standard(s.residue) == (member ? Winner::Opponent : Winner::Mover);
      } else {
        ok = member ? s.mover_slack >= 0 : s.mover_slack < 0;
      }
      if (!ok) bad.emplace_back(a, s);
    }
    if (unknown && bad.empty()) {
      ++report.skipped;
      continue;
    }
    ++report.checked;
    if (!bad.empty()) {
      ++report.violation_count;
      if (report.violations.size() < keep) {
        report.violations.push_back({t, member, bad.front().first, bad.front().second});
      }
    }
  }
  return report;
}

InducedCandidate induce_candidate(const ThresholdTables& tables, const PeriodCertificate& cert,
                                  const CashTable& table) {
  InducedCandidate out;
  const Amount top = std::min(tables.n_max(), table.n_max());
  for (Amount n = 0; n <= top; ++n) {
    const PoorThresholds g = g_values(tables.a1(), n);
    const Amount d_end = std::min(tables.mover(n), n + 1);
    const Amount e_end = std::min(tables.opponent(n), n + 1);
    for (Amount d = g.mover; d < d_end; ++d) {
      for (Amount e = g.opponent; e < e_end; ++e) {
        ++out.critical_states;
        const CsTriple t = corresponding_state(cert, tables, n, d, e);
        const Winner w = table.winner(n, d, e);
        auto [it, fresh] = out.labels.emplace(t, w);
        if (!fresh && it->second != w) {
          out.consistent = false;
          if (out.conflicts.size() < 16) out.conflicts.emplace_back(t, CashState::of(n, d, e));
        }
      }
    }
  }
  return out;
}

Winner critical_winner(const PeriodCertificate& cert, const SolutionSet& set,
                       const ThresholdTables& tables, Amount n, Amount d, Amount e) {
  const Region region = classify(tables, n, d, e);
  if (region != Region::Critical) {
    throw Error(ErrorKind::WrongRegion, CashState::of(n, d, e).to_string() + " is " +
                                            std::string(to_string(region)) + ", not critical");
  }
  return set.contains(corresponding_state(cert, tables, n, d, e)) ? Winner::Mover
                                                                  : Winner::Opponent;
}

AuditReport audit_cs_commutation(const PeriodCertificate& cert, const ThresholdTables& tables) {
  AuditReport report;
  const MoveSet& moves = cert.moves();
  const Amount start = moves.max() + cert.offset();
  for (Amount n = 0; n <= tables.n_max(); ++n) {
    for (Amount a : moves.values()) {
      if (n - a < start) continue;
      for (Amount d = a; d <= n; ++d) {
        for (Amount e = 0; e <= n; ++e) {
          ++report.checked;
          const CsTriple stepped = step_cs(cert, corresponding_state(cert, tables, n, d, e), a);
          const CsTriple direct = corresponding_state(cert, tables, n - a, e, d - a);
          if (stepped != direct) {
            report.fail("CS step mismatch at " + CashState::of(n, d, e).to_string() +
                        " a=" + std::to_string(a) + ": " + stepped.to_string() + " vs " +
                        direct.to_string());
          }
        }
      }
    }
  }
  return report;
}

}  // namespace nimcash
