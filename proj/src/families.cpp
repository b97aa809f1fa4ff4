#include "nimcash/families.hpp"

#include <algorithm>
#include <sstream>

namespace nimcash {
namespace {

Amount floor_div(Amount a, Amount b) {
  Amount q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Amount half_up(Amount i) { return (i + 1) / 2; }

bool even(Amount x) { return x % 2 == 0; }

void require_state(Amount n, Amount d, Amount e) {
  if (n < 0 || d < 0 || e < 0) throw Error(ErrorKind::BadParams, "negative stones or funds");
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::OneL: return "oneL";
    case FamilyKind::OneLLOdd: return "oneLL-odd";
    case FamilyKind::OneLLEven: return "oneLL-even";
  }
  return "unknown";
}

std::optional<FamilyKind> parse_family_kind(std::string_view text) {
  for (FamilyKind k : {FamilyKind::OneL, FamilyKind::OneLLOdd, FamilyKind::OneLLEven}) {
    if (text == to_string(k)) return k;
  }
  return std::nullopt;
}

Family::Family(FamilyKind kind, Amount L)
    : kind_(kind),
      L_(L),
      moves_(kind == FamilyKind::OneL ? MoveSet::create({1, L}) : MoveSet::create({1, L, L + 1})) {}

Family Family::create(FamilyKind kind, Amount L) {
  const bool ok = kind == FamilyKind::OneLLOdd ? (L >= 3 && !even(L)) : (L >= 2 && even(L));
  if (!ok) {
    throw Error(ErrorKind::BadParams, std::string(to_string(kind)) + " does not accept L=" +
                                          std::to_string(L));
  }
  return Family(kind, L);
}

std::optional<Family> Family::recognize(const MoveSet& moves) {
  const auto v = moves.values();
  if (v.size() == 2 && v[0] == 1 && v[1] >= 2 && even(v[1])) return Family(FamilyKind::OneL, v[1]);
  if (v.size() == 3 && v[0] == 1 && v[1] >= 2 && v[2] == v[1] + 1) {
    return Family(even(v[1]) ? FamilyKind::OneLLEven : FamilyKind::OneLLOdd, v[1]);
  }
  return std::nullopt;
}

Amount Family::period() const noexcept {
  switch (kind_) {
    case FamilyKind::OneL: return L_ + 1;
    case FamilyKind::OneLLOdd: return 2 * L_ + 1;
    case FamilyKind::OneLLEven: return 2 * L_;
  }
  return 1;
}

Winner Family::standard(Amount n) const {
  if (n < 0) throw Error(ErrorKind::BadParams, "negative stone count");
  const Amount i = n % period();
  const Amount last = kind_ == FamilyKind::OneLLOdd ? L_ - 1 : L_ - 2;
  return even(i) && i <= last ? Winner::Opponent : Winner::Mover;
}

Amount Family::winner_threshold(Amount n) const {
  if (n < 0) throw Error(ErrorKind::BadParams, "negative stone count");
  const Amount k = n / period();
  const Amount i = n % period();
  switch (kind_) {
    case FamilyKind::OneL:
      return i < L_ ? L_ * k + half_up(i) : L_ * (k + 1);
    case FamilyKind::OneLLOdd: {
      const Amount s = (3 * L_ + 1) * k / 2;
      return i < L_ + 1 ? s + half_up(i) : s + L_ + half_up(i - L_);
    }
    case FamilyKind::OneLLEven: {
      const Amount s = 3 * L_ * k / 2;
      return i < L_ ? s + half_up(i) : s + L_ + half_up(i - L_);
    }
  }
  return 0;
}

Amount Family::loser_threshold(Amount n) const {
  if (n < 0) throw Error(ErrorKind::BadParams, "negative stone count");
  const Amount k = n / period();
  const Amount i = n % period();
  switch (kind_) {
    case FamilyKind::OneL:
      if (n < L_) return n / 2;
      return i < L_ ? L_ * k + i / 2 - ell() + 1 : L_ * k + ell();
    case FamilyKind::OneLLOdd: {
      const Amount s = (3 * L_ + 1) * k / 2;
      return i < L_ + 2 ? s + i / 2 : s + L_ + (i - L_) / 2;
    }
    case FamilyKind::OneLLEven: {
      const Amount s = 3 * L_ * k / 2;
      return i < L_ + 1 ? s + i / 2 : s + L_ + (i - L_) / 2;
    }
  }
  return 0;
}

Amount Family::mover_threshold(Amount n) const {
  return standard(n) == Winner::Mover ? winner_threshold(n) : loser_threshold(n);
}

Amount Family::opponent_threshold(Amount n) const {
  return standard(n) == Winner::Mover ? loser_threshold(n) : winner_threshold(n);
}

MoveCosts Family::costs(Amount residue, Amount a) const {
  if (!moves_.contains(a)) throw Error(ErrorKind::BadParams, "move not in the family set");
  const Amount i = ((residue % period()) + period()) % period();
  const Amount L = L_;
  switch (kind_) {
    case FamilyKind::OneL:
      if (a == 1) return {i == L ? L - 1 : 0, 0};
      return {0, i == L - 1 ? 0 : L - 1};
    case FamilyKind::OneLLOdd: {
      const Amount l = (L - 1) / 2;
      if (a == 1) return {i == L + 1 ? l + 1 : i == L + 2 ? l : 0, 0};
      if (a == L) {
        const Amount ci = i == 0 ? 0 : i < L + 1 ? -l : even(i) ? 1 : 0;
        const Amount cii = i <= L + 1 ? l : even(i) ? L - 1 : L;
        return {ci, cii};
      }
      const Amount ci = (i < 2 || i > L) ? 0 : even(i) ? -l - 1 : -l;
      const Amount cii = (i < 1 || i > L + 1) ? L : even(i) ? l + 1 : l;
      return {ci, cii};
    }
    case FamilyKind::OneLLEven: {
      const Amount l = L / 2;
      if (a == 1) return {(i == L || i == L + 1) ? l : 0, 0};
      if (a == L) {
        const bool inside = i >= 1 && i <= L - 1;
        const Amount ci = inside ? (even(i) ? -l : -l + 1) : (even(i) ? 0 : 1);
        const Amount cii = i < L + 1 ? (even(i) ? l : l - 1) : (even(i) ? L : L - 1);
        return {ci, cii};
      }
      const Amount ci = (i < 2 || i > L - 1) ? 0 : -l;
      const Amount cii = (i < 1 || i > L) ? L : l;
      return {ci, cii};
    }
  }
  return {};
}

PeriodCertificate Family::certificate() const {
  std::vector<Winner> pattern;
  std::vector<MoveCosts> table;
  for (Amount i = 0; i < period(); ++i) {
    pattern.push_back(standard(i));
    for (Amount a : moves_.values()) table.push_back(costs(i, a));
  }
  return PeriodCertificate(moves_, period(), 0, 0, std::move(pattern), std::move(table));
}

SolutionSet Family::solution_set() const {
  const Amount L = L_;
  switch (kind_) {
    case FamilyKind::OneL:
      return {[L](const CsTriple& t) {
                if (!t.in_box()) return false;
                const Amount x = t.mover_slack, y = t.opponent_slack;
                if (even(t.residue) && t.residue <= L - 2) return x < (y / (L - 1)) * (L - 1);
                return y >= (x / (L - 1)) * (L - 1);
              },
              "{1,L} rule with L=" + std::to_string(L)};
    case FamilyKind::OneLLOdd:
      return {[L](const CsTriple& t) {
                if (!t.in_box()) return false;
                const Amount l = (L - 1) / 2, i = t.residue;
                const Amount x = t.mover_slack, y = t.opponent_slack;
                if (i == L + 1) return x / L <= y / L;
                if ((i < L + 1 && even(i)) || (i > L + 1 && !even(i))) return x < (y / L) * L + l;
                return x < ((y + l + 1) / L) * L;
              },
              "{1,L,L+1} odd rule with L=" + std::to_string(L)};
    case FamilyKind::OneLLEven:
      return {[L](const CsTriple& t) {
                if (!t.in_box()) return false;
                const Amount l = L / 2;
                const Amount x = t.mover_slack, y = t.opponent_slack;
                if (!even(t.residue) || t.residue == L) return y >= (x / l) * l;
                return x < (y / l) * l;
              },
              "{1,L,L+1} even rule with L=" + std::to_string(L)};
  }
  return SolutionSet::empty();
}

CsTriple Family::corresponding_state(Amount n, Amount d, Amount e) const {
  require_state(n, d, e);
  d = std::min(d, n);
  e = std::min(e, n);
  return {n % period(), mover_threshold(n) - 1 - d, opponent_threshold(n) - 1 - e};
}

Region Family::region(Amount n, Amount d, Amount e) const {
  require_state(n, d, e);
  return classify_by(std::min(d, n), std::min(e, n), mover_threshold(n), opponent_threshold(n),
                     g_values(1, n));
}

Winner Family::win(Amount n, Amount d, Amount e) const {
  const Region r = region(n, d, e);
  if (is_rich(r)) return rich_winner(r, standard(n));
  if (is_poor(r)) return poor_winner(r, 1, std::min(d, n), std::min(e, n));
  return solution_set().contains(corresponding_state(n, d, e)) ? Winner::Mover : Winner::Opponent;
}

Winner range_standard(Amount L, Amount M, Amount n) {
  if (L < 1 || M < L || n < 0) throw Error(ErrorKind::BadParams, "need 1 <= L <= M and n >= 0");
  return n % (L + M) < L ? Winner::Opponent : Winner::Mover;
}

SolutionSet printed_odd_solution_set(Amount L) {
  if (L < 3 || even(L)) throw Error(ErrorKind::BadParams, "odd rule needs odd L >= 3");
  return {[L](const CsTriple& t) {
            if (!t.in_box()) return false;
            const Amount i = t.residue, x = t.mover_slack, y = t.opponent_slack;
            const Amount q = L - 1;
            if (i == L + 1) return y >= (x / q) * q;
            if ((i < L + 1 && even(i)) || (i > L + 1 && !even(i))) return x <= (y / q) * q;
            return y > (x / q) * q;
          },
          "{1,L,L+1} odd rule with modulus L-1, L=" + std::to_string(L)};
}

SolutionSet conjecture_solution_set(Amount L, Amount M) {
  if (L < 1 || M < L) throw Error(ErrorKind::BadParams, "need 1 <= L <= M");
  return {[L](const CsTriple& t) {
            if (!t.in_box()) return false;
            const Amount i = t.residue, b = floor_div(t.mover_slack, L);
            const Amount y = t.opponent_slack;
            if (i < L) return b <= floor_div(y, L);
            if (i < 2 * L) return b <= floor_div(y - L, L);
            if (i < 3 * L) return b <= floor_div(y - 3 * L + i + 1, L);
            return b <= floor_div(y, L);
          },
          "{L..M} rule with L=" + std::to_string(L) + ", M=" + std::to_string(M)};
}

ConjectureReport conjecture_check(Amount L, Amount M, Amount n_max, Amount oracle_n) {
  if (L < 1 || M < L) throw Error(ErrorKind::BadParams, "need 1 <= L <= M");
  const Amount p = L + M;
  if (oracle_n < 0 || n_max < oracle_n || n_max < 3 * p) {
    throw Error(ErrorKind::BadParams, "n_max must cover the oracle range and three periods");
  }
  std::vector<Amount> range;
  for (Amount a = L; a <= M; ++a) range.push_back(a);
  const MoveSet moves = MoveSet::create(range);
  const ThresholdTables tables(moves, n_max);

  ConjectureReport report;
  report.L = L;
  report.M = M;
  report.n_max = n_max;
  report.oracle_n = oracle_n;
  report.theta_bound = 5 * (M - L) * (M - L) + 2;
  report.special_case_applies = M >= 2 * L;

  Amount theta = 0;
  for (Amount n = 0; n + p <= n_max; ++n) {
    if (tables.mover(n + p) != tables.mover(n) + M ||
        tables.opponent(n + p) != tables.opponent(n) + M) {
      theta = n + 1;
    }
  }
  if (theta <= n_max - 3 * p) {
    report.theta = theta;
    report.bound_holds = theta <= report.theta_bound;
    report.special_case_holds = !report.special_case_applies || theta == 2 * (L + 1);
  }

  const CashTable table(moves, oracle_n, oracle_n);
  const SolutionSet x = conjecture_solution_set(L, M);
  for (Amount n = 0; n <= oracle_n; ++n) {
    const PoorThresholds g = g_values(L, n);
    for (Amount d = g.mover; d < std::min(tables.mover(n), n + 1); ++d) {
      for (Amount e = g.opponent; e < std::min(tables.opponent(n), n + 1); ++e) {
        ++report.critical_states;
        const CsTriple t{n % p, tables.mover(n) - 1 - d, tables.opponent(n) - 1 - e};
        const bool predicted = x.contains(t);
        if (predicted != (table.winner(n, d, e) == Winner::Mover)) {
          ++report.x_disagreements;
          if (report.counterexamples.size() < 16) report.counterexamples.push_back(CashState::of(n, d, e));
        }
      }
    }
  }
  return report;
}

CongruenceTable appendix_table() {
  return {
      {{{11, 3}, {10, 3}, {11, 5}, {10, 5}, {10, 3}, {11, 3}, {10, 5}, {10, 6},
        {11, 6}, {10, 8}, {11, 10}, {10, 10}, {10, 8}, {11, 11}, {10, 10}, {10, 11}}},
      {{{11, 0}, {10, 0}, {11, 0}, {11, 3}, {11, -1}, {11, 5}, {11, 3}, {11, 5},
        {11, 5}, {10, 5}, {11, 3}, {11, 6}, {11, 5}, {11, 10}, {11, 6}, {11, 10}}},
  };
}

std::string AppendixMismatch::to_string() const {
  std::ostringstream out;
  out << (mover ? "fI" : "fII") << "(16*" << k << "+" << r << " = " << 16 * k + r
      << "): table " << expected << ", computed " << computed;
  return out.str();
}

int AppendixReport::formulas_matched() const noexcept {
  return static_cast<int>(std::count(mover_matches.begin(), mover_matches.end(), true) +
                          std::count(opponent_matches.begin(), opponent_matches.end(), true));
}

AppendixReport appendix_check(Amount k_max, const CongruenceTable& table) {
  if (k_max < 4) throw Error(ErrorKind::BadParams, "k_max must be at least 4");
  const MoveSet moves = MoveSet::create({3, 5, 6, 10, 11});
  const ThresholdTables tables(moves, 16 * k_max + 15);
  AppendixReport report;
  report.k_max = k_max;
  report.mover_matches.fill(true);
  report.opponent_matches.fill(true);
  for (Amount n = 0; n <= 63; ++n) report.irregular.emplace_back(tables.mover(n), tables.opponent(n));

  for (Amount r = 0; r < 16; ++r) {
    const auto idx = static_cast<std::size_t>(r);
    for (bool mover : {true, false}) {
      const Linear expected = mover ? table.mover[idx] : table.opponent[idx];
      const auto value = [&](Amount k) {
        return mover ? tables.mover(16 * k + r) : tables.opponent(16 * k + r);
      };
      for (Amount k = 4; k <= k_max; ++k) {
        if (value(k) != expected.at(k)) {
          (mover ? report.mover_matches : report.opponent_matches)[idx] = false;
          report.mismatches.push_back({k, r, mover, expected.at(k), value(k)});
        }
      }
      std::optional<Linear> fit;
      if (k_max > 4) {
        const Amount slope = value(5) - value(4);
        Linear candidate{slope, value(4) - 4 * slope};
        bool linear = true;
        for (Amount k = 4; k <= k_max; ++k) linear = linear && candidate.at(k) == value(k);
        if (linear) fit = candidate;
      }
      (mover ? report.fitted_mover : report.fitted_opponent)[idx] = fit;
    }
  }
  return report;
}

}  // namespace nimcash
