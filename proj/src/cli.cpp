#include "nimcash/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "nimcash/engine.hpp"
#include "nimcash/families.hpp"
#include "nimcash/oracle.hpp"
#include "nimcash/output.hpp"
#include "nimcash/periodicity.hpp"
#include "nimcash/thresholds.hpp"

namespace nimcash {
namespace {

Amount parse_amount(std::string_view text, const char* what) {
  Amount value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorKind::BadParams, std::string("bad ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

std::string join(const std::vector<Amount>& values) {
  if (values.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

std::string describe_pass(bool ok) { return ok ? "PASS" : "FAIL"; }

struct Globals {
  Amount max_n = 0;
};

// --- solve -------------------------------------------------------------

struct SolveOpts {
  std::string moves;
  Amount n = 0;
  std::string d = "UF";
  std::string e = "UF";
  bool explain = false;
};

int cmd_solve(const SolveOpts& o, const Globals& g, std::ostream& out) {
  const MoveSet moves = parse_move_set(o.moves);
  const CashState state{o.n, parse_funds(o.d), parse_funds(o.e)};
  if (state.stones < 0) throw Error(ErrorKind::BadParams, "n must be non-negative");
  const Engine engine(moves, g.max_n);
  const CashState s = state.clamped();
  const Decision decision = engine.decide(s);
  out << "Player " << player_label(decision.winner) << " wins (" << to_string(decision.basis)
      << ")\n";
  out << "region: " << to_string(decision.region) << '\n';
  out << "winning moves: " << join(engine.winning_moves(s)) << '\n';
  if (!o.explain) return 0;

  const Amount n = s.stones;
  const PoorThresholds poor = g_values(moves, n);
  out << "state: " << state.to_string() << " with A=" << moves.to_string() << ", clamped "
      << s.to_string() << '\n';
  out << "standard winner at n: Player " << player_label(engine.standard(n)) << '\n';
  out << "rich thresholds: fI=" << engine.mover_threshold(n)
      << " fII=" << engine.opponent_threshold(n) << '\n';
  out << "poor thresholds: gI=" << poor.mover << " gII=" << poor.opponent << '\n';
  switch (decision.basis) {
    case Basis::Rich:
      out << "decided by: rich-threshold rule";
      if (decision.region == Region::RichBoth) out << " (both rich, standard winner wins)";
      out << '\n';
      break;
    case Basis::Poor:
      out << "decided by: poor-threshold rule";
      if (decision.region == Region::PoorBoth) {
        out << " (both poor, compare floor(d/a1) with floor(e/a1))";
      }
      out << '\n';
      break;
    case Basis::CriticalSolutionSet:
      out << "decided by: corresponding state " << decision.cs->to_string()
          << (decision.winner == Winner::Mover ? " in " : " not in ") << "the "
          << engine.family()->solution_set().description() << '\n';
      break;
    case Basis::Oracle:
      out << "decided by: oracle fallback (exact table, no closed-form solution set)\n";
      break;
  }
  return 0;
}

// --- table -------------------------------------------------------------

struct TableOpts {
  std::string moves;
  Amount n_max = 20;
  std::optional<Amount> d_max;
  std::optional<Amount> e_max;
  std::string format = "csv";
  std::string out_path;
};

int cmd_table(const TableOpts& o, const Globals& g, std::ostream& out) {
  const MoveSet moves = parse_move_set(o.moves);
  if (o.n_max < 0) throw Error(ErrorKind::BadParams, "--n-max must be non-negative");
  const Format format = o.format == "json" ? Format::Json : Format::Csv;
  std::ofstream file;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) throw Error(ErrorKind::BadParams, "cannot open " + o.out_path);
  }
  std::ostream& sink = o.out_path.empty() ? out : file;
  const Engine engine(moves, g.max_n);

  if (!o.d_max && !o.e_max) {
    std::vector<ThresholdRow> rows;
    for (Amount n = 1; n <= o.n_max; ++n) {
      rows.push_back({n, engine.standard(n), engine.mover_threshold(n),
                      engine.opponent_threshold(n), g_values(moves, n)});
    }
    format == Format::Json ? write_json(sink, rows) : write_csv(sink, rows);
    return 0;
  }
  const Amount d_max = o.d_max.value_or(*o.e_max);
  const Amount e_max = o.e_max.value_or(*o.d_max);
  if (d_max < 0 || e_max < 0) throw Error(ErrorKind::BadParams, "fund bounds must be non-negative");
  std::vector<OutputRecord> rows;
  for (Amount n = 1; n <= o.n_max; ++n) {
    for (Amount d = 0; d <= std::min(d_max, n); ++d) {
      for (Amount e = 0; e <= std::min(e_max, n); ++e) {
        rows.push_back(make_record(engine, CashState::of(n, d, e)));
      }
    }
  }
  format == Format::Json ? write_json(sink, rows) : write_csv(sink, rows);
  return 0;
}

// --- period ------------------------------------------------------------

struct PeriodOpts {
  std::string moves;
  Amount m_max = 64;
  Amount n_check = 2000;
  Amount offset = 0;
};

int cmd_period(const PeriodOpts& o, std::ostream& out) {
  const MoveSet moves = parse_move_set(o.moves);
  if (o.m_max < 1 || o.n_check < 0) throw Error(ErrorKind::BadParams, "bad --m-max or --n-check");
  if (o.n_check > kMaxThresholdStones) throw Error(ErrorKind::ResourceLimit, "--n-check too large");
  const ThresholdTables tables(moves, o.n_check);
  const auto cert = detect_cash_period(moves, tables, o.m_max, o.n_check, o.offset);
  if (!cert) {
    out << "none found (checked m ≤ " << o.m_max << ", n ≤ " << o.n_check << ")\n";
    return 0;
  }
  out << "m=" << cert->period() << '\n';
  out << "checked n <= " << cert->verified_up_to() << ", costs compared from n-a >= "
      << moves.max() + cert->offset() << '\n';
  out << "standard losers (Player II) at residues:";
  for (Amount i = 0; i < cert->period(); ++i) {
    if (cert->standard(i) == Winner::Opponent) out << ' ' << i;
  }
  out << '\n';
  for (Amount i = 0; i < cert->period(); ++i) {
    out << "i=" << i << ':';
    for (Amount a : moves.values()) {
      const MoveCosts c = cert->costs(i, a);
      out << "  a=" << a << " cI=" << c.mover << " cII=" << c.opponent;
    }
    out << '\n';
  }
  return 0;
}

// --- verify ------------------------------------------------------------

struct VerifyOpts {
  std::vector<std::string> family;
  std::string set;
  std::string x = "induced";
  std::string rule = "closed";
  std::optional<Amount> box;
  Amount oracle_box = 40;
  Amount n_check = 2000;
};

void print_violations(const VerificationReport& report, std::ostream& out) {
  out << "closure on box " << report.box << ": " << describe_pass(report.passed()) << " ("
      << report.checked << " triples, " << report.violation_count << " violations";
  if (report.skipped) out << ", " << report.skipped << " skipped for unlabelled successors";
  out << ")\n";
  if (!report.passed()) out << "first violation: " << report.violations.front().to_string() << '\n';
}

int verify_family(const VerifyOpts& o, const Globals& g, std::ostream& out) {
  const auto kind = parse_family_kind(o.family.at(0));
  if (!kind) throw Error(ErrorKind::BadParams, "unknown family '" + o.family.at(0) + "'");
  const Family fam = Family::create(*kind, parse_amount(o.family.at(1), "L"));
  const SolutionSet set = o.rule == "printed" ? printed_odd_solution_set(fam.L()) : fam.solution_set();
  const Amount box = o.box.value_or(10 * fam.L());
  out << "family " << to_string(fam.kind()) << " L=" << fam.L() << ", A=" << fam.moves().to_string()
      << ", period " << fam.period() << '\n';
  out << "rule: " << set.description() << '\n';

  bool ok = true;
  const VerificationReport closure = verify_solution_set(fam.certificate(), set, box);
  print_violations(closure, out);
  ok = ok && closure.passed();

  const Amount n_dp = std::max<Amount>(500, o.oracle_box);
  const ThresholdTables tables(fam.moves(), n_dp);
  Amount first_bad = -1;
  for (Amount n = 0; n <= n_dp && first_bad < 0; ++n) {
    if (fam.mover_threshold(n) != tables.mover(n) || fam.opponent_threshold(n) != tables.opponent(n) ||
        fam.standard(n) != tables.standard(n)) {
      first_bad = n;
    }
  }
  out << "closed forms vs thresholds for n <= " << n_dp << ": " << describe_pass(first_bad < 0);
  if (first_bad >= 0) out << " (first difference at n=" << first_bad << ')';
  out << '\n';
  ok = ok && first_bad < 0;

  if (o.oracle_box > g.max_n) throw Error(ErrorKind::ResourceLimit, "--oracle-box exceeds the bound");
  const CashTable table(fam.moves(), o.oracle_box, g.max_n);
  std::uint64_t mismatches = 0;
  std::optional<CashState> first;
  for (Amount n = 0; n <= o.oracle_box; ++n) {
    for (Amount d = 0; d <= n; ++d) {
      for (Amount e = 0; e <= n; ++e) {
        const Region r = fam.region(n, d, e);
        const Winner w = r == Region::Critical
                             ? (set.contains(fam.corresponding_state(n, d, e)) ? Winner::Mover
                                                                               : Winner::Opponent)
                             : fam.win(n, d, e);
        if (w != table.winner(n, d, e)) {
          ++mismatches;
          if (!first) first = CashState::of(n, d, e);
        }
      }
    }
  }
  out << "pipeline vs exact table for n <= " << o.oracle_box << ": " << describe_pass(mismatches == 0);
  if (first) out << " (" << mismatches << " mismatches, first " << first->to_string() << ')';
  out << '\n';
  ok = ok && mismatches == 0;
  out << describe_pass(ok) << '\n';
  return ok ? 0 : 1;
}

int verify_set(const VerifyOpts& o, const Globals& g, std::ostream& out) {
  if (o.x != "induced") throw Error(ErrorKind::BadParams, "--X supports only 'induced'");
  const MoveSet moves = parse_move_set(o.set);
  const ThresholdTables tables(moves, std::max(o.n_check, o.oracle_box));
  const auto cert = detect_cash_period(moves, tables, 64, o.n_check);
  out << "A=" << moves.to_string() << '\n';
  if (!cert) {
    out << "no cash period found (m <= 64, n <= " << o.n_check << ")\nFAIL\n";
    return 1;
  }
  out << "period m=" << cert->period() << '\n';
  if (o.oracle_box > g.max_n) throw Error(ErrorKind::ResourceLimit, "--oracle-box exceeds the bound");
  const CashTable table(moves, o.oracle_box, g.max_n);
  const InducedCandidate induced = induce_candidate(tables, *cert, table);
  out << "critical states up to n=" << o.oracle_box << ": " << induced.critical_states
      << ", distinct corresponding states: " << induced.labels.size() << '\n';
  out << "consistent labels: " << describe_pass(induced.consistent) << '\n';
  if (!induced.consistent) {
    out << "first conflict: " << induced.conflicts.front().first.to_string() << " at "
        << induced.conflicts.front().second.to_string() << '\n';
  }
  const VerificationReport closure = verify_induced(*cert, induced, o.box.value_or(10));
  print_violations(closure, out);
  const bool ok = induced.consistent && closure.passed();
  out << describe_pass(ok) << '\n';
  return ok ? 0 : 1;
}

int cmd_verify(const VerifyOpts& o, const Globals& g, std::ostream& out) {
  if (!o.family.empty() == !o.set.empty()) {
    throw Error(ErrorKind::BadParams, "give exactly one of --family KIND L or --set A");
  }
  return o.family.empty() ? verify_set(o, g, out) : verify_family(o, g, out);
}

// --- conjecture --------------------------------------------------------

struct ConjectureOpts {
  Amount L = 1;
  Amount M = 1;
  Amount n_max = 2000;
  Amount oracle_n = 120;
};

int cmd_conjecture(const ConjectureOpts& o, const Globals& g, std::ostream& out) {
  const Amount oracle_n = std::min({o.oracle_n, o.n_max, g.max_n});
  const ConjectureReport r = conjecture_check(o.L, o.M, o.n_max, oracle_n);
  out << "A={" << r.L << ".." << r.M << "}, fI/fII checked for n <= " << r.n_max << '\n';
  if (r.theta) {
    out << "theta=" << *r.theta << '\n';
    out << "bound 5(M-L)^2+2 = " << r.theta_bound << ": " << (r.bound_holds ? "holds" : "violated")
        << '\n';
    if (r.special_case_applies) {
      out << "M >= 2L, expected theta = " << 2 * (r.L + 1) << ": "
          << (r.special_case_holds ? "holds" : "violated") << '\n';
    } else {
      out << "M < 2L, special case not applicable\n";
    }
  } else {
    out << "theta: none detected within n <= " << r.n_max << '\n';
  }
  out << "critical states with n <= " << r.oracle_n << ": " << r.critical_states
      << ", rule disagreements: " << r.x_disagreements << '\n';
  for (const auto& s : r.counterexamples) out << "counterexample: " << s.to_string() << '\n';
  return 0;
}

// --- play --------------------------------------------------------------

struct PlayOpts {
  std::string moves;
  Amount n = 0;
  std::string d = "UF";
  std::string e = "UF";
  std::string human = "I";
};

int cmd_play(const PlayOpts& o, const Globals& g, std::istream& in, std::ostream& out) {
  const MoveSet moves = parse_move_set(o.moves);
  if (o.human != "I" && o.human != "II") throw Error(ErrorKind::BadParams, "--human must be I or II");
  if (o.n < 0) throw Error(ErrorKind::BadParams, "n must be non-negative");
  const Engine engine(moves, g.max_n);
  CashState state{o.n, parse_funds(o.d), parse_funds(o.e)};
  bool player_one = true;  // whose turn, by root label
  const auto name = [](bool one) { return one ? "Player I" : "Player II"; };

  while (true) {
    const bool human_turn = (o.human == "I") == player_one;
    const Decision decision = engine.decide(state);
    out << state.to_string() << ' ' << name(player_one) << " to move, region "
        << to_string(decision.region) << '\n';
    const auto legal = legal_moves(moves, state);
    if (legal.empty()) {
      out << name(player_one) << " cannot move. " << name(!player_one) << " wins\n";
      return 0;
    }
    Amount a = 0;
    if (human_turn) {
      while (true) {
        out << "your move (" << join(legal) << ", or resign): " << std::flush;
        std::string line;
        if (!std::getline(in, line) || line == "resign") {
          out << '\n' << name(player_one) << " resigns. " << name(!player_one) << " wins\n";
          return 0;
        }
        try {
          a = parse_amount(line, "move");
        } catch (const Error&) {
          a = 0;
        }
        if (std::find(legal.begin(), legal.end(), a) != legal.end()) break;
        out << "illegal move '" << line << "'\n";
      }
    } else {
      a = *engine.engine_move(state);
      out << name(player_one) << " removes " << a << '\n';
    }
    state = apply_move(moves, state, a);
    player_one = !player_one;
  }
}

// --- appendix ----------------------------------------------------------

struct AppendixOpts {
  Amount k_max = 12;
  bool show_irregular = false;
};

int cmd_appendix(const AppendixOpts& o, std::ostream& out) {
  const AppendixReport r = appendix_check(o.k_max);
  out << "A={3,5,6,10,11}, congruence formulas for 4 <= k <= " << r.k_max << '\n';
  for (const auto& m : r.mismatches) out << "mismatch: " << m.to_string() << '\n';
  for (std::size_t i = 0; i < 16; ++i) {
    const auto show = [&](const char* label, bool ok, const std::optional<Linear>& fit) {
      if (ok) return;
      out << label << "(16k+" << i << ") computed: ";
      if (fit) {
        out << fit->slope << "k" << (fit->intercept < 0 ? "" : "+") << fit->intercept << '\n';
      } else {
        out << "not linear in k\n";
      }
    };
    show("fI", r.mover_matches[i], r.fitted_mover[i]);
    show("fII", r.opponent_matches[i], r.fitted_opponent[i]);
  }
  if (o.show_irregular) {
    for (std::size_t n = 0; n < r.irregular.size(); ++n) {
      out << "n=" << n << " fI=" << r.irregular[n].first << " fII=" << r.irregular[n].second << '\n';
    }
  }
  out << r.formulas_matched() << "/32 formulas match\n" << describe_pass(r.passed()) << '\n';
  return r.passed() ? 0 : 1;
}

}  // namespace

MoveSet parse_move_set(std::string_view text) {
  std::vector<Amount> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    values.push_back(parse_amount(text.substr(pos, comma - pos), "move value"));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return MoveSet::create(values);
}

Funds parse_funds(std::string_view text) {
  if (text == "UF") return Funds::unlimited();
  return Funds::finite(parse_amount(text, "funds"));
}

Amount default_max_stones() {
  if (const char* env = std::getenv("NIMCASH_MAX_N")) {
    try {
      const Amount v = parse_amount(env, "NIMCASH_MAX_N");
      if (v > 0) return v;
    } catch (const Error&) {
    }
  }
  return kDefaultMaxStones;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"NIM with cash: solver, threshold tables and family checks", "nimcash"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  g.max_n = default_max_stones();
  app.add_option("--max-n", g.max_n, "Largest pile for exact tables (env NIMCASH_MAX_N)")
      ->check(CLI::PositiveNumber);

  SolveOpts solve;
  auto* s = app.add_subcommand("solve", "Winner, region and winning moves of a state");
  s->add_option("-A,--set", solve.moves, "Move set, e.g. 1,3,4")->required();
  s->add_option("-n", solve.n, "Stones")->required();
  s->add_option("-d", solve.d, "Funds of the player to move, or UF");
  s->add_option("-e", solve.e, "Funds of the other player, or UF");
  s->add_flag("--explain", solve.explain, "Show which rule decided the state");

  TableOpts table;
  auto* t = app.add_subcommand("table", "Threshold rows, or winner records with --d-max/--e-max");
  t->add_option("-A,--set", table.moves, "Move set")->required();
  t->add_option("--n-max", table.n_max, "Rows for 1 <= n <= N");
  t->add_option("--d-max", table.d_max, "Emit winner records with d up to this");
  t->add_option("--e-max", table.e_max, "Emit winner records with e up to this");
  t->add_option("--format", table.format)->check(CLI::IsMember({"csv", "json"}));
  t->add_option("--out", table.out_path, "Write to a file instead of stdout");

  PeriodOpts period;
  auto* p = app.add_subcommand("period", "Detect a cash period");
  p->add_option("-A,--set", period.moves, "Move set")->required();
  p->add_option("--m-max", period.m_max, "Largest period tried");
  p->add_option("--n-check", period.n_check, "Piles compared");
  p->add_option("--offset", period.offset, "Extra warm-up beyond max(A)");

  VerifyOpts verify;
  auto* v = app.add_subcommand("verify", "Check a solution set");
  v->add_option("--family", verify.family, "KIND L with KIND in oneL, oneLL-odd, oneLL-even")
      ->expected(2);
  v->add_option("--set", verify.set, "Move set whose solution set is induced from the oracle");
  v->add_option("--X", verify.x, "Solution set source for --set (induced)");
  v->add_option("--rule", verify.rule, "closed or printed (odd family)")
      ->check(CLI::IsMember({"closed", "printed"}));
  v->add_option("--box", verify.box, "Closure box B (default 10L, or 10 for --set)");
  v->add_option("--oracle-box", verify.oracle_box, "Compare with the exact table for n <= N");
  v->add_option("--n-check", verify.n_check, "Piles used for period detection with --set");

  ConjectureOpts conj;
  auto* c = app.add_subcommand("conjecture", "Offset and solution-set sweep for A={L..M}");
  c->add_option("L", conj.L)->required()->check(CLI::PositiveNumber);
  c->add_option("M", conj.M)->required()->check(CLI::PositiveNumber);
  c->add_option("--n-max", conj.n_max, "Piles scanned for the offset");
  c->add_option("--oracle-n", conj.oracle_n, "Piles compared with the exact table");

  PlayOpts play;
  auto* pl = app.add_subcommand("play", "Play against the engine");
  pl->add_option("-A,--set", play.moves, "Move set")->required();
  pl->add_option("-n", play.n, "Stones")->required();
  pl->add_option("-d", play.d, "Funds of Player I, or UF");
  pl->add_option("-e", play.e, "Funds of Player II, or UF");
  pl->add_option("--human", play.human, "Side played by the human")
      ->check(CLI::IsMember({"I", "II"}));

  AppendixOpts appendix;
  auto* ap = app.add_subcommand("appendix", "Check the congruence table for {3,5,6,10,11}");
  ap->add_option("--k-max", appendix.k_max, "Largest k compared");
  ap->add_flag("--show-irregular", appendix.show_irregular, "Print fI/fII for n <= 63");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (s->parsed()) return cmd_solve(solve, g, out);
    if (t->parsed()) return cmd_table(table, g, out);
    if (p->parsed()) return cmd_period(period, out);
    if (v->parsed()) return cmd_verify(verify, g, out);
    if (c->parsed()) return cmd_conjecture(conj, g, out);
    if (pl->parsed()) return cmd_play(play, g, in, out);
    if (ap->parsed()) return cmd_appendix(appendix, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace nimcash
