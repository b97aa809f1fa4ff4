#include "nimcash/output.hpp"

#include "json.hpp"

namespace nimcash {
namespace {

std::string join(const std::vector<Amount>& values, char sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

}  // namespace

std::string player_label(Winner w) { return std::string(to_string(as_root_player(w))); }

OutputRecord make_record(const Engine& engine, const CashState& state) {
  const CashState s = state.clamped();
  const Decision decision = engine.decide(s);
  OutputRecord r;
  r.n = s.stones;
  r.d = s.mover.dollars();
  r.e = s.opponent.dollars();
  r.region = decision.region;
  r.winner = decision.winner;
  r.winning_moves = engine.winning_moves(s);
  r.cs = decision.cs;
  return r;
}

void write_csv(std::ostream& out, const std::vector<ThresholdRow>& rows) {
  out << "n,standard,fI,fII,gI,gII\n";
  for (const auto& r : rows) {
    out << r.n << ',' << player_label(r.standard) << ',' << r.mover << ',' << r.opponent << ','
        << r.poor.mover << ',' << r.poor.opponent << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<OutputRecord>& rows) {
  out << "n,d,e,region,winner,winning_moves,cs\n";
  for (const auto& r : rows) {
    // moves are space separated so the column needs no quoting
    out << r.n << ',' << r.d << ',' << r.e << ',' << to_string(r.region) << ','
        << player_label(r.winner) << ',' << join(r.winning_moves, ' ') << ','
        << (r.cs ? '"' + r.cs->to_string() + '"' : std::string()) << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<ThresholdRow>& rows) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    doc.push_back({{"n", r.n},
                   {"standard", player_label(r.standard)},
                   {"fI", r.mover},
                   {"fII", r.opponent},
                   {"gI", r.poor.mover},
                   {"gII", r.poor.opponent}});
  }
  out << doc.dump(2) << '\n';
}

void write_json(std::ostream& out, const std::vector<OutputRecord>& rows) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json cs = nullptr;
    if (r.cs) cs = {r.cs->residue, r.cs->mover_slack, r.cs->opponent_slack};
    doc.push_back({{"n", r.n},
                   {"d", r.d},
                   {"e", r.e},
                   {"region", std::string(to_string(r.region))},
                   {"winner", player_label(r.winner)},
                   {"winning_moves", r.winning_moves},
                   {"cs", cs}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace nimcash
