// Row types shared by the command-line commands and their CSV/JSON writers.
#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nimcash/engine.hpp"
#include "nimcash/game_core.hpp"

namespace nimcash {

/// One solved state. Funds are the clamped values the solver saw.
struct OutputRecord {
  Amount n = 0;
  Amount d = 0;
  Amount e = 0;
  Region region = Region::Critical;
  Winner winner = Winner::Opponent;
  std::vector<Amount> winning_moves;
  std::optional<CsTriple> cs;
};

OutputRecord make_record(const Engine& engine, const CashState& state);

struct ThresholdRow {
  Amount n = 0;
  Winner standard = Winner::Opponent;
  Amount mover = 0;     // fI
  Amount opponent = 0;  // fII
  PoorThresholds poor;
};

enum class Format { Csv, Json };

void write_csv(std::ostream& out, const std::vector<ThresholdRow>& rows);
void write_csv(std::ostream& out, const std::vector<OutputRecord>& rows);
void write_json(std::ostream& out, const std::vector<ThresholdRow>& rows);
void write_json(std::ostream& out, const std::vector<OutputRecord>& rows);

/// "I" for a mover win, "II" otherwise, as seen from the state's root.
std::string player_label(Winner w);

}  // namespace nimcash
