#include "nimcash/game_core.hpp"

#include <algorithm>
#include <sstream>

namespace nimcash {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::NonPositiveValue: return "NonPositiveValue";
    case ErrorKind::DuplicateValue: return "DuplicateValue";
    case ErrorKind::IllegalMove: return "IllegalMove";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::WrongRegion: return "WrongRegion";
    case ErrorKind::BadParams: return "BadParams";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

MoveSet MoveSet::create(std::vector<Amount> values) {
  if (values.empty()) throw Error(ErrorKind::EmptySet, "move set must not be empty");
  for (Amount v : values) {
    if (v < 1) {
      throw Error(ErrorKind::NonPositiveValue,
                  "move " + std::to_string(v) + " is not a positive integer");
    }
  }
  std::sort(values.begin(), values.end());
  auto dup = std::adjacent_find(values.begin(), values.end());
  if (dup != values.end()) {
    throw Error(ErrorKind::DuplicateValue, "move " + std::to_string(*dup) + " listed twice");
  }
  return MoveSet(std::move(values));
}

MoveSet new_move_set(std::vector<Amount> values) { return MoveSet::create(std::move(values)); }

bool MoveSet::contains(Amount a) const noexcept {
  return std::binary_search(values_.begin(), values_.end(), a);
}

std::size_t MoveSet::index_of(Amount a) const {
  auto it = std::lower_bound(values_.begin(), values_.end(), a);
  if (it == values_.end() || *it != a) {
    throw Error(ErrorKind::IllegalMove, std::to_string(a) + " is not in " + to_string());
  }
  return static_cast<std::size_t>(it - values_.begin());
}

std::string MoveSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(values_[i]);
  }
  return out + "}";
}

Funds Funds::finite(Amount dollars) {
  if (dollars < 0) {
    throw Error(ErrorKind::BadParams, "funds must be non-negative, got " + std::to_string(dollars));
  }
  return Funds(dollars);
}

Amount Funds::dollars() const {
  if (unlimited_) throw Error(ErrorKind::BadParams, "unlimited funds have no dollar amount");
  return dollars_;
}

Amount Funds::clamp(Amount stones) const noexcept {
  return unlimited_ ? stones : std::min(dollars_, stones);
}

std::string Funds::to_string() const {
  return unlimited_ ? std::string("UF") : std::to_string(dollars_);
}

CashState CashState::clamped() const {
  return {stones, Funds::finite(mover.clamp(stones)), Funds::finite(opponent.clamp(stones))};
}

std::string CashState::to_string() const {
  std::ostringstream out;
  out << '(' << stones << ';' << mover.to_string() << ',' << opponent.to_string() << ')';
  return out.str();
}

std::string_view to_string(Winner w) { return w == Winner::Mover ? "mover" : "opponent"; }
std::string_view to_string(Player p) { return p == Player::I ? "I" : "II"; }

std::vector<Amount> legal_moves(const MoveSet& moves, const CashState& state) {
  std::vector<Amount> out;
  for (Amount a : moves.values()) {
    if (a > state.stones) break;
    if (state.mover.covers(a)) out.push_back(a);
  }
  return out;
}

CashState apply_move(const MoveSet& moves, const CashState& state, Amount a) {
  if (!moves.contains(a) || a > state.stones || !state.mover.covers(a)) {
    throw Error(ErrorKind::IllegalMove,
                "cannot remove " + std::to_string(a) + " from " + state.to_string() + " with " +
                    moves.to_string());
  }
  Funds paid = state.mover.is_unlimited() ? Funds::unlimited()
                                          : Funds::finite(state.mover.dollars() - a);
  return {state.stones - a, state.opponent, paid};
}

bool is_terminal_loss(const MoveSet& moves, const CashState& state) {
  return state.stones < moves.min() || !state.mover.covers(moves.min());
}

}  // namespace nimcash
