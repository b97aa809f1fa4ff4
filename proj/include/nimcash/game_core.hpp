// Move sets, funds, and the mover-perspective cash state of one-pile NIM
// with per-move payments.
#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nimcash {

/// Stones and dollars share one integer type; every quantity is non-negative
/// except cost deltas and corresponding-state coordinates in transit.
using Amount = std::int64_t;

enum class ErrorKind {
  EmptySet,
  NonPositiveValue,
  DuplicateValue,
  IllegalMove,
  ResourceLimit,
  OutOfRange,
  WrongRegion,
  BadParams,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A finite set of allowed removal amounts, kept strictly increasing.
class MoveSet {
 public:
  /// Validates without reordering duplicates away: an empty list, a value
  /// below 1 or a repeated value is rejected. Input order is irrelevant.
  static MoveSet create(std::vector<Amount> values);
  static MoveSet create(std::initializer_list<Amount> values) {
    return create(std::vector<Amount>(values));
  }

  std::span<const Amount> values() const noexcept { return values_; }
  Amount min() const noexcept { return values_.front(); }
  Amount max() const noexcept { return values_.back(); }
  std::size_t size() const noexcept { return values_.size(); }
  bool contains(Amount a) const noexcept;
  /// Position of `a` in values(); requires contains(a).
  std::size_t index_of(Amount a) const;

  std::string to_string() const;  // "{1,3,4}"

  friend bool operator==(const MoveSet&, const MoveSet&) = default;

 private:
  explicit MoveSet(std::vector<Amount> values) : values_(std::move(values)) {}
  std::vector<Amount> values_;
};

MoveSet new_move_set(std::vector<Amount> values);

/// A player's budget: a finite number of dollars or unlimited ("UF").
class Funds {
 public:
  static Funds finite(Amount dollars);
  static Funds unlimited() noexcept { return Funds(); }

  bool is_unlimited() const noexcept { return unlimited_; }
  Amount dollars() const;  // throws BadParams when unlimited
  /// Budget as seen by a game with `stones` stones: min(dollars, stones).
  Amount clamp(Amount stones) const noexcept;
  bool covers(Amount cost) const noexcept { return unlimited_ || cost <= dollars_; }

  std::string to_string() const;  // "UF" or the decimal amount

  friend bool operator==(const Funds&, const Funds&) = default;

 private:
  Funds() = default;
  explicit Funds(Amount dollars) : unlimited_(false), dollars_(dollars) {}
  bool unlimited_ = true;
  Amount dollars_ = 0;
};

/// (n; d, e): stones on the board, funds of the player to move, funds of
/// the other player.
struct CashState {
  Amount stones = 0;
  Funds mover = Funds::unlimited();
  Funds opponent = Funds::unlimited();

  static CashState of(Amount n, Amount d, Amount e) {
    return {n, Funds::finite(d), Funds::finite(e)};
  }

  /// Finite funds capped at the stone count; unlimited becomes n as well.
  CashState clamped() const;
  std::string to_string() const;  // "(14;9,9)"

  friend bool operator==(const CashState&, const CashState&) = default;
};

/// Outcome relative to the state it was computed for.
enum class Winner { Mover, Opponent };

/// Root labels; the mover of a root state is Player I.
enum class Player { I, II };

/// Whose win a miserly query asks about, relative to the queried state.
enum class Side { Mover, Opponent };

constexpr Winner flip(Winner w) noexcept {
  return w == Winner::Mover ? Winner::Opponent : Winner::Mover;
}
constexpr Player as_root_player(Winner w) noexcept {
  return w == Winner::Mover ? Player::I : Player::II;
}
std::string_view to_string(Winner w);
std::string_view to_string(Player p);  // "I" / "II"

/// { a in A : a <= n and a <= d }, ascending.
std::vector<Amount> legal_moves(const MoveSet& moves, const CashState& state);

/// (n; d, e) -> (n - a; e, d - a). Throws IllegalMove unless a is legal.
CashState apply_move(const MoveSet& moves, const CashState& state, Amount a);

/// True iff the mover has no legal move: n < a1 or d < a1.
bool is_terminal_loss(const MoveSet& moves, const CashState& state);

}  // namespace nimcash
