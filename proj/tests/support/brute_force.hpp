// Test-only reference solver: plain memoised recursion over the raw rules,
// no clamping of funds and no shared code with the library's tables.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

namespace brute {

using Int = std::int64_t;
using Cash = std::optional<Int>;  // nullopt means unlimited

class Solver {
 public:
  explicit Solver(std::vector<Int> moves) : moves_(std::move(moves)) {}

  // True iff the player to move wins (n; d, e).
  bool mover_wins(Int n, Cash d, Cash e) {
    const auto key = std::make_tuple(n, d.value_or(-1), e.value_or(-1));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool win = false;
    for (Int a : moves_) {
      if (a > n || (d && a > *d)) continue;
      Cash left = d ? Cash(*d - a) : Cash();
      if (!mover_wins(n - a, e, left)) {
        win = true;
        break;
      }
    }
    memo_.emplace(key, win);
    return win;
  }

  std::vector<Int> winning_moves(Int n, Cash d, Cash e) {
    std::vector<Int> out;
    for (Int a : moves_) {
      if (a > n || (d && a > *d)) continue;
      if (!mover_wins(n - a, e, d ? Cash(*d - a) : Cash())) out.push_back(a);
    }
    return out;
  }

  // Standard game: no funds at all.
  bool standard_mover_wins(Int n) { return mover_wins(n, Cash(), Cash()); }

  // Least d with a mover win at (n; d, UF), or n + 1 if none.
  Int least_cash(Int n) {
    for (Int d = 0; d <= n; ++d) {
      if (mover_wins(n, d, Cash())) return d;
    }
    return n + 1;
  }

 private:
  std::vector<Int> moves_;
  std::map<std::tuple<Int, Int, Int>, bool> memo_;
};

}  // namespace brute
