// Command dispatch for the nimcash tool. Streams are injected so commands
// can be driven from tests.
#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "nimcash/game_core.hpp"

namespace nimcash {

/// Exit codes: 0 success, 1 a check reported failure, 2 bad input or a
/// resource limit. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

/// "1,3,4" -> {1,3,4}. Throws BadParams on malformed text; MoveSet rules
/// apply afterwards.
MoveSet parse_move_set(std::string_view text);

/// "UF" or a non-negative integer.
Funds parse_funds(std::string_view text);

/// NIMCASH_MAX_N when set to a positive integer, else the built-in bound.
Amount default_max_stones();

}  // namespace nimcash
