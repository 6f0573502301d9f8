#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "shogi/board.hpp"

namespace shogi::cli {

/// Runs one command. `args` excludes the program name. Returns the exit
/// code: 0 success, 2 bad input (flags, files), 1 internal error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Named movesets accepted by `fragility --substitute kind=<name>`:
/// reverse-chariot, silver-sideways, chess-knight, or any standard kind name.
std::optional<Moveset> named_moveset(const std::string& name);

}  // namespace shogi::cli
