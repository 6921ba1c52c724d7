#pragma once

#include <string>
#include <vector>

#include "kirbyspin/moves.hpp"

namespace kirby {

// Line-oriented move-script text format.  One statement per line, '#' starts
// a comment, blank lines ignored:
//
//   blowup +1 as e0
//   blowdown e0
//   slide K1 + e0
//   slide K1 - e0
//   macro blowup-across K1 x 3 -1 as e0
//   macro remove-torus K1 n 5
//   assert char
//   assert empty-char
//   assert b2 9
//   assert sigma 8
//   assert c = {K1,K2}
//
// Component names are identifiers: [A-Za-z_][A-Za-z0-9_]*.

std::vector<Move> parse_script(const std::string& text);

std::string print_move(const Move& m);
std::string print_script(const std::vector<Move>& script);

}  // namespace kirby
