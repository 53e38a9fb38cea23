#pragma once

#include <string>
#include <string_view>

namespace fixtures {

// Inkala's puzzle: the 21 givens S(1,9,8), S(2,1,9), ..., S(9,3,8).
inline constexpr std::string_view kInkala =
    "........8"
    "9....57.."
    ".81....3."
    ".5.1...6."
    "....4.9.."
    "....57..."
    "4...7.2.."
    ".163....."
    "..8......";

// Its unique completion, found by the test-side backtracker.
inline constexpr std::string_view kInkalaSolution =
    "745231698932865741681794532359182467127643985864957123493578216516329874278416359";

// kInkala without the given at (5,7) and with (4,2) changed from 5 to 3: 20
// givens, no two in conflict, no completion (confirmed by the backtracker).
inline constexpr std::string_view kContradiction =
    "........8"
    "9....57.."
    ".81....3."
    ".3.1...6."
    "....4...."
    "....57..."
    "4...7.2.."
    ".163....."
    "..8......";

// Start board whose shortest solution is 15 moves, blank written as 0.
inline constexpr std::string_view kFifteenStart = "5 1 7 3 9 2 11 4 13 6 15 8 0 10 14 12";

// An 8-queens solution: Q(1,5), Q(2,7), Q(3,2), Q(4,6), Q(5,3), Q(6,1), Q(7,4), Q(8,8).
inline constexpr int kEightQueens[8][2] = {{1, 5}, {2, 7}, {3, 2}, {4, 6}, {5, 3}, {6, 1}, {7, 4}, {8, 8}};

inline std::string data_path(std::string_view rel) { return std::string(SATKIT_DATA_DIR) + "/" + std::string(rel); }

}  // namespace fixtures
