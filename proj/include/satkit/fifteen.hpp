#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satkit/cnf.hpp"
#include "satkit/solver.hpp"

namespace satkit {

// Square of a sliding-tile board, 1-based, row from the top.
struct TilePos {
  int row = 0;
  int col = 0;
  auto operator<=>(const TilePos&) const = default;
};

// side x side board holding a permutation of 1..side^2, row-major; the value
// side^2 is the blank. side is 4 for the 15-puzzle, 3 for the 8-puzzle.
class TileBoard {
 public:
  // Throws std::invalid_argument unless side is 3 or 4 and tiles is a permutation.
  TileBoard(int side, std::vector<int> tiles);
  static TileBoard goal(int side);

  int side() const { return side_; }
  int blank() const { return side_ * side_; }
  int at(TilePos p) const { return tiles_[index(p)]; }
  const std::vector<int>& tiles() const { return tiles_; }
  TilePos blank_pos() const;
  bool is_goal() const;

  std::size_t index(TilePos p) const { return static_cast<std::size_t>((p.row - 1) * side_ + (p.col - 1)); }
  bool operator==(const TileBoard&) const = default;

 private:
  int side_;
  std::vector<int> tiles_;
};

// 9 or 16 integers separated by whitespace or commas, row-major; 0 is
// accepted for the blank. Throws ParseError.
TileBoard parse_board(std::string_view text);
// Rows of right-aligned numbers, blank shown as '.'.
std::string render_board(const TileBoard& b);
// Space-separated integers with the blank written as 0.
std::string board_to_string(const TileBoard& b);

// Each move names the square of the tile that slides into the blank.
struct Plan {
  std::vector<TilePos> moves;
  std::size_t length() const { return moves.size(); }
  bool operator==(const Plan&) const = default;
};

class IllegalMove : public std::invalid_argument {
 public:
  IllegalMove(std::size_t step, const std::string& what)
      : std::invalid_argument("move " + std::to_string(step) + ": " + what), step_(step) {}
  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

// Applies slides mechanically. Throws IllegalMove (1-based step) when a move
// is off the board or not adjacent to the blank.
TileBoard simulate(const TileBoard& start, const Plan& plan);

// Inversion parity of the row-major sequence (blank included) equals the
// parity of the blank's Manhattan distance to the bottom-right corner.
bool parity_solvable(const TileBoard& b);

struct TileKey {
  int row = 0;
  int col = 0;
  int tile = 0;
  int t = 0;
  auto operator<=>(const TileKey&) const = default;
};

struct FifteenEncoding {
  CnfFormula formula;
  int horizon = 0;
  // S(i, j, n, t) has id ((t * side + i - 1) * side + j - 1) * side^2 + n.
  VarMap<TileKey> vars;
};

// Time-indexed encoding for t = 0..m:
//   units fixing t = 0 to `start`;
//   for each t: at least one tile per square, S(i,j,n,t) => ~S(i,j,n',t);
//   for each t < m: notEqualOrAdjacentToBlank(i,j,t) => doesNotChange(i,j,t),
//     S(i,j,blank,t) => OR over (k,l) adjacent of oneTileMoved(i,j,k,l,t),
//     where oneTileMoved also carries the tile at (k,l) into (i,j);
//   OR over t = window_lo..m of boardSolved(t), window_lo defaulting to max(0, m-4).
// The non-clausal parts go through the Tseitin encoder. Requires 1 <= m <= 80.
FifteenEncoding encode_fifteen(const TileBoard& start, int m, std::optional<int> window_lo = std::nullopt);

// Board at every timestep of a model.
std::vector<TileBoard> decode_states(const FifteenEncoding& enc, int side, const Model& m);

struct HorizonTry {
  int horizon = 0;
  bool sat = false;
  bool operator==(const HorizonTry&) const = default;
};

struct FifteenResult {
  std::optional<Plan> plan;
  // The 5, 10, ... schedule.
  std::vector<HorizonTry> horizons;
  // Exact goal times probed inside the first satisfiable window.
  std::vector<HorizonTry> refinements;
};

inline constexpr int kMaxHorizon = 80;

// Horizons 5, 10, ..., max_horizon. A goal start gives the empty plan with no
// solver call; a start of the wrong parity gives no plan with no solver call.
// The plan runs up to the first solved timestep and is checked with simulate.
// Inside the first satisfiable window, shorter exact goal times of the right
// parity are then tried in increasing order, so the plan is as short as any.
// Throws SolveInterrupted when the budget in `opts` runs out.
FifteenResult solve_fifteen(const TileBoard& start, const SolverOptions& opts = {}, int max_horizon = kMaxHorizon);

// Random walk of `moves` slides from the goal that never undoes the previous slide.
TileBoard scramble(int side, int moves, std::uint64_t seed);

}  // namespace satkit
