#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satkit/cnf.hpp"
#include "satkit/solver.hpp"

namespace satkit {

// Raw 9x9 contents, row-major, 0 for blank. May contain rule conflicts
// (player progress does); Grid is the checked form.
using Cells = std::array<std::uint8_t, 81>;

// 1-based row and column.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// 81 characters row-major: 1-9 for digits, '.' or '0' for blanks. Whitespace
// between characters is ignored. Throws ParseError.
Cells parse_cells(std::string_view text);
std::string cells_to_string(const Cells& cells);

// Every cell holding a digit repeated in its row, column or block, sorted.
std::vector<Cell> conflicting_cells(const Cells& cells);

class Grid {
 public:
  Grid() { cells_.fill(0); }
  // Throws std::invalid_argument if two givens conflict or a value is > 9.
  explicit Grid(const Cells& cells);
  static Grid parse(std::string_view text) { return Grid(parse_cells(text)); }

  int at(int row, int col) const { return cells_[index(row, col)]; }
  const Cells& cells() const { return cells_; }
  int given_count() const;
  bool is_complete() const { return given_count() == 81; }
  // Every digit of `base` is present here with the same value.
  bool extends(const Grid& base) const;
  std::string to_string() const { return cells_to_string(cells_); }

  static std::size_t index(int row, int col) { return static_cast<std::size_t>(9 * (row - 1) + (col - 1)); }

  bool operator==(const Grid&) const = default;

 private:
  Cells cells_;
};

// Independent rule checker: complete and free of conflicts.
bool is_valid_solution(const Grid& g);

struct SudokuKey {
  int row = 0;
  int col = 0;
  int digit = 0;
  auto operator<=>(const SudokuKey&) const = default;
};

struct SudokuEncoding {
  CnfFormula formula;
  // S(i, j, k) has id 81(i-1) + 9(j-1) + k.
  VarMap<SudokuKey> vars;
};

// Clauses, in order: S(i,j,1) | ... | S(i,j,9) per cell; ~S(a,k) | ~S(b,k) once
// per unordered pair of distinct cells a < b sharing a row, column or block;
// if cell_amo, ~S(c,k) | ~S(c,k') for k < k'; then a unit per given.
SudokuEncoding encode_sudoku(const Grid& g, bool cell_amo = false);
Grid decode_sudoku(const Model& m);

// Throws SolveInterrupted when the budget in `opts` runs out.
std::optional<Grid> solve_sudoku(const Grid& g, const SolverOptions& opts = {}, bool cell_amo = false);

class UnsatisfiableGrid : public std::invalid_argument {
 public:
  UnsatisfiableGrid() : std::invalid_argument("grid has no completion") {}
};

// Solve, block the 81 true cell variables of the model, solve again.
// Throws UnsatisfiableGrid if g has no completion at all.
bool is_unique(const Grid& g, const SolverOptions& opts = {});

// True iff `solution` is the only completion of `puzzle`, using the blocking
// clause over solution's 81 true variables. Precondition: solution extends puzzle.
bool unique_completion(const Grid& puzzle, const Grid& solution, const SolverOptions& opts = {});

struct GenerationResult {
  Grid puzzle;    // 50 givens
  Grid solution;  // the solution R the givens were drawn from
  std::pair<int, int> estimated_min_clues{20, 50};
  int attempts = 0;
  std::uint64_t seed = 0;
  // Cell indices (0..80) in the order givens are taken from the solution.
  std::array<int, 81> order{};
};

inline constexpr int kGeneratedGivens = 50;
inline constexpr int kMaxGenerationAttempts = 1000;

// Grid made of the first m cells of `order` taken from `solution`.
Grid prefix_puzzle(const Grid& solution, const std::array<int, 81>& order, int m);

// One SplitMix64 seeded with `seed` supplies, per attempt, the solver seed for
// the empty-grid solve (rnd_init_act on) and then the cell permutation. The
// uniqueness re-check runs with that same attempt seed. Budgets in `opts`
// apply to every solve. Bounds are filled in by estimate_min_clues.
GenerationResult generate(std::uint64_t seed, const SolverOptions& opts = {});

// Binary search over prefixes of r.order: l = 20, h = 50, m = round((l+h)/2),
// h = m if the first m givens are unique else l = m, until h - l <= 1.
std::pair<int, int> estimate_min_clues(const GenerationResult& r, const SolverOptions& opts = {});

struct Hint {
  Cell cell;
  int digit = 0;
  bool correction = false;  // progress holds a wrong digit at `cell`
  bool operator==(const Hint&) const = default;
};

class NotUnique : public std::invalid_argument {
 public:
  NotUnique() : std::invalid_argument("puzzle does not have a unique solution") {}
};

// First cell (row-major) whose digit disagrees with the unique solution, as a
// correction; otherwise the first empty cell; nullopt once progress is the
// solution. Throws std::invalid_argument if progress does not keep the
// puzzle's givens, UnsatisfiableGrid or NotUnique for a bad puzzle.
std::optional<Hint> hint(const Grid& puzzle, const Cells& progress, const SolverOptions& opts = {});

enum class ProgressStatus { solved, consistent, conflict };
const char* status_name(ProgressStatus s);

struct ProgressCheck {
  ProgressStatus status = ProgressStatus::consistent;
  std::vector<Cell> conflicts;
};

// Rule check of the player's progress, no solver involved. Throws
// std::invalid_argument if progress does not keep the puzzle's givens.
ProgressCheck check_progress(const Grid& puzzle, const Cells& progress);

}  // namespace satkit
