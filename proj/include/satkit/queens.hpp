#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "satkit/cnf.hpp"
#include "satkit/solver.hpp"

namespace satkit {

// Square (x, y), 1-based. x indexes rows in the ASCII rendering.
struct Square {
  int x = 0;
  int y = 0;
  auto operator<=>(const Square&) const = default;
};

struct QueensBoard {
  int n = 0;
  std::vector<Square> queens;  // sorted by x

  bool operator==(const QueensBoard&) const = default;
};

struct QueensEncoding {
  CnfFormula formula;
  VarMap<Square> vars;  // Q(x, y), allocated row-major: id = (x - 1) * n + y
};

// Clauses, in order: Q(1,j) | ... | Q(n,j) for each j; Q(i,1) | ... | Q(i,n)
// for each i; then ~Q(a) | ~Q(b) once for every unordered pair of squares a < b
// (row-major) that attack each other.
QueensEncoding encode_queens(int n);

// Throws SolveInterrupted if the budget in `opts` runs out.
std::optional<QueensBoard> solve_queens(int n, const SolverOptions& opts = {});

// Independent of the solver: n queens, in range, pairwise non-attacking.
bool validate_queens(const QueensBoard& board);

// Number of distinct solutions, stopping at `limit`.
std::size_t count_queens(int n, std::size_t limit, const SolverOptions& opts = {});

QueensBoard decode_queens(const QueensEncoding& enc, const Model& m);
std::string render_queens(const QueensBoard& board);

}  // namespace satkit
