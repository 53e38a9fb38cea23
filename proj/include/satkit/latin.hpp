#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "satkit/cnf.hpp"
#include "satkit/solver.hpp"

namespace satkit {

struct SquarePair {
  int n = 0;
  // a[i-1][j-1], b[i-1][j-1] in 1..n.
  std::vector<std::vector<int>> a;
  std::vector<std::vector<int>> b;
  bool operator==(const SquarePair&) const = default;
};

struct LatinKey {
  char square = 'A';  // 'A' or 'B'
  int i = 0;
  int j = 0;
  int k = 0;
  auto operator<=>(const LatinKey&) const = default;
};

struct GraecoEncoding {
  CnfFormula formula;
  // A(i,j,k) has id (i-1)n^2 + (j-1)n + k; B(i,j,k) follows at offset n^3.
  VarMap<LatinKey> vars;
};

// In order: per cell of A then of B, the at-least-one clause and the pairwise
// at-most-one clauses; row and column exclusion for A then B; orthogonality,
// one Tseitin-encoded disjunction of (A(i,j,k) & B(i,j,l)) per (k, l); then
// the symmetry units A(1,i,i), B(1,i,i), A(i,1,i).
GraecoEncoding encode_graeco(int n);
SquarePair decode_graeco(const GraecoEncoding& enc, int n, const Model& m);

// Throws SolveInterrupted when the budget in `opts` runs out.
std::optional<SquarePair> solve_graeco(int n, const SolverOptions& opts = {});

// Both squares Latin and all n^2 pairs (a, b) distinct. No solver involved.
bool validate_graeco(const SquarePair& p);

// Two digit matrices separated by a blank line.
std::string render_graeco(const SquarePair& p);

}  // namespace satkit
