#include <gtest/gtest.h>

#include <set>

#include "satkit/error.hpp"
#include "satkit/sudoku.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace satkit;

namespace {

const Grid& inkala() {
  static const Grid g = Grid::parse(fixtures::kInkala);
  return g;
}

std::vector<VarId> all_cell_vars() {
  std::vector<VarId> out;
  for (std::uint32_t v = 1; v <= 729; ++v) out.push_back(VarId{v});
  return out;
}

std::set<std::string> completions(const Grid& g, bool cell_amo, std::size_t limit) {
  const SudokuEncoding enc = encode_sudoku(g, cell_amo);
  const auto scope = all_cell_vars();
  std::set<std::string> out;
  for (const Model& m : enumerate(enc.formula, scope, limit)) {
    const Grid d = decode_sudoku(m);
    // Without cell_amo a model may set two digits in one cell; only count
    // the completions that decode to a proper grid.
    if (is_valid_solution(d)) out.insert(d.to_string());
  }
  return out;
}

// Progress with the cell at `idx` replaced.
Cells with_cell(Cells c, std::size_t idx, int digit) {
  c[idx] = static_cast<std::uint8_t>(digit);
  return c;
}

}  // namespace

TEST(SudokuGrid, ParseFormats) {
  const Cells a = parse_cells(fixtures::kInkala);
  std::string zeros(fixtures::kInkala);
  for (char& ch : zeros)
    if (ch == '.') ch = '0';
  EXPECT_EQ(parse_cells(zeros), a);
  std::string spaced;
  for (std::size_t i = 0; i < 81; ++i) {
    spaced += fixtures::kInkala[i];
    if (i % 9 == 8) spaced += '\n';
    else spaced += ' ';
  }
  EXPECT_EQ(parse_cells(spaced), a);
  EXPECT_EQ(cells_to_string(a), std::string(fixtures::kInkala));
  EXPECT_THROW(parse_cells("123"), ParseError);
  EXPECT_THROW(parse_cells(std::string(80, '.') + "x"), ParseError);
  EXPECT_THROW(parse_cells(std::string(82, '.')), ParseError);
}

TEST(SudokuGrid, RejectsConflictingGivens) {
  std::string row = "55" + std::string(79, '.');
  EXPECT_THROW(Grid::parse(row), std::invalid_argument);
  std::string col(81, '.');
  col[0] = col[9] = '3';
  EXPECT_THROW(Grid::parse(col), std::invalid_argument);
  std::string box(81, '.');
  box[0] = box[10] = '3';
  EXPECT_THROW(Grid::parse(box), std::invalid_argument);
  EXPECT_EQ(inkala().given_count(), 21);
}

TEST(SudokuGrid, ConflictingCellsListsBoth) {
  Cells c{};
  c[Grid::index(4, 2)] = 7;
  c[Grid::index(4, 8)] = 7;
  c[Grid::index(1, 1)] = 7;
  EXPECT_EQ(conflicting_cells(c), (std::vector<Cell>{{4, 2}, {4, 8}}));
}

TEST(SudokuEncode, Shape) {
  const SudokuEncoding enc = encode_sudoku(inkala());
  EXPECT_EQ(enc.formula.num_vars(), 729u);
  EXPECT_EQ(enc.vars.at({1, 1, 1}).index, 1u);
  EXPECT_EQ(enc.vars.at({2, 3, 4}).index, 81u + 18u + 4u);
  // 81 cell clauses, 810 peer pairs x 9 digits, 21 units.
  EXPECT_EQ(enc.formula.num_clauses(), 81u + 810u * 9u + 21u);
  EXPECT_EQ(encode_sudoku(inkala(), true).formula.num_clauses(), 81u + 810u * 9u + 81u * 36u + 21u);
  const Clause first_unit = enc.formula.clauses()[81 + 810 * 9];
  EXPECT_EQ(first_unit, Clause({pos(enc.vars.at({1, 9, 8}))}));
  EXPECT_EQ(enc.formula.clauses().back(), Clause({pos(enc.vars.at({9, 3, 8}))}));
}

TEST(SudokuSolve, Inkala) {
  const auto s = solve_sudoku(inkala());
  ASSERT_TRUE(s.has_value());
  EXPECT_TRUE(is_valid_solution(*s));
  EXPECT_TRUE(s->extends(inkala()));
  EXPECT_EQ(s->to_string(), std::string(fixtures::kInkalaSolution));
  EXPECT_EQ(*oracle::first_sudoku_solution(inkala().cells()), s->cells());
}

TEST(SudokuSolve, EmptyAndComplete) {
  const auto empty = solve_sudoku(Grid());
  ASSERT_TRUE(empty.has_value());
  EXPECT_TRUE(is_valid_solution(*empty));
  const Grid full = Grid::parse(fixtures::kInkalaSolution);
  EXPECT_EQ(*solve_sudoku(full), full);
}

TEST(SudokuSolve, ContradictionFixture) {
  const Grid g = Grid::parse(fixtures::kContradiction);
  EXPECT_EQ(g.given_count(), 20);
  EXPECT_EQ(oracle::count_sudoku_solutions(g.cells(), 1), 0);
  EXPECT_FALSE(solve_sudoku(g).has_value());
  EXPECT_FALSE(solve_sudoku(g, {}, true).has_value());
  EXPECT_THROW(is_unique(g), UnsatisfiableGrid);
}

TEST(SudokuSolve, CellAmoGivesSameAnswer) {
  EXPECT_EQ(*solve_sudoku(inkala(), {}, true), *solve_sudoku(inkala()));
}

TEST(SudokuSolve, CellAmoKeepsCompletionSets) {
  const Grid sol = Grid::parse(fixtures::kInkalaSolution);
  std::array<int, 81> order{};
  for (int i = 0; i < 81; ++i) order[static_cast<std::size_t>(i)] = (i * 37) % 81;
  const std::vector<Grid> fixtures_list{
      inkala(), Grid::parse(fixtures::kContradiction), sol,
      prefix_puzzle(sol, order, 30), prefix_puzzle(sol, order, 26)};
  for (const Grid& g : fixtures_list) {
    const auto with_amo = completions(g, true, 200);
    EXPECT_EQ(with_amo, completions(g, false, 2000));
    EXPECT_EQ(with_amo.size(), static_cast<std::size_t>(oracle::count_sudoku_solutions(g.cells(), 200)));
  }
}

TEST(SudokuUnique, Examples) {
  EXPECT_TRUE(is_unique(inkala()));
  EXPECT_EQ(oracle::count_sudoku_solutions(inkala().cells(), 2), 1);
  EXPECT_FALSE(is_unique(Grid()));
  EXPECT_TRUE(is_unique(Grid::parse(fixtures::kInkalaSolution)));
  const Grid sol = Grid::parse(fixtures::kInkalaSolution);
  EXPECT_TRUE(unique_completion(inkala(), sol));
}

TEST(SudokuUnique, AgreesWithBacktrackerOnThinnedPuzzles) {
  const Grid sol = Grid::parse(fixtures::kInkalaSolution);
  SplitMix64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    std::array<int, 81> order{};
    for (int i = 0; i < 81; ++i) order[static_cast<std::size_t>(i)] = i;
    std::vector<int> v(order.begin(), order.end());
    shuffle(v, rng);
    std::copy(v.begin(), v.end(), order.begin());
    const int m = 22 + static_cast<int>(rng.below(15));
    const Grid p = prefix_puzzle(sol, order, m);
    EXPECT_EQ(is_unique(p), oracle::count_sudoku_solutions(p.cells(), 2) == 1) << p.to_string();
  }
}

TEST(SudokuGenerate, TwentySeedsAreUniqueUnderBacktracker) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const GenerationResult r = generate(seed);
    EXPECT_EQ(r.seed, seed);
    EXPECT_EQ(r.puzzle.given_count(), kGeneratedGivens);
    EXPECT_TRUE(is_valid_solution(r.solution));
    EXPECT_TRUE(r.solution.extends(r.puzzle));
    EXPECT_EQ(oracle::count_sudoku_solutions(r.puzzle.cells(), 2), 1) << seed;
    const auto [l, h] = r.estimated_min_clues;
    EXPECT_LE(20, l);
    EXPECT_LT(l, h);
    EXPECT_LE(h, 50);
    EXPECT_EQ(h - l, 1);
  }
}

TEST(SudokuGenerate, Deterministic) {
  const GenerationResult a = generate(7);
  const GenerationResult b = generate(7);
  EXPECT_EQ(a.puzzle, b.puzzle);
  EXPECT_EQ(a.solution, b.solution);
  EXPECT_EQ(a.order, b.order);
  EXPECT_EQ(a.estimated_min_clues, b.estimated_min_clues);
}

TEST(SudokuGenerate, SeedsGiveDifferentSolutions) {
  std::set<std::string> solutions;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) solutions.insert(generate(seed).solution.to_string());
  EXPECT_GE(solutions.size(), 2u);
}

TEST(SudokuGenerate, OrderIsPermutation) {
  const GenerationResult r = generate(3);
  std::set<int> cells(r.order.begin(), r.order.end());
  EXPECT_EQ(cells.size(), 81u);
  EXPECT_EQ(*cells.begin(), 0);
  EXPECT_EQ(*cells.rbegin(), 80);
  EXPECT_EQ(prefix_puzzle(r.solution, r.order, kGeneratedGivens), r.puzzle);
  EXPECT_EQ(prefix_puzzle(r.solution, r.order, 81), r.solution);
}

// Uniqueness is monotone along the permutation, and the bounds sit exactly on
// the boundary as seen by the backtracking oracle.
TEST(SudokuGenerate, ProbesAreMonotoneAndBoundsMatchOracle) {
  for (std::uint64_t seed : {1u, 5u, 9u}) {
    const GenerationResult r = generate(seed);
    bool seen_unique = false;
    for (int m = 20; m <= 50; ++m) {
      const bool u = unique_completion(prefix_puzzle(r.solution, r.order, m), r.solution);
      if (seen_unique) EXPECT_TRUE(u) << "seed " << seed << " m " << m;
      seen_unique = seen_unique || u;
    }
    const auto [l, h] = r.estimated_min_clues;
    EXPECT_EQ(oracle::count_sudoku_solutions(prefix_puzzle(r.solution, r.order, h).cells(), 2), 1);
    if (l > 20) EXPECT_EQ(oracle::count_sudoku_solutions(prefix_puzzle(r.solution, r.order, l).cells(), 2), 2);
  }
}

TEST(SudokuHint, FreshPuzzle) {
  const auto h = hint(inkala(), inkala().cells());
  ASSERT_TRUE(h.has_value());
  EXPECT_FALSE(h->correction);
  EXPECT_EQ(h->cell, (Cell{1, 1}));
  EXPECT_EQ(h->digit, 7);
}

TEST(SudokuHint, SolvedGivesNothing) {
  EXPECT_FALSE(hint(inkala(), Grid::parse(fixtures::kInkalaSolution).cells()).has_value());
}

TEST(SudokuHint, WrongDigitIsFlagged) {
  const Grid sol = Grid::parse(fixtures::kInkalaSolution);
  Cells progress = inkala().cells();
  progress[Grid::index(1, 1)] = 7;                           // correct
  progress = with_cell(progress, Grid::index(3, 5), 1);      // wrong, solution has 9
  const auto h = hint(inkala(), progress);
  ASSERT_TRUE(h.has_value());
  EXPECT_TRUE(h->correction);
  EXPECT_EQ(h->cell, (Cell{3, 5}));
  EXPECT_EQ(h->digit, sol.at(3, 5));
}

TEST(SudokuHint, Errors) {
  Cells missing_given = inkala().cells();
  missing_given[Grid::index(1, 9)] = 0;
  EXPECT_THROW(hint(inkala(), missing_given), std::invalid_argument);
  EXPECT_THROW(hint(Grid(), Grid().cells()), NotUnique);
  const Grid bad = Grid::parse(fixtures::kContradiction);
  EXPECT_THROW(hint(bad, bad.cells()), UnsatisfiableGrid);
}

TEST(SudokuCheck, Statuses) {
  const Grid sol = Grid::parse(fixtures::kInkalaSolution);
  EXPECT_EQ(check_progress(inkala(), sol.cells()).status, ProgressStatus::solved);
  EXPECT_EQ(check_progress(inkala(), inkala().cells()).status, ProgressStatus::consistent);

  Cells dup = inkala().cells();
  dup[Grid::index(1, 1)] = 8;  // row peer (1,9) and block peer (3,2) are both 8
  const ProgressCheck c = check_progress(inkala(), dup);
  EXPECT_EQ(c.status, ProgressStatus::conflict);
  EXPECT_EQ(c.conflicts, (std::vector<Cell>{{1, 1}, {1, 9}, {3, 2}}));
  EXPECT_STREQ(status_name(c.status), "conflict");

  Cells missing = inkala().cells();
  missing[Grid::index(2, 1)] = 0;
  EXPECT_THROW(check_progress(inkala(), missing), std::invalid_argument);
}

// Progress that is conflict-free but not on the solution path is still
// "consistent": the check is a rules check only.
TEST(SudokuCheck, AgreesWithConflictOracle) {
  const Grid sol = Grid::parse(fixtures::kInkalaSolution);
  SplitMix64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    Cells p = inkala().cells();
    for (int k = 0; k < 10; ++k) {
      const auto idx = static_cast<std::size_t>(rng.below(81));
      if (inkala().cells()[idx] != 0) continue;
      p[idx] = rng.below(3) == 0 ? static_cast<std::uint8_t>(1 + rng.below(9)) : sol.cells()[idx];
    }
    const ProgressCheck c = check_progress(inkala(), p);
    const auto conflicts = conflicting_cells(p);
    EXPECT_EQ(c.conflicts, conflicts);
    EXPECT_EQ(c.status == ProgressStatus::conflict, !conflicts.empty());
  }
}
