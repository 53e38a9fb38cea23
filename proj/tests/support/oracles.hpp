#pragma once

// Reference implementations used only by the tests. None of these touch the
// solver or the encoders under test.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "satkit/clique.hpp"
#include "satkit/cnf.hpp"
#include "satkit/fifteen.hpp"
#include "satkit/latin.hpp"
#include "satkit/rng.hpp"
#include "satkit/sudoku.hpp"
#include "satkit/zebra.hpp"

namespace oracle {

// Truth-table search; num_vars must be <= 24.
std::optional<satkit::Model> brute_force_sat(const satkit::CnfFormula& f);
// Number of satisfying assignments over all num_vars variables.
std::uint64_t brute_force_count(const satkit::CnfFormula& f);

// Clauses of 1..max_len distinct, non-complementary literals.
satkit::CnfFormula random_cnf(satkit::SplitMix64& rng, int vars, int clauses, int max_len);

// Bitmask backtracker with minimum-remaining-values ordering. Counts
// completions of `cells`, stopping at `limit`.
int count_sudoku_solutions(const satkit::Cells& cells, int limit);
std::optional<satkit::Cells> first_sudoku_solution(const satkit::Cells& cells);

// Maximum clique size by checking every vertex subset. n <= 20.
int exhaustive_max_clique(const satkit::Graph& g);

// Row-by-row backtracking count of n-queens solutions.
std::uint64_t count_queens_backtrack(int n);

// Every assignment of values to positions satisfying the clues, found by
// permuting one category at a time and pruning on clues whose categories are
// all placed. Stops at `limit`.
std::vector<satkit::ZebraTable> zebra_brute_force(const satkit::PuzzleSpec& spec, std::size_t limit);

// Graeco-Latin pairs with A's first row and column and B's first row equal to
// 1..n, by enumeration. n <= 4.
std::size_t count_symmetric_graeco(int n);

// Cyclic construction A(i,j) = i+j, B(i,j) = 2i+j (mod n), orthogonal for odd n.
satkit::SquarePair cyclic_graeco(int n);

// BFS over the 8-puzzle from the goal. Key is the board's tiles packed base 10.
std::unordered_map<std::uint64_t, int> bfs_8puzzle();
std::uint64_t pack_board(const satkit::TileBoard& b);

}  // namespace oracle
