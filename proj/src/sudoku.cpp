#include "satkit/sudoku.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "satkit/error.hpp"
#include "satkit/rng.hpp"

namespace satkit {
namespace {

bool peers(std::size_t a, std::size_t b) {
  const std::size_t ra = a / 9, ca = a % 9, rb = b / 9, cb = b % 9;
  return ra == rb || ca == cb || (ra / 3 == rb / 3 && ca / 3 == cb / 3);
}

VarId sid(int i, int j, int k) { return VarId{static_cast<std::uint32_t>(81 * (i - 1) + 9 * (j - 1) + k)}; }

void check_extends(const Grid& puzzle, const Cells& progress) {
  for (std::size_t c = 0; c < 81; ++c) {
    if (progress[c] > 9) throw std::invalid_argument("cell value out of range");
    if (puzzle.cells()[c] != 0 && progress[c] != puzzle.cells()[c])
      throw std::invalid_argument("progress does not keep the puzzle's givens");
  }
}

}  // namespace

Cells parse_cells(std::string_view text) {
  Cells cells{};
  std::size_t n = 0;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (n == 81) throw ParseError(0, "grid has more than 81 cells");
    if (ch == '.' || ch == '0')
      cells[n++] = 0;
    else if (ch >= '1' && ch <= '9')
      cells[n++] = static_cast<std::uint8_t>(ch - '0');
    else
      throw ParseError(0, std::string("invalid grid character '") + ch + "' at cell " + std::to_string(n + 1));
  }
  if (n != 81) throw ParseError(0, "grid has " + std::to_string(n) + " cells, expected 81");
  return cells;
}

std::string cells_to_string(const Cells& cells) {
  std::string s(81, '.');
  for (std::size_t c = 0; c < 81; ++c)
    if (cells[c] != 0) s[c] = static_cast<char>('0' + cells[c]);
  return s;
}

std::vector<Cell> conflicting_cells(const Cells& cells) {
  std::vector<bool> bad(81, false);
  for (std::size_t a = 0; a < 81; ++a)
    for (std::size_t b = a + 1; b < 81; ++b)
      if (cells[a] != 0 && cells[a] == cells[b] && peers(a, b)) bad[a] = bad[b] = true;
  std::vector<Cell> out;
  for (std::size_t c = 0; c < 81; ++c)
    if (bad[c]) out.push_back({static_cast<int>(c / 9) + 1, static_cast<int>(c % 9) + 1});
  return out;
}

Grid::Grid(const Cells& cells) : cells_(cells) {
  for (std::uint8_t v : cells_)
    if (v > 9) throw std::invalid_argument("cell value out of range");
  const auto bad = conflicting_cells(cells_);
  if (!bad.empty())
    throw std::invalid_argument("conflicting givens at row " + std::to_string(bad.front().row) + ", column " +
                                std::to_string(bad.front().col));
}

int Grid::given_count() const {
  return static_cast<int>(std::count_if(cells_.begin(), cells_.end(), [](std::uint8_t v) { return v != 0; }));
}

bool Grid::extends(const Grid& base) const {
  for (std::size_t c = 0; c < 81; ++c)
    if (base.cells_[c] != 0 && base.cells_[c] != cells_[c]) return false;
  return true;
}

bool is_valid_solution(const Grid& g) {
  for (int unit = 0; unit < 27; ++unit) {
    unsigned seen = 0;
    for (int t = 0; t < 9; ++t) {
      int r, c;
      if (unit < 9) {
        r = unit, c = t;
      } else if (unit < 18) {
        r = t, c = unit - 9;
      } else {
        const int b = unit - 18;
        r = 3 * (b / 3) + t / 3, c = 3 * (b % 3) + t % 3;
      }
      const int v = g.at(r + 1, c + 1);
      if (v < 1 || v > 9) return false;
      seen |= 1u << v;
    }
    if (seen != 0x3FEu) return false;
  }
  return true;
}

SudokuEncoding encode_sudoku(const Grid& g, bool cell_amo) {
  SudokuEncoding enc;
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j)
      for (int k = 1; k <= 9; ++k) enc.vars.insert({i, j, k}, sid(i, j, k));
  enc.formula.reserve_vars(729);

  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j) {
      std::vector<Literal> any;
      for (int k = 1; k <= 9; ++k) any.push_back(pos(sid(i, j, k)));
      enc.formula.add(Clause(std::move(any)));
    }
  for (std::size_t a = 0; a < 81; ++a)
    for (std::size_t b = a + 1; b < 81; ++b) {
      if (!peers(a, b)) continue;
      const int ia = static_cast<int>(a / 9) + 1, ja = static_cast<int>(a % 9) + 1;
      const int ib = static_cast<int>(b / 9) + 1, jb = static_cast<int>(b % 9) + 1;
      for (int k = 1; k <= 9; ++k) enc.formula.add({neg(sid(ia, ja, k)), neg(sid(ib, jb, k))});
    }
  if (cell_amo) {
    for (int i = 1; i <= 9; ++i)
      for (int j = 1; j <= 9; ++j)
        for (int k = 1; k <= 9; ++k)
          for (int k2 = k + 1; k2 <= 9; ++k2) enc.formula.add({neg(sid(i, j, k)), neg(sid(i, j, k2))});
  }
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j)
      if (const int v = g.at(i, j); v != 0) enc.formula.add({pos(sid(i, j, v))});
  return enc;
}

Grid decode_sudoku(const Model& m) {
  Cells cells{};
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j)
      for (int k = 1; k <= 9; ++k)
        if (m.value(sid(i, j, k))) {
          cells[Grid::index(i, j)] = static_cast<std::uint8_t>(k);
          break;
        }
  return Grid(cells);
}

std::optional<Grid> solve_sudoku(const Grid& g, const SolverOptions& opts, bool cell_amo) {
  const SudokuEncoding enc = encode_sudoku(g, cell_amo);
  const SolveResult r = solve(enc.formula, opts);
  if (r.is_unknown()) throw SolveInterrupted();
  if (r.is_unsat()) return std::nullopt;
  Grid out = decode_sudoku(r.model());
  if (!is_valid_solution(out) || !out.extends(g)) throw std::logic_error("solver model is not a valid completion");
  return out;
}

namespace {

std::vector<Literal> blocking(const Grid& solution) {
  std::vector<Literal> lits;
  lits.reserve(81);
  for (int i = 1; i <= 9; ++i)
    for (int j = 1; j <= 9; ++j) lits.push_back(neg(sid(i, j, solution.at(i, j))));
  return lits;
}

}  // namespace

bool unique_completion(const Grid& puzzle, const Grid& solution, const SolverOptions& opts) {
  SudokuEncoding enc = encode_sudoku(puzzle);
  enc.formula.add(Clause(blocking(solution)));
  const SolveResult r = solve(enc.formula, opts);
  if (r.is_unknown()) throw SolveInterrupted();
  return r.is_unsat();
}

bool is_unique(const Grid& g, const SolverOptions& opts) {
  const SudokuEncoding enc = encode_sudoku(g);
  Solver s(opts);
  s.add_formula(enc.formula);
  SolveResult r = s.solve();
  if (r.is_unknown()) throw SolveInterrupted();
  if (r.is_unsat()) throw UnsatisfiableGrid();
  const Grid first = decode_sudoku(r.model());
  const auto block = blocking(first);
  s.add_clause(block);
  r = s.solve();
  if (r.is_unknown()) throw SolveInterrupted();
  return r.is_unsat();
}

Grid prefix_puzzle(const Grid& solution, const std::array<int, 81>& order, int m) {
  Cells cells{};
  for (int t = 0; t < m; ++t) {
    const auto c = static_cast<std::size_t>(order[static_cast<std::size_t>(t)]);
    cells[c] = solution.cells()[c];
  }
  return Grid(cells);
}

GenerationResult generate(std::uint64_t seed, const SolverOptions& opts) {
  SplitMix64 rng(seed);
  for (int attempt = 1; attempt <= kMaxGenerationAttempts; ++attempt) {
    SolverOptions o = opts;
    o.random_seed = rng.next();
    o.rnd_init_act = true;
    const auto r = solve_sudoku(Grid(), o);
    if (!r) throw std::logic_error("empty grid reported unsatisfiable");

    std::vector<int> perm(81);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    GenerationResult out;
    out.solution = *r;
    out.seed = seed;
    out.attempts = attempt;
    std::copy(perm.begin(), perm.end(), out.order.begin());
    out.puzzle = prefix_puzzle(out.solution, out.order, kGeneratedGivens);
    if (!unique_completion(out.puzzle, out.solution, o)) continue;
    out.estimated_min_clues = estimate_min_clues(out, o);
    return out;
  }
  throw std::runtime_error("sudoku generation exceeded " + std::to_string(kMaxGenerationAttempts) + " attempts");
}

std::pair<int, int> estimate_min_clues(const GenerationResult& r, const SolverOptions& opts) {
  int l = 20, h = kGeneratedGivens;
  while (h - l > 1) {
    const int m = (l + h + 1) / 2;
    if (unique_completion(prefix_puzzle(r.solution, r.order, m), r.solution, opts))
      h = m;
    else
      l = m;
  }
  return {l, h};
}

std::optional<Hint> hint(const Grid& puzzle, const Cells& progress, const SolverOptions& opts) {
  check_extends(puzzle, progress);
  const auto sol = solve_sudoku(puzzle, opts);
  if (!sol) throw UnsatisfiableGrid();
  if (!unique_completion(puzzle, *sol, opts)) throw NotUnique();
  for (std::size_t c = 0; c < 81; ++c)
    if (progress[c] != 0 && progress[c] != sol->cells()[c])
      return Hint{{static_cast<int>(c / 9) + 1, static_cast<int>(c % 9) + 1}, sol->cells()[c], true};
  for (std::size_t c = 0; c < 81; ++c)
    if (progress[c] == 0) return Hint{{static_cast<int>(c / 9) + 1, static_cast<int>(c % 9) + 1}, sol->cells()[c], false};
  return std::nullopt;
}

const char* status_name(ProgressStatus s) {
  switch (s) {
    case ProgressStatus::solved: return "solved";
    case ProgressStatus::consistent: return "consistent";
    case ProgressStatus::conflict: return "conflict";
  }
  return "?";
}

ProgressCheck check_progress(const Grid& puzzle, const Cells& progress) {
  check_extends(puzzle, progress);
  ProgressCheck out;
  out.conflicts = conflicting_cells(progress);
  if (!out.conflicts.empty())
    out.status = ProgressStatus::conflict;
  else if (std::find(progress.begin(), progress.end(), 0) == progress.end())
    out.status = ProgressStatus::solved;
  return out;
}

}  // namespace satkit
