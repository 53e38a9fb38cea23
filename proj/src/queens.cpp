#include "satkit/queens.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "satkit/error.hpp"

namespace satkit {
namespace {

bool attacks(Square a, Square b) {
  return a.x == b.x || a.y == b.y || std::abs(a.x - b.x) == std::abs(a.y - b.y);
}

}  // namespace

QueensEncoding encode_queens(int n) {
  if (n < 1) throw std::invalid_argument("n-queens needs n >= 1");
  QueensEncoding enc;
  VarAllocator alloc;
  std::vector<Square> squares;
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y) {
      enc.vars.add({x, y}, alloc);
      squares.push_back({x, y});
    }
  auto q = [&](int x, int y) { return pos(enc.vars.at({x, y})); };

  enc.formula.reserve_vars(alloc.count());
  for (int j = 1; j <= n; ++j) {
    std::vector<Literal> c;
    for (int i = 1; i <= n; ++i) c.push_back(q(i, j));
    enc.formula.add(Clause(std::move(c)));
  }
  for (int i = 1; i <= n; ++i) {
    std::vector<Literal> c;
    for (int j = 1; j <= n; ++j) c.push_back(q(i, j));
    enc.formula.add(Clause(std::move(c)));
  }
  for (std::size_t a = 0; a < squares.size(); ++a)
    for (std::size_t b = a + 1; b < squares.size(); ++b)
      if (attacks(squares[a], squares[b]))
        enc.formula.add({~q(squares[a].x, squares[a].y), ~q(squares[b].x, squares[b].y)});
  return enc;
}

QueensBoard decode_queens(const QueensEncoding& enc, const Model& m) {
  QueensBoard board;
  for (const auto& [sq, id] : enc.vars) {
    board.n = std::max(board.n, sq.x);
    if (m.value(id)) board.queens.push_back(sq);
  }
  std::sort(board.queens.begin(), board.queens.end());
  return board;
}

std::optional<QueensBoard> solve_queens(int n, const SolverOptions& opts) {
  const QueensEncoding enc = encode_queens(n);
  const SolveResult r = solve(enc.formula, opts);
  if (r.is_unknown()) throw SolveInterrupted();
  if (r.is_unsat()) return std::nullopt;
  QueensBoard board = decode_queens(enc, r.model());
  if (!validate_queens(board)) throw std::logic_error("solver model decodes to an invalid queens board");
  return board;
}

bool validate_queens(const QueensBoard& board) {
  const int n = board.n;
  if (n < 1 || board.queens.size() != static_cast<std::size_t>(n)) return false;
  for (const Square& s : board.queens)
    if (s.x < 1 || s.x > n || s.y < 1 || s.y > n) return false;
  for (std::size_t a = 0; a < board.queens.size(); ++a)
    for (std::size_t b = a + 1; b < board.queens.size(); ++b)
      if (attacks(board.queens[a], board.queens[b])) return false;
  return true;
}

std::size_t count_queens(int n, std::size_t limit, const SolverOptions& opts) {
  const QueensEncoding enc = encode_queens(n);
  const std::vector<VarId> scope = enc.vars.ids();
  return enumerate(enc.formula, scope, limit, opts).size();
}

std::string render_queens(const QueensBoard& board) {
  std::string out;
  for (int x = 1; x <= board.n; ++x) {
    for (int y = 1; y <= board.n; ++y) {
      const bool queen = std::find(board.queens.begin(), board.queens.end(), Square{x, y}) != board.queens.end();
      if (y > 1) out += ' ';
      out += queen ? "Q" : ".";
    }
    out += '\n';
  }
  return out;
}

}  // namespace satkit
