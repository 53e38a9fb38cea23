#include "satkit/latin.hpp"

#include <set>
#include <stdexcept>

#include "satkit/boolexpr.hpp"
#include "satkit/error.hpp"

namespace satkit {
namespace {

std::string var_name(char sq, int i, int j, int k) {
  return std::string(1, sq) + "_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
}

bool is_latin(const std::vector<std::vector<int>>& s, int n) {
  if (s.size() != static_cast<std::size_t>(n)) return false;
  for (int i = 0; i < n; ++i) {
    if (s[static_cast<std::size_t>(i)].size() != static_cast<std::size_t>(n)) return false;
    std::set<int> row, col;
    for (int j = 0; j < n; ++j) {
      const int r = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      const int c = s[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
      if (r < 1 || r > n || c < 1 || c > n) return false;
      row.insert(r);
      col.insert(c);
    }
    if (row.size() != static_cast<std::size_t>(n) || col.size() != static_cast<std::size_t>(n)) return false;
  }
  return true;
}

}  // namespace

GraecoEncoding encode_graeco(int n) {
  if (n < 1) throw std::invalid_argument("Graeco-Latin order must be at least 1");
  GraecoEncoding enc;
  VarAllocator alloc;
  for (char sq : {'A', 'B'})
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) enc.vars.insert({sq, i, j, k}, alloc.reserve(var_name(sq, i, j, k)));
  auto v = [&](char sq, int i, int j, int k) { return enc.vars.at({sq, i, j, k}); };
  CnfFormula& f = enc.formula;
  f.reserve_vars(alloc.count());

  for (char sq : {'A', 'B'})
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        std::vector<Literal> any;
        for (int k = 1; k <= n; ++k) any.push_back(pos(v(sq, i, j, k)));
        f.add(Clause(std::move(any)));
        for (int k = 1; k <= n; ++k)
          for (int l = k + 1; l <= n; ++l) f.add({neg(v(sq, i, j, k)), neg(v(sq, i, j, l))});
      }

  for (char sq : {'A', 'B'})
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k) {
          for (int j2 = j + 1; j2 <= n; ++j2) f.add({neg(v(sq, i, j, k)), neg(v(sq, i, j2, k))});
          for (int i2 = i + 1; i2 <= n; ++i2) f.add({neg(v(sq, i, j, k)), neg(v(sq, i2, j, k))});
        }

  TseitinEncoder ts(alloc, f);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l) {
      std::vector<BoolExpr> cells;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) cells.push_back(and_of({var(var_name('A', i, j, k)), var(var_name('B', i, j, l))}));
      ts.assert_true(or_of(std::move(cells)));
    }

  for (int i = 1; i <= n; ++i) {
    f.add({pos(v('A', 1, i, i))});
    f.add({pos(v('B', 1, i, i))});
    if (i > 1) f.add({pos(v('A', i, 1, i))});
  }
  f.reserve_vars(alloc.count());
  return enc;
}

SquarePair decode_graeco(const GraecoEncoding& enc, int n, const Model& m) {
  SquarePair p{n, std::vector(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0)),
               std::vector(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0))};
  for (const auto& [key, id] : enc.vars) {
    if (!m.value(id)) continue;
    auto& sq = key.square == 'A' ? p.a : p.b;
    sq[static_cast<std::size_t>(key.i - 1)][static_cast<std::size_t>(key.j - 1)] = key.k;
  }
  return p;
}

std::optional<SquarePair> solve_graeco(int n, const SolverOptions& opts) {
  const GraecoEncoding enc = encode_graeco(n);
  const SolveResult r = solve(enc.formula, opts);
  if (r.is_unknown()) throw SolveInterrupted();
  if (r.is_unsat()) return std::nullopt;
  SquarePair p = decode_graeco(enc, n, r.model());
  if (!validate_graeco(p)) throw std::logic_error("solver model is not a Graeco-Latin pair");
  return p;
}

bool validate_graeco(const SquarePair& p) {
  if (p.n < 1 || !is_latin(p.a, p.n) || !is_latin(p.b, p.n)) return false;
  std::set<std::pair<int, int>> seen;
  for (int i = 0; i < p.n; ++i)
    for (int j = 0; j < p.n; ++j)
      seen.emplace(p.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                   p.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return seen.size() == static_cast<std::size_t>(p.n * p.n);
}

std::string render_graeco(const SquarePair& p) {
  const std::size_t w = std::to_string(p.n).size();
  auto matrix = [&](const std::vector<std::vector<int>>& s) {
    std::string out;
    for (const auto& row : s) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        std::string cell = std::to_string(row[j]);
        if (j > 0) out += ' ';
        out += std::string(w - cell.size(), ' ') + cell;
      }
      out += '\n';
    }
    return out;
  };
  return matrix(p.a) + "\n" + matrix(p.b);
}

}  // namespace satkit
