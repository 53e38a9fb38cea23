#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace oracle {

using namespace satkit;

namespace {

bool clause_holds(const Clause& c, std::uint32_t bits) {
  for (Literal l : c) {
    const bool v = (bits >> (l.var().index - 1)) & 1u;
    if (v != l.negated()) return true;
  }
  return false;
}

Model to_model(std::uint32_t bits, std::uint32_t n) {
  std::vector<bool> vals(n);
  for (std::uint32_t i = 0; i < n; ++i) vals[i] = (bits >> i) & 1u;
  return Model(vals);
}

}  // namespace

std::optional<Model> brute_force_sat(const CnfFormula& f) {
  const std::uint32_t n = f.num_vars();
  if (n > 24) throw std::invalid_argument("too many variables for brute force");
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    bool ok = true;
    for (const Clause& c : f.clauses())
      if (!clause_holds(c, bits)) {
        ok = false;
        break;
      }
    if (ok) return to_model(bits, n);
  }
  return std::nullopt;
}

std::uint64_t brute_force_count(const CnfFormula& f) {
  const std::uint32_t n = f.num_vars();
  if (n > 24) throw std::invalid_argument("too many variables for brute force");
  std::uint64_t count = 0;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
    if (std::all_of(f.clauses().begin(), f.clauses().end(), [&](const Clause& c) { return clause_holds(c, bits); }))
      ++count;
  return count;
}

CnfFormula random_cnf(SplitMix64& rng, int vars, int clauses, int max_len) {
  CnfFormula f(static_cast<std::uint32_t>(vars));
  for (int c = 0; c < clauses; ++c) {
    const int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
    std::vector<std::uint32_t> pool(static_cast<std::size_t>(vars));
    std::iota(pool.begin(), pool.end(), 1u);
    shuffle(pool, rng);
    std::vector<Literal> lits;
    for (int k = 0; k < std::min(len, vars); ++k)
      lits.push_back(Literal(VarId{pool[static_cast<std::size_t>(k)]}, rng.below(2) == 1));
    f.add(Clause(std::move(lits)));
  }
  return f;
}

// ---------------------------------------------------------------------------

namespace {

struct SudokuSearch {
  std::array<int, 81> cell{};
  std::array<unsigned, 9> row{}, col{}, box{};
  int limit = 0;
  int found = 0;
  std::optional<Cells> first;

  static int box_of(int c) { return (c / 27) * 3 + (c % 9) / 3; }

  bool place(int c, int d) {
    const unsigned bit = 1u << d;
    if ((row[c / 9] | col[c % 9] | box[box_of(c)]) & bit) return false;
    row[c / 9] |= bit;
    col[c % 9] |= bit;
    box[box_of(c)] |= bit;
    cell[c] = d;
    return true;
  }
  void remove(int c, int d) {
    const unsigned bit = ~(1u << d);
    row[c / 9] &= bit;
    col[c % 9] &= bit;
    box[box_of(c)] &= bit;
    cell[c] = 0;
  }

  void run() {
    if (found >= limit) return;
    int best = -1;
    unsigned best_mask = 0;
    int best_count = 10;
    for (int c = 0; c < 81; ++c) {
      if (cell[c]) continue;
      const unsigned mask = ~(row[c / 9] | col[c % 9] | box[box_of(c)]) & 0x3FEu;
      const int cnt = std::popcount(mask);
      if (cnt < best_count) {
        best = c;
        best_mask = mask;
        best_count = cnt;
        if (cnt == 0) return;
      }
    }
    if (best < 0) {
      if (found++ == 0) {
        Cells out{};
        for (int c = 0; c < 81; ++c) out[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(cell[c]);
        first = out;
      }
      return;
    }
    for (int d = 1; d <= 9; ++d) {
      if (!(best_mask & (1u << d))) continue;
      place(best, d);
      run();
      remove(best, d);
      if (found >= limit) return;
    }
  }
};

bool load(SudokuSearch& s, const Cells& cells) {
  for (int c = 0; c < 81; ++c)
    if (cells[static_cast<std::size_t>(c)] && !s.place(c, cells[static_cast<std::size_t>(c)])) return false;
  return true;
}

}  // namespace

int count_sudoku_solutions(const Cells& cells, int limit) {
  SudokuSearch s;
  s.limit = limit;
  if (!load(s, cells)) return 0;
  s.run();
  return s.found;
}

std::optional<Cells> first_sudoku_solution(const Cells& cells) {
  SudokuSearch s;
  s.limit = 1;
  if (!load(s, cells)) return std::nullopt;
  s.run();
  return s.first;
}

// ---------------------------------------------------------------------------

int exhaustive_max_clique(const Graph& g) {
  const int n = g.n();
  if (n > 20) throw std::invalid_argument("too many vertices for subset search");
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int size = std::popcount(s);
    if (size <= best) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (s >> i & 1u)
        for (int j = i + 1; j < n && ok; ++j)
          if ((s >> j & 1u) && !g.adjacent(i + 1, j + 1)) ok = false;
    if (ok) best = size;
  }
  return best;
}

std::uint64_t count_queens_backtrack(int n) {
  std::uint64_t count = 0;
  std::vector<int> col(static_cast<std::size_t>(n));
  auto rec = [&](auto&& self, int r) -> void {
    if (r == n) {
      ++count;
      return;
    }
    for (int c = 0; c < n; ++c) {
      bool ok = true;
      for (int p = 0; p < r && ok; ++p) {
        const int q = col[static_cast<std::size_t>(p)];
        if (q == c || std::abs(q - c) == r - p) ok = false;
      }
      if (!ok) continue;
      col[static_cast<std::size_t>(r)] = c;
      self(self, r + 1);
    }
  };
  rec(rec, 0);
  return count;
}

// ---------------------------------------------------------------------------

std::vector<ZebraTable> zebra_brute_force(const PuzzleSpec& spec, std::size_t limit) {
  const std::size_t n = static_cast<std::size_t>(spec.positions);
  const std::size_t cats = spec.categories.size();
  // value name -> (category, index in category)
  std::map<std::string, std::pair<std::size_t, std::size_t>> where;
  for (std::size_t c = 0; c < cats; ++c)
    for (std::size_t v = 0; v < n; ++v) where[spec.categories[c].values[v]] = {c, v};

  std::vector<std::vector<int>> pos_of(cats);  // pos_of[c][v] = 1-based position
  std::vector<ZebraTable> out;

  auto clue_ok = [&](const Clue& clue, std::size_t placed) {
    const auto [ca, va] = where.at(clue.a);
    if (ca >= placed) return true;
    const int pa = pos_of[ca][va];
    if (clue.kind == Clue::Kind::position) return pa == clue.position;
    const auto [cb, vb] = where.at(clue.b);
    if (cb >= placed) return true;
    const int pb = pos_of[cb][vb];
    switch (clue.kind) {
      case Clue::Kind::same: return pa == pb;
      case Clue::Kind::left_of: return pa + 1 == pb;
      case Clue::Kind::next_to: return std::abs(pa - pb) == 1;
      default: return true;
    }
  };

  auto rec = [&](auto&& self, std::size_t c) -> void {
    if (out.size() >= limit) return;
    if (c == cats) {
      ZebraTable t(n, std::vector<std::string>(cats));
      for (std::size_t k = 0; k < cats; ++k)
        for (std::size_t v = 0; v < n; ++v)
          t[static_cast<std::size_t>(pos_of[k][v] - 1)][k] = spec.categories[k].values[v];
      out.push_back(std::move(t));
      return;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      pos_of[c] = perm;
      if (std::all_of(spec.clues.begin(), spec.clues.end(), [&](const Clue& cl) { return clue_ok(cl, c + 1); }))
        self(self, c + 1);
    } while (std::next_permutation(perm.begin(), perm.end()) && out.size() < limit);
  };
  rec(rec, 0);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

using Square = std::vector<std::vector<int>>;

// All Latin squares of order n whose cells already fixed in `s` (non-zero) hold.
void latin_fill(Square& s, int n, int idx, const std::function<void(const Square&)>& emit) {
  if (idx == n * n) {
    emit(s);
    return;
  }
  const int i = idx / n, j = idx % n;
  auto& cell = s[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  if (cell != 0) {
    latin_fill(s, n, idx + 1, emit);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k)
      if (s[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] == v ||
          s[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] == v)
        ok = false;
    if (!ok) continue;
    cell = v;
    latin_fill(s, n, idx + 1, emit);
    cell = 0;
  }
}

}  // namespace

std::size_t count_symmetric_graeco(int n) {
  if (n > 4) throw std::invalid_argument("order too large for enumeration");
  std::vector<Square> as, bs;
  Square a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int k = 0; k < n; ++k) {
    a[0][static_cast<std::size_t>(k)] = k + 1;
    a[static_cast<std::size_t>(k)][0] = k + 1;
  }
  Square b(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int k = 0; k < n; ++k) b[0][static_cast<std::size_t>(k)] = k + 1;
  latin_fill(a, n, 0, [&](const Square& s) { as.push_back(s); });
  latin_fill(b, n, 0, [&](const Square& s) { bs.push_back(s); });
  std::size_t count = 0;
  for (const Square& x : as)
    for (const Square& y : bs) {
      std::set<std::pair<int, int>> pairs;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          pairs.emplace(x[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                        y[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
      if (pairs.size() == static_cast<std::size_t>(n * n)) ++count;
    }
  return count;
}

SquarePair cyclic_graeco(int n) {
  SquarePair p{n, Square(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n))),
               Square(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)))};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      p.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n + 1;
      p.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (2 * i + j) % n + 1;
    }
  return p;
}

// ---------------------------------------------------------------------------

std::uint64_t pack_board(const TileBoard& b) {
  std::uint64_t key = 0;
  for (int v : b.tiles()) key = key * 10 + static_cast<std::uint64_t>(v);
  return key;
}

std::unordered_map<std::uint64_t, int> bfs_8puzzle() {
  std::unordered_map<std::uint64_t, int> dist;
  std::deque<std::vector<int>> queue;
  std::vector<int> goal{1, 2, 3, 4, 5, 6, 7, 8, 9};
  auto key = [](const std::vector<int>& t) {
    std::uint64_t k = 0;
    for (int v : t) k = k * 10 + static_cast<std::uint64_t>(v);
    return k;
  };
  dist[key(goal)] = 0;
  queue.push_back(goal);
  while (!queue.empty()) {
    std::vector<int> cur = std::move(queue.front());
    queue.pop_front();
    const int d = dist[key(cur)];
    const int b = static_cast<int>(std::find(cur.begin(), cur.end(), 9) - cur.begin());
    const int r = b / 3, c = b % 3;
    const int dr[] = {-1, 1, 0, 0}, dc[] = {0, 0, -1, 1};
    for (int k = 0; k < 4; ++k) {
      const int nr = r + dr[k], nc = c + dc[k];
      if (nr < 0 || nr > 2 || nc < 0 || nc > 2) continue;
      std::vector<int> next = cur;
      std::swap(next[static_cast<std::size_t>(b)], next[static_cast<std::size_t>(nr * 3 + nc)]);
      if (dist.emplace(key(next), d + 1).second) queue.push_back(std::move(next));
    }
  }
  return dist;
}

}  // namespace oracle
