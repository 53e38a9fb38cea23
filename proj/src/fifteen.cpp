#include "satkit/fifteen.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "satkit/boolexpr.hpp"
#include "satkit/error.hpp"
#include "satkit/rng.hpp"

namespace satkit {

TileBoard::TileBoard(int side, std::vector<int> tiles) : side_(side), tiles_(std::move(tiles)) {
  if (side != 3 && side != 4) throw std::invalid_argument("board side must be 3 or 4");
  const auto cells = static_cast<std::size_t>(side * side);
  if (tiles_.size() != cells) throw std::invalid_argument("board needs " + std::to_string(cells) + " tiles");
  std::vector<bool> seen(cells + 1, false);
  for (int v : tiles_) {
    if (v < 1 || v > side * side) throw std::invalid_argument("tile " + std::to_string(v) + " out of range");
    if (seen[static_cast<std::size_t>(v)]) throw std::invalid_argument("tile " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

TileBoard TileBoard::goal(int side) {
  std::vector<int> t(static_cast<std::size_t>(side * side));
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<int>(i) + 1;
  return TileBoard(side, std::move(t));
}

TilePos TileBoard::blank_pos() const {
  const auto i = static_cast<int>(std::find(tiles_.begin(), tiles_.end(), blank()) - tiles_.begin());
  return {i / side_ + 1, i % side_ + 1};
}

bool TileBoard::is_goal() const {
  for (std::size_t i = 0; i < tiles_.size(); ++i)
    if (tiles_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

TileBoard parse_board(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<int> tiles;
  for (std::string tok; in >> tok;) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("");
      tiles.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(0, "invalid tile `" + tok + "`");
    }
  }
  int side = 0;
  if (tiles.size() == 16) side = 4;
  else if (tiles.size() == 9) side = 3;
  else throw ParseError(0, "board needs 16 or 9 tiles, got " + std::to_string(tiles.size()));
  for (int& v : tiles)
    if (v == 0) v = side * side;
  try {
    return TileBoard(side, std::move(tiles));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string render_board(const TileBoard& b) {
  const std::size_t w = std::to_string(b.blank() - 1).size();
  std::string out;
  for (int r = 1; r <= b.side(); ++r) {
    for (int c = 1; c <= b.side(); ++c) {
      const int v = b.at({r, c});
      const std::string cell = v == b.blank() ? "." : std::to_string(v);
      if (c > 1) out += ' ';
      out += std::string(w - cell.size(), ' ') + cell;
    }
    out += '\n';
  }
  return out;
}

std::string board_to_string(const TileBoard& b) {
  std::string out;
  for (std::size_t i = 0; i < b.tiles().size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(b.tiles()[i] == b.blank() ? 0 : b.tiles()[i]);
  }
  return out;
}

TileBoard simulate(const TileBoard& start, const Plan& plan) {
  std::vector<int> tiles = start.tiles();
  const int s = start.side();
  TilePos blank = start.blank_pos();
  for (std::size_t step = 0; step < plan.moves.size(); ++step) {
    const TilePos m = plan.moves[step];
    if (m.row < 1 || m.row > s || m.col < 1 || m.col > s) throw IllegalMove(step + 1, "square off the board");
    if (std::abs(m.row - blank.row) + std::abs(m.col - blank.col) != 1)
      throw IllegalMove(step + 1, "square (" + std::to_string(m.row) + "," + std::to_string(m.col) +
                                      ") is not adjacent to the blank");
    std::swap(tiles[static_cast<std::size_t>((m.row - 1) * s + m.col - 1)],
              tiles[static_cast<std::size_t>((blank.row - 1) * s + blank.col - 1)]);
    blank = m;
  }
  return TileBoard(s, std::move(tiles));
}

bool parity_solvable(const TileBoard& b) {
  const auto& t = b.tiles();
  int inversions = 0;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (t[i] > t[j]) ++inversions;
  const TilePos p = b.blank_pos();
  const int dist = (b.side() - p.row) + (b.side() - p.col);
  return inversions % 2 == dist % 2;
}

// ---------------------------------------------------------------------------

namespace {

std::string sname(int i, int j, int n, int t) {
  return "S_" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(n) + "_" + std::to_string(t);
}

std::vector<TilePos> neighbours(TilePos p, int side) {
  std::vector<TilePos> out;
  if (p.row > 1) out.push_back({p.row - 1, p.col});
  if (p.row < side) out.push_back({p.row + 1, p.col});
  if (p.col > 1) out.push_back({p.row, p.col - 1});
  if (p.col < side) out.push_back({p.row, p.col + 1});
  return out;
}

}  // namespace

FifteenEncoding encode_fifteen(const TileBoard& start, int m, std::optional<int> window_lo) {
  if (m < 1 || m > kMaxHorizon) throw std::invalid_argument("horizon must be in 1..80");
  const int lo = window_lo.value_or(std::max(0, m - 4));
  if (lo < 0 || lo > m) throw std::invalid_argument("goal window must lie inside 0..m");
  const int s = start.side();
  const int cells = s * s;
  const int blank = start.blank();
  FifteenEncoding enc;
  enc.horizon = m;
  VarAllocator alloc;
  for (int t = 0; t <= m; ++t)
    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= s; ++j)
        for (int n = 1; n <= cells; ++n) enc.vars.insert({i, j, n, t}, alloc.reserve(sname(i, j, n, t)));
  CnfFormula& f = enc.formula;
  f.reserve_vars(alloc.count());
  auto v = [&](int i, int j, int n, int t) { return enc.vars.at({i, j, n, t}); };
  auto x = [&](int i, int j, int n, int t) { return var(sname(i, j, n, t)); };

  for (int i = 1; i <= s; ++i)
    for (int j = 1; j <= s; ++j) f.add({pos(v(i, j, start.at({i, j}), 0))});

  for (int t = 0; t <= m; ++t)
    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= s; ++j) {
        std::vector<Literal> any;
        for (int n = 1; n <= cells; ++n) any.push_back(pos(v(i, j, n, t)));
        f.add(Clause(std::move(any)));
        for (int n = 1; n <= cells; ++n)
          for (int n2 = n + 1; n2 <= cells; ++n2) f.add({neg(v(i, j, n, t)), neg(v(i, j, n2, t))});
      }

  TseitinEncoder ts(alloc, f);
  // copies(a, b, t): every tile of square a at t sits on square b at t+1.
  auto copies = [&](TilePos a, TilePos b, int t) {
    std::vector<BoolExpr> eqs;
    for (int n = 1; n <= cells; ++n) eqs.push_back(iff(x(a.row, a.col, n, t), x(b.row, b.col, n, t + 1)));
    return and_of(std::move(eqs));
  };
  for (int t = 0; t < m; ++t) {
    std::vector<BoolExpr> unchanged;
    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= s; ++j) unchanged.push_back(copies({i, j}, {i, j}, t));
    auto dnc = [&](TilePos p) { return unchanged[static_cast<std::size_t>((p.row - 1) * s + p.col - 1)]; };

    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= s; ++j) {
        const auto adj = neighbours({i, j}, s);
        std::vector<BoolExpr> quiet{not_of(x(i, j, blank, t))};
        for (TilePos q : adj) quiet.push_back(not_of(x(q.row, q.col, blank, t)));
        ts.assert_true(implies(and_of(std::move(quiet)), dnc({i, j})));

        std::vector<BoolExpr> options;
        for (TilePos kl : adj) {
          std::vector<BoolExpr> parts{copies({i, j}, kl, t), copies(kl, {i, j}, t)};
          for (TilePos other : adj)
            if (other != kl) parts.push_back(dnc(other));
          options.push_back(and_of(std::move(parts)));
        }
        ts.assert_true(implies(x(i, j, blank, t), or_of(std::move(options))));
      }
  }

  std::vector<BoolExpr> solved;
  for (int t = lo; t <= m; ++t) {
    std::vector<BoolExpr> all;
    for (int i = 1; i <= s; ++i)
      for (int j = 1; j <= s; ++j) all.push_back(x(i, j, s * (i - 1) + j, t));
    solved.push_back(and_of(std::move(all)));
  }
  ts.assert_true(or_of(std::move(solved)));
  f.reserve_vars(alloc.count());
  return enc;
}

std::vector<TileBoard> decode_states(const FifteenEncoding& enc, int side, const Model& m) {
  std::vector<TileBoard> out;
  const int cells = side * side;
  for (int t = 0; t <= enc.horizon; ++t) {
    std::vector<int> tiles(static_cast<std::size_t>(cells), 0);
    for (int i = 1; i <= side; ++i)
      for (int j = 1; j <= side; ++j)
        for (int n = 1; n <= cells; ++n)
          if (m.value(enc.vars.at({i, j, n, t}))) tiles[static_cast<std::size_t>((i - 1) * side + j - 1)] = n;
    out.emplace_back(side, std::move(tiles));
  }
  return out;
}

namespace {

Plan decode_plan(const TileBoard& start, const FifteenEncoding& enc, const Model& m) {
  const auto states = decode_states(enc, start.side(), m);
  Plan plan;
  for (std::size_t t = 1; t < states.size() && !states[t - 1].is_goal(); ++t)
    plan.moves.push_back(states[t].blank_pos());
  if (!simulate(start, plan).is_goal()) throw std::logic_error("decoded plan does not reach the goal");
  return plan;
}

}  // namespace

FifteenResult solve_fifteen(const TileBoard& start, const SolverOptions& opts, int max_horizon) {
  FifteenResult res;
  if (start.is_goal()) {
    res.plan = Plan{};
    return res;
  }
  if (!parity_solvable(start)) return res;
  for (int m = 5; m <= std::min(max_horizon, kMaxHorizon); m += 5) {
    const FifteenEncoding enc = encode_fifteen(start, m);
    const SolveResult r = solve(enc.formula, opts);
    if (r.is_unknown()) throw SolveInterrupted();
    res.horizons.push_back({m, r.is_sat()});
    if (!r.is_sat()) continue;

    Plan plan = decode_plan(start, enc, r.model());
    for (int t = std::max(1, m - 4); t < static_cast<int>(plan.length()); ++t) {
      if ((static_cast<int>(plan.length()) - t) % 2 != 0) continue;
      const FifteenEncoding exact = encode_fifteen(start, t, t);
      const SolveResult e = solve(exact.formula, opts);
      if (e.is_unknown()) throw SolveInterrupted();
      res.refinements.push_back({t, e.is_sat()});
      if (e.is_sat()) {
        plan = decode_plan(start, exact, e.model());
        break;
      }
    }
    res.plan = std::move(plan);
    return res;
  }
  return res;
}

TileBoard scramble(int side, int moves, std::uint64_t seed) {
  SplitMix64 rng(seed);
  TileBoard b = TileBoard::goal(side);
  std::optional<TilePos> previous;
  for (int k = 0; k < moves; ++k) {
    const TilePos blank = b.blank_pos();
    auto options = neighbours(blank, side);
    if (previous) std::erase(options, *previous);
    const TilePos pick = options[static_cast<std::size_t>(rng.below(options.size()))];
    b = simulate(b, Plan{{pick}});
    previous = blank;
  }
  return b;
}

}  // namespace satkit
