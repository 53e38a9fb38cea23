#include "satkit/clique.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "satkit/boolexpr.hpp"
#include "satkit/error.hpp"
#include "satkit/rng.hpp"

namespace satkit {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)) + 1) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& row : adj_) row.assign(static_cast<std::size_t>(n) + 1, false);
}

void Graph::add_edge(int u, int v) {
  if (u < 1 || u > n_ || v < 1 || v > n_)
    throw std::invalid_argument("edge " + std::to_string(u) + "-" + std::to_string(v) + " out of range");
  if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
  if (u > v) std::swap(u, v);
  edges_.emplace(u, v);
  adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
  adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
}

bool Graph::adjacent(int u, int v) const {
  if (u < 1 || u > n_ || v < 1 || v > n_) return false;
  return adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

Graph parse_dimacs_graph(std::string_view text) {
  std::optional<Graph> g;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      if (g) throw ParseError(line_no, "duplicate problem line");
      std::string kind;
      long n = -1, m = -1;
      if (!(ls >> kind >> n >> m) || (kind != "edge" && kind != "col") || n < 0 || m < 0)
        throw ParseError(line_no, "expected `p edge <vertices> <edges>`");
      std::string extra;
      if (ls >> extra) throw ParseError(line_no, "trailing data after problem line");
      g.emplace(static_cast<int>(n));
    } else if (tag == "e") {
      if (!g) throw ParseError(line_no, "edge before problem line");
      long u = 0, v = 0;
      std::string extra;
      if (!(ls >> u >> v) || (ls >> extra)) throw ParseError(line_no, "expected `e <u> <v>`");
      if (u < 1 || u > g->n() || v < 1 || v > g->n())
        throw ParseError(line_no, "vertex out of range in `" + line + "`");
      if (u == v) throw ParseError(line_no, "self-loop on vertex " + std::to_string(u));
      g->add_edge(static_cast<int>(u), static_cast<int>(v));
    } else {
      throw ParseError(line_no, "unrecognized line `" + line + "`");
    }
  }
  if (!g) throw ParseError(0, "missing problem line");
  return std::move(*g);
}

std::string write_dimacs_graph(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.n()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const auto& [u, v] : g.edges()) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

CliqueEncoding encode_k_clique(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("clique size must be at least 1");
  CliqueEncoding enc;
  VarAllocator alloc;
  for (int v = 1; v <= g.n(); ++v) enc.x.push_back(alloc.fresh());
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j)
      if (!g.adjacent(i, j))
        enc.formula.add({neg(enc.x[static_cast<std::size_t>(i - 1)]), neg(enc.x[static_cast<std::size_t>(j - 1)])});
  AtLeastK card = at_least_k(enc.x, k, alloc);
  enc.formula.append(card.clauses);
  enc.counters = std::move(card.counters);
  enc.formula.reserve_vars(alloc.count());
  return enc;
}

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    if (vertices[a] < 1 || vertices[a] > g.n()) return false;
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (!g.adjacent(vertices[a], vertices[b])) return false;
  }
  return true;
}

std::optional<std::vector<int>> find_k_clique(const Graph& g, int k, const SolverOptions& opts) {
  const CliqueEncoding enc = encode_k_clique(g, k);
  const SolveResult r = solve(enc.formula, opts);
  if (r.is_unknown()) throw SolveInterrupted();
  if (r.is_unsat()) return std::nullopt;
  std::vector<int> out;
  for (int v = 1; v <= g.n(); ++v)
    if (r.model().value(enc.x[static_cast<std::size_t>(v - 1)])) out.push_back(v);
  if (static_cast<int>(out.size()) < k || !is_clique(g, out))
    throw std::logic_error("solver model is not a " + std::to_string(k) + "-clique");
  return out;
}

CliqueResult max_clique(const Graph& g, const SolverOptions& opts) {
  CliqueResult res;
  if (g.n() == 0) return res;
  if (g.num_edges() == 0) {
    res.vertices = {1};
    return res;
  }
  const auto [u, v] = *g.edges().begin();
  res.vertices = {u, v};
  for (int k = 3;; ++k) {
    std::optional<std::vector<int>> found;
    try {
      found = find_k_clique(g, k, opts);
    } catch (const SolveInterrupted&) {
      res.proven_optimal = false;
      return res;
    }
    res.iterations.push_back({k, found.has_value()});
    if (!found) return res;
    res.vertices = std::move(*found);
  }
}

bool naive_k_clique_reference(const Graph& g, int k) {
  if (g.n() > 16) throw std::invalid_argument("naive clique reference is limited to 16 vertices");
  if (k < 1) throw std::invalid_argument("clique size must be at least 1");
  if (k > g.n()) return false;
  VarAllocator alloc;
  std::vector<BoolExpr> xs;
  for (int v = 1; v <= g.n(); ++v) {
    const std::string name = "x" + std::to_string(v);
    alloc.reserve(name);
    xs.push_back(var(name));
  }
  CnfFormula f;
  for (int i = 1; i <= g.n(); ++i)
    for (int j = i + 1; j <= g.n(); ++j)
      if (!g.adjacent(i, j)) f.add({neg(VarId{static_cast<std::uint32_t>(i)}), neg(VarId{static_cast<std::uint32_t>(j)})});

  std::vector<BoolExpr> terms;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) pick[static_cast<std::size_t>(t)] = t;
  while (true) {
    std::vector<BoolExpr> conj;
    for (int t : pick) conj.push_back(xs[static_cast<std::size_t>(t)]);
    terms.push_back(and_of(std::move(conj)));
    int t = k - 1;
    while (t >= 0 && pick[static_cast<std::size_t>(t)] == g.n() - k + t) --t;
    if (t < 0) break;
    ++pick[static_cast<std::size_t>(t)];
    for (int s = t + 1; s < k; ++s) pick[static_cast<std::size_t>(s)] = pick[static_cast<std::size_t>(s - 1)] + 1;
  }
  TseitinEncoder enc(alloc, f);
  enc.assert_true(or_of(std::move(terms)));
  f.reserve_vars(alloc.count());
  const SolveResult r = solve(f);
  if (r.is_unknown()) throw SolveInterrupted();
  return r.is_sat();
}

Graph random_graph(int n, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Graph g(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (rng.unit() < p) g.add_edge(i, j);
  return g;
}

}  // namespace satkit
