#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "satkit/cardinality.hpp"
#include "satkit/cnf.hpp"
#include "satkit/solver.hpp"

namespace satkit {

// Undirected simple graph on vertices 1..n.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int n() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  // Throws std::invalid_argument on a self-loop or an endpoint out of range.
  // Adding an existing edge is a no-op.
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const;
  // Pairs (u, v) with u < v, sorted.
  const std::set<std::pair<int, int>>& edges() const { return edges_; }

 private:
  int n_ = 0;
  std::set<std::pair<int, int>> edges_;
  std::vector<std::vector<bool>> adj_;
};

// `p edge n m` header (`p col` also accepted), `e u v` edge lines, `c`
// comments. The declared edge count is not enforced because published files
// list some edges twice. Throws ParseError.
Graph parse_dimacs_graph(std::string_view text);
std::string write_dimacs_graph(const Graph& g);

struct CliqueEncoding {
  CnfFormula formula;
  std::vector<VarId> x;  // x[v - 1] for vertex v; ids 1..n
  CounterVars counters;
};

// x_1..x_n first, then the counter variables of at_least_k. Clause order:
// ~x_i | ~x_j for each non-adjacent pair i < j, then the counter clauses.
// Requires 1 <= k; k > n gives an unsatisfiable formula.
CliqueEncoding encode_k_clique(const Graph& g, int k);

struct CliqueIteration {
  int k = 0;
  bool sat = false;
  bool operator==(const CliqueIteration&) const = default;
};

struct CliqueResult {
  std::vector<int> vertices;  // sorted
  std::vector<CliqueIteration> iterations;
  // False when a budget ran out; vertices is then the best clique found.
  bool proven_optimal = true;
  std::size_t size() const { return vertices.size(); }
};

// Returns the clique for one k, nullopt if none exists. Throws SolveInterrupted.
std::optional<std::vector<int>> find_k_clique(const Graph& g, int k, const SolverOptions& opts = {});

// k = 3, 4, ... until Unsat, re-encoding for each k. With a budget in opts,
// an exhausted iteration ends the search with proven_optimal = false.
CliqueResult max_clique(const Graph& g, const SolverOptions& opts = {});

bool is_clique(const Graph& g, const std::vector<int>& vertices);

// Satisfiability of the disjunction over all k-subsets of x_1 & ... & x_k,
// plus the non-edge clauses, through Tseitin. Refuses n > 16.
bool naive_k_clique_reference(const Graph& g, int k);

// Random G(n, p) from SplitMix64.
Graph random_graph(int n, double p, std::uint64_t seed);

}  // namespace satkit
