#pragma once

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "satkit/cnf.hpp"

namespace satkit {

struct SolverOptions {
  std::uint64_t random_seed = 0;
  // Seed variable activities and initial phases from random_seed. With this
  // off every activity starts at zero and every phase at false.
  bool rnd_init_act = false;
  std::optional<std::uint64_t> conflict_budget;
  std::optional<std::chrono::milliseconds> time_budget;

  // Throws std::invalid_argument if a budget is present but not positive.
  void validate() const;
};

enum class SolveStatus { sat, unsat, unknown };

class SolveResult {
 public:
  static SolveResult satisfiable(Model m) { return SolveResult(SolveStatus::sat, std::move(m), {}); }
  static SolveResult unsatisfiable() { return SolveResult(SolveStatus::unsat, std::nullopt, {}); }
  static SolveResult unknown(std::string reason) {
    return SolveResult(SolveStatus::unknown, std::nullopt, std::move(reason));
  }

  SolveStatus status() const { return status_; }
  bool is_sat() const { return status_ == SolveStatus::sat; }
  bool is_unsat() const { return status_ == SolveStatus::unsat; }
  bool is_unknown() const { return status_ == SolveStatus::unknown; }
  // Precondition: is_sat().
  const Model& model() const { return *model_; }
  const std::string& reason() const { return reason_; }

 private:
  SolveResult(SolveStatus s, std::optional<Model> m, std::string r)
      : status_(s), model_(std::move(m)), reason_(std::move(r)) {}

  SolveStatus status_;
  std::optional<Model> model_;
  std::string reason_;
};

struct SolverStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t conflicts = 0;
  std::uint64_t restarts = 0;
  std::uint64_t learnt_clauses = 0;
  std::uint64_t deleted_clauses = 0;
};

// CDCL engine: two watched literals, first-UIP learning with recursive
// minimization, VSIDS branching, Luby restarts, phase saving, LBD-based
// clause deletion. Not thread-safe; separate instances are independent.
//
// Clauses may be added between solve() calls (used for blocking-clause
// enumeration); each solve() starts from decision level 0.
class Solver {
 public:
  explicit Solver(const SolverOptions& opts = {});
  ~Solver();
  Solver(Solver&&) noexcept;
  Solver& operator=(Solver&&) noexcept;

  void reserve_vars(std::uint32_t count);
  // Returns false once the clause set is known to be unsatisfiable.
  bool add_clause(std::span<const Literal> lits);
  bool add_clause(const Clause& c) { return add_clause(c.literals()); }
  void add_formula(const CnfFormula& f);

  SolveResult solve(std::span<const Literal> assumptions = {});

  std::uint32_t num_vars() const;
  const SolverStats& stats() const;

 private:
  class Impl;
  std::unique_ptr<Impl> impl_;
};

SolveResult solve(const CnfFormula& f, const SolverOptions& opts = {},
                  std::span<const Literal> assumptions = {});

// Models pairwise distinct on `scope`, at most `limit` of them, found by
// adding a blocking clause after each one. Throws SolveInterrupted if a budget
// runs out before the enumeration is complete.
std::vector<Model> enumerate(const CnfFormula& f, std::span<const VarId> scope, std::size_t limit,
                             const SolverOptions& opts = {});

}  // namespace satkit
