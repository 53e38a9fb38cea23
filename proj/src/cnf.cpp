#include "satkit/cnf.hpp"

#include <algorithm>
#include <set>

namespace satkit {

Literal Literal::from_dimacs(long value) {
  if (value == 0) throw std::invalid_argument("literal 0 is the clause terminator");
  if (value > static_cast<long>(UINT32_MAX) || value < -static_cast<long>(UINT32_MAX))
    throw std::out_of_range("literal index out of range");
  const auto index = static_cast<std::uint32_t>(value < 0 ? -value : value);
  return Literal(VarId{index}, value < 0);
}

namespace {

// Removes repeated literals in place, keeping first occurrences. Returns false
// if the clause contains a complementary pair.
bool normalize_literals(std::vector<Literal>& lits) {
  std::vector<Literal> out;
  out.reserve(lits.size());
  if (lits.size() <= 16) {
    for (const Literal& l : lits) {
      if (std::find(out.begin(), out.end(), ~l) != out.end()) return false;
      if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
    }
  } else {
    std::set<Literal> seen;
    for (const Literal& l : lits) {
      if (seen.contains(~l)) return false;
      if (seen.insert(l).second) out.push_back(l);
    }
  }
  lits = std::move(out);
  return true;
}

}  // namespace

Clause::Clause(std::vector<Literal> lits) {
  for (const Literal& l : lits)
    if (l.var().index == 0) throw std::invalid_argument("variable index 0 in clause");
  if (!normalize_literals(lits)) throw std::invalid_argument("tautological clause");
  lits_ = std::move(lits);
}

std::optional<Clause> Clause::make(std::vector<Literal> lits) {
  for (const Literal& l : lits)
    if (l.var().index == 0) throw std::invalid_argument("variable index 0 in clause");
  if (!normalize_literals(lits)) return std::nullopt;
  return Clause(std::move(lits), Unchecked{});
}

void CnfFormula::add(Clause clause) {
  for (const Literal& l : clause) num_vars_ = std::max(num_vars_, l.var().index);
  clauses_.push_back(std::move(clause));
}

void CnfFormula::add_if_nontrivial(std::vector<Literal> lits) {
  if (auto c = Clause::make(std::move(lits))) add(std::move(*c));
}

void CnfFormula::append(std::span<const Clause> clauses) {
  clauses_.reserve(clauses_.size() + clauses.size());
  for (const Clause& c : clauses) add(c);
}

void CnfFormula::reserve_vars(std::uint32_t count) { num_vars_ = std::max(num_vars_, count); }

VarId VarAllocator::reserve(std::string_view name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  if (auto it = named_.find(name); it != named_.end()) return it->second;
  const VarId id = fresh();
  named_.emplace(std::string(name), id);
  return id;
}

std::optional<VarId> VarAllocator::find(std::string_view name) const {
  if (auto it = named_.find(name); it != named_.end()) return it->second;
  return std::nullopt;
}

Model::Model(std::vector<bool> values) : values_(std::move(values)) {}

bool Model::value(VarId v) const {
  if (v.index == 0 || v.index > values_.size()) throw std::out_of_range("variable not covered by model");
  return values_[v.index - 1];
}

std::vector<VarId> Model::true_vars() const {
  std::vector<VarId> out;
  for (std::uint32_t i = 0; i < values_.size(); ++i)
    if (values_[i]) out.push_back(VarId{i + 1});
  return out;
}

bool eval_clause(const Clause& c, const Model& m) {
  return std::any_of(c.begin(), c.end(), [&](const Literal& l) { return m.satisfies(l); });
}

bool eval_cnf(const CnfFormula& f, const Model& m) {
  return std::all_of(f.clauses().begin(), f.clauses().end(),
                     [&](const Clause& c) { return eval_clause(c, m); });
}

Clause blocking_clause(const Model& m, std::span<const VarId> scope) {
  if (scope.empty()) throw std::invalid_argument("blocking clause over an empty scope");
  std::vector<Literal> lits;
  lits.reserve(scope.size());
  for (VarId v : scope) lits.emplace_back(v, m.value(v));
  return Clause(std::move(lits));
}

}  // namespace satkit
