#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace satkit {

// DIMACS-compatible variable index, always >= 1.
struct VarId {
  std::uint32_t index = 0;

  constexpr auto operator<=>(const VarId&) const = default;
};

class Literal {
 public:
  constexpr Literal() = default;
  constexpr explicit Literal(VarId var, bool negated = false) : var_(var), negated_(negated) {}

  // Inverse of to_dimacs(); 0 is rejected.
  static Literal from_dimacs(long value);

  constexpr VarId var() const { return var_; }
  constexpr bool negated() const { return negated_; }
  constexpr long to_dimacs() const {
    return negated_ ? -static_cast<long>(var_.index) : static_cast<long>(var_.index);
  }
  constexpr Literal operator~() const { return Literal(var_, !negated_); }

  constexpr auto operator<=>(const Literal&) const = default;

 private:
  VarId var_{};
  bool negated_ = false;
};

constexpr Literal pos(VarId v) { return Literal(v, false); }
constexpr Literal neg(VarId v) { return Literal(v, true); }

// A disjunction of literals. Duplicate literals are dropped (first occurrence
// wins, so the written order is kept); a clause containing both x and ~x is not
// representable.
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Literal> lits) : Clause(std::vector<Literal>(lits)) {}
  // Throws std::invalid_argument on a tautology.
  explicit Clause(std::vector<Literal> lits);

  // nullopt when `lits` is a tautology.
  static std::optional<Clause> make(std::vector<Literal> lits);

  std::span<const Literal> literals() const { return lits_; }
  std::size_t size() const { return lits_.size(); }
  bool empty() const { return lits_.empty(); }
  const Literal& operator[](std::size_t i) const { return lits_[i]; }
  auto begin() const { return lits_.begin(); }
  auto end() const { return lits_.end(); }

  bool operator==(const Clause&) const = default;

 private:
  struct Unchecked {};
  Clause(std::vector<Literal> lits, Unchecked) : lits_(std::move(lits)) {}

  std::vector<Literal> lits_;
};

class CnfFormula {
 public:
  CnfFormula() = default;
  explicit CnfFormula(std::uint32_t num_vars) : num_vars_(num_vars) {}

  std::uint32_t num_vars() const { return num_vars_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  const std::vector<Clause>& clauses() const { return clauses_; }

  // num_vars grows to cover every literal that is added.
  void add(Clause clause);
  void add(std::initializer_list<Literal> lits) { add(Clause(lits)); }
  // Drops the clause silently if it is a tautology.
  void add_if_nontrivial(std::vector<Literal> lits);
  void append(std::span<const Clause> clauses);
  void reserve_vars(std::uint32_t count);

  bool operator==(const CnfFormula&) const = default;

 private:
  std::uint32_t num_vars_ = 0;
  std::vector<Clause> clauses_;
};

// Hands out strictly increasing VarIds. Input variables of a Boolean
// expression are registered by name with reserve(); fresh() ids are anonymous.
class VarAllocator {
 public:
  VarAllocator() = default;
  // Start after an existing block of ids (e.g. the vars of an encoding).
  explicit VarAllocator(std::uint32_t used) : next_(used + 1) {}

  VarId fresh() { return VarId{next_++}; }
  VarId reserve(std::string_view name);
  std::optional<VarId> find(std::string_view name) const;

  std::uint32_t count() const { return next_ - 1; }
  const std::map<std::string, VarId, std::less<>>& named() const { return named_; }

 private:
  std::uint32_t next_ = 1;
  std::map<std::string, VarId, std::less<>> named_;
};

// Bijection between structured encoder keys and VarIds. Iteration follows
// insertion order, which each encoder documents.
template <class Key>
class VarMap {
 public:
  VarId insert(const Key& key, VarId id) {
    if (forward_.contains(key)) throw std::invalid_argument("VarMap: duplicate key");
    if (backward_.contains(id.index)) throw std::invalid_argument("VarMap: duplicate id");
    forward_.emplace(key, id);
    backward_.emplace(id.index, order_.size());
    order_.emplace_back(key, id);
    return id;
  }

  VarId add(const Key& key, VarAllocator& alloc) { return insert(key, alloc.fresh()); }

  VarId at(const Key& key) const {
    auto it = forward_.find(key);
    if (it == forward_.end()) throw std::out_of_range("VarMap: unknown key");
    return it->second;
  }

  std::optional<VarId> find(const Key& key) const {
    auto it = forward_.find(key);
    if (it == forward_.end()) return std::nullopt;
    return it->second;
  }

  const Key& key_of(VarId id) const {
    auto it = backward_.find(id.index);
    if (it == backward_.end()) throw std::out_of_range("VarMap: unknown id");
    return order_[it->second].first;
  }

  bool contains(VarId id) const { return backward_.contains(id.index); }
  std::size_t size() const { return order_.size(); }
  auto begin() const { return order_.begin(); }
  auto end() const { return order_.end(); }

  std::vector<VarId> ids() const {
    std::vector<VarId> out;
    out.reserve(order_.size());
    for (const auto& [key, id] : order_) out.push_back(id);
    return out;
  }

 private:
  std::map<Key, VarId> forward_;
  std::unordered_map<std::uint32_t, std::size_t> backward_;
  std::vector<std::pair<Key, VarId>> order_;
};

// Total assignment over variables 1..num_vars.
class Model {
 public:
  Model() = default;
  // values[i] is the value of variable i + 1.
  explicit Model(std::vector<bool> values);

  std::uint32_t num_vars() const { return static_cast<std::uint32_t>(values_.size()); }
  bool value(VarId v) const;
  bool satisfies(Literal l) const { return value(l.var()) != l.negated(); }
  std::vector<VarId> true_vars() const;

  bool operator==(const Model&) const = default;

 private:
  std::vector<bool> values_;
};

bool eval_cnf(const CnfFormula& f, const Model& m);
bool eval_clause(const Clause& c, const Model& m);

// Clause falsified by `m` and satisfied by every model that differs from it on
// some variable of `scope`.
Clause blocking_clause(const Model& m, std::span<const VarId> scope);

}  // namespace satkit
