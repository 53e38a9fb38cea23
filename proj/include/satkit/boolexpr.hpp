#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "satkit/cnf.hpp"

namespace satkit {

// The connectives of the Maple Logic package: unary negation, binary
// implication and biconditional, and the n-ary (>= 1 operand) rest.
enum class Op : std::uint8_t { var, not_, and_, or_, implies, iff, xor_, nand, nor };

std::string_view op_name(Op op);

// Immutable expression tree; copies share nodes. Node identity (id()) is what
// the Tseitin encoder memoizes on, so reusing a subexpression object reuses its
// definition variable.
class BoolExpr {
 public:
  Op op() const { return node_->op; }
  // Precondition: op() == Op::var.
  const std::string& name() const { return node_->name; }
  std::span<const BoolExpr> children() const { return node_->children; }
  const void* id() const { return node_.get(); }

  bool is_var() const { return op() == Op::var; }
  // A variable or the negation of one.
  bool is_literal() const { return is_var() || (op() == Op::not_ && children()[0].is_var()); }

  std::size_t node_count() const;

  friend BoolExpr make_expr(Op op, std::vector<BoolExpr> children);
  friend BoolExpr var(std::string name);

 private:
  struct Node {
    Op op;
    std::string name;
    std::vector<BoolExpr> children;
  };
  explicit BoolExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

BoolExpr var(std::string name);
// Checks arity: not_ takes 1, implies/iff take 2, the others >= 1.
BoolExpr make_expr(Op op, std::vector<BoolExpr> children);

inline BoolExpr not_of(BoolExpr e) { return make_expr(Op::not_, {std::move(e)}); }
inline BoolExpr and_of(std::vector<BoolExpr> es) { return make_expr(Op::and_, std::move(es)); }
inline BoolExpr or_of(std::vector<BoolExpr> es) { return make_expr(Op::or_, std::move(es)); }
inline BoolExpr xor_of(std::vector<BoolExpr> es) { return make_expr(Op::xor_, std::move(es)); }
inline BoolExpr nand_of(std::vector<BoolExpr> es) { return make_expr(Op::nand, std::move(es)); }
inline BoolExpr nor_of(std::vector<BoolExpr> es) { return make_expr(Op::nor, std::move(es)); }
inline BoolExpr implies(BoolExpr a, BoolExpr b) { return make_expr(Op::implies, {std::move(a), std::move(b)}); }
inline BoolExpr iff(BoolExpr a, BoolExpr b) { return make_expr(Op::iff, {std::move(a), std::move(b)}); }

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name)
      : std::runtime_error("unbound variable `" + name + "`"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

using Assignment = std::map<std::string, bool, std::less<>>;

// Implies(x, y) is material implication, i.e. Or(Not x, y).
bool eval(const BoolExpr& e, const Assignment& a);

// Distinct variable names in first-occurrence (pre-order) order.
std::vector<std::string> variables_of(const BoolExpr& e);

// Logically equivalent CNF: And of Or of literals, degenerating to a single Or
// or literal when there is only one clause / one literal. Obtained by
// eliminating implications and biconditionals, pushing negations inward and
// distributing Or over And; n-ary Xor is folded left to right. Repeated
// literals inside a clause are merged but no other simplification happens, so
// the output can be exponentially larger than the input (Xor of n distinct
// variables yields 2^(n-1) clauses).
BoolExpr normalize_cnf(const BoolExpr& e);

// Number of clauses of an expression produced by normalize_cnf.
std::size_t cnf_clause_count(const BoolExpr& cnf);

struct TseitinOutput {
  CnfFormula formula;
  Literal root_literal;
  // Fresh variable -> the subexpression it is equivalent to.
  std::map<VarId, BoolExpr> definitions;
  std::map<std::string, VarId> input_vars;
};

// Incremental Tseitin transformation into a caller-owned formula. Each
// distinct non-literal node gets one fresh variable constrained to be
// equivalent to it (full biconditional definition, no polarity pruning).
// Negation never needs a variable: it flips the child's literal. n-ary Xor is
// decomposed pairwise left to right.
class TseitinEncoder {
 public:
  TseitinEncoder(VarAllocator& alloc, CnfFormula& out) : alloc_(alloc), out_(out) {}

  // Literal equivalent to `e` under the emitted definitions.
  Literal encode(const BoolExpr& e);
  // encode() plus a unit clause asserting the result.
  Literal assert_true(const BoolExpr& e);

  const std::map<VarId, BoolExpr>& definitions() const { return definitions_; }
  const std::map<std::string, VarId>& input_vars() const { return inputs_; }

 private:
  Literal input(const BoolExpr& v);
  Literal define(const BoolExpr& e, std::vector<Literal> kids);
  Literal define_xor2(const BoolExpr& whole, Literal a, Literal b);

  VarAllocator& alloc_;
  CnfFormula& out_;
  std::unordered_map<const void*, Literal> memo_;
  std::map<VarId, BoolExpr> definitions_;
  std::map<std::string, VarId> inputs_;
};

// One-shot transformation. Every variable of `e` must already be reserved in
// `alloc` (throws std::invalid_argument otherwise), so fresh ids are larger
// than input ids.
TseitinOutput tseitin_cnf(const BoolExpr& e, VarAllocator& alloc);
// Reserves the inputs in variables_of() order first.
TseitinOutput tseitin_cnf(const BoolExpr& e);

// Prefix syntax mirroring Maple's operator names:
//   expr  := ident | op '(' expr { ',' expr } ')'
//   op    := &not | &and | &or | &implies | &iff | &xor | &nand | &nor
//   ident := [A-Za-z_][A-Za-z0-9_.\[\]]*
// Whitespace is free; `#` starts a comment running to end of line.
BoolExpr parse_expr(std::string_view text);
std::string to_string(const BoolExpr& e);

}  // namespace satkit
