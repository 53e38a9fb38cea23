#pragma once

#include <span>
#include <vector>

#include "satkit/cnf.hpp"

namespace satkit {

// Sequential-counter variables s(i, j) for 0 <= i <= n, 0 <= j <= k:
// "at least j of the first i inputs are true".
class CounterVars {
 public:
  CounterVars() = default;
  CounterVars(std::size_t n, std::size_t k, std::vector<VarId> ids) : n_(n), k_(k), ids_(std::move(ids)) {}

  std::size_t n() const { return n_; }
  std::size_t k() const { return k_; }
  bool empty() const { return ids_.empty(); }
  VarId at(std::size_t i, std::size_t j) const { return ids_.at(i * (k_ + 1) + j); }
  const std::vector<VarId>& ids() const { return ids_; }

 private:
  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<VarId> ids_;
};

struct AtLeastK {
  std::vector<Clause> clauses;
  CounterVars counters;
};

// Sequential counter forcing at least k of xs true. Counter ids are allocated
// i-major (s(0,0), s(0,1), ..., s(n,k)). Emitted in this order:
//   units ~s(0,j) for 1<=j<=k, then s(i,0) for 0<=i<=n;
//   for i = 1..n, j = 1..k the four clauses of s(i,j) <-> s(i-1,j) | (x_i & s(i-1,j-1)):
//     ~s(i-1,j) | s(i,j)
//     ~x_i | ~s(i-1,j-1) | s(i,j)
//     ~s(i,j) | s(i-1,j) | x_i
//     ~s(i,j) | s(i-1,j) | s(i-1,j-1)
//   and finally the unit s(n,k).
// k > n yields the contradiction {y}, {~y} on one fresh variable; k <= 0
// yields nothing.
AtLeastK at_least_k(std::span<const VarId> xs, int k, VarAllocator& alloc);

// Pairwise ~x_i | ~x_j for i < j.
std::vector<Clause> at_most_one(std::span<const VarId> xs);

// The clause x_1 | ... | x_n followed by at_most_one(xs). xs must be non-empty.
std::vector<Clause> exactly_one(std::span<const VarId> xs);

}  // namespace satkit
