#include "satkit/cardinality.hpp"

#include <stdexcept>

namespace satkit {

AtLeastK at_least_k(std::span<const VarId> xs, int k, VarAllocator& alloc) {
  AtLeastK out;
  if (k <= 0) return out;
  const std::size_t n = xs.size();
  const auto kk = static_cast<std::size_t>(k);
  if (kk > n) {
    const VarId y = alloc.fresh();
    out.clauses.push_back(Clause{pos(y)});
    out.clauses.push_back(Clause{neg(y)});
    return out;
  }

  std::vector<VarId> ids;
  ids.reserve((n + 1) * (kk + 1));
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= kk; ++j) ids.push_back(alloc.fresh());
  out.counters = CounterVars(n, kk, std::move(ids));
  const CounterVars& s = out.counters;

  auto& cls = out.clauses;
  cls.reserve(kk + n + 1 + 4 * n * kk + 1);
  for (std::size_t j = 1; j <= kk; ++j) cls.push_back(Clause{neg(s.at(0, j))});
  for (std::size_t i = 0; i <= n; ++i) cls.push_back(Clause{pos(s.at(i, 0))});
  for (std::size_t i = 1; i <= n; ++i) {
    const VarId x = xs[i - 1];
    for (std::size_t j = 1; j <= kk; ++j) {
      cls.push_back(Clause{neg(s.at(i - 1, j)), pos(s.at(i, j))});
      cls.push_back(Clause{neg(x), neg(s.at(i - 1, j - 1)), pos(s.at(i, j))});
      cls.push_back(Clause{neg(s.at(i, j)), pos(s.at(i - 1, j)), pos(x)});
      cls.push_back(Clause{neg(s.at(i, j)), pos(s.at(i - 1, j)), pos(s.at(i - 1, j - 1))});
    }
  }
  cls.push_back(Clause{pos(s.at(n, kk))});
  return out;
}

std::vector<Clause> at_most_one(std::span<const VarId> xs) {
  std::vector<Clause> out;
  out.reserve(xs.size() * (xs.size() - (xs.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) out.push_back(Clause{neg(xs[i]), neg(xs[j])});
  return out;
}

std::vector<Clause> exactly_one(std::span<const VarId> xs) {
  if (xs.empty()) throw std::invalid_argument("exactly_one over an empty set");
  std::vector<Literal> any;
  any.reserve(xs.size());
  for (VarId x : xs) any.push_back(pos(x));
  std::vector<Clause> out{Clause(std::move(any))};
  auto pairs = at_most_one(xs);
  out.insert(out.end(), std::make_move_iterator(pairs.begin()), std::make_move_iterator(pairs.end()));
  return out;
}

}  // namespace satkit
