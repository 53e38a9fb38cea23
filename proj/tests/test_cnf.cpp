#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include "satkit/dimacs.hpp"
#include "satkit/error.hpp"
#include "support/oracles.hpp"

using namespace satkit;

namespace {
Literal L(long v) { return Literal::from_dimacs(v); }
}  // namespace

TEST(Literal, DimacsRoundTrip) {
  for (long v : {1L, -1L, 7L, -42L}) EXPECT_EQ(L(v).to_dimacs(), v);
  EXPECT_THROW(Literal::from_dimacs(0), std::invalid_argument);
  EXPECT_EQ((~L(3)).to_dimacs(), -3);
}

TEST(Clause, DropsDuplicatesKeepingFirstOccurrence) {
  const Clause c({L(2), L(-1), L(2), L(3), L(-1)});
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], L(2));
  EXPECT_EQ(c[1], L(-1));
  EXPECT_EQ(c[2], L(3));
}

TEST(Clause, RejectsTautology) {
  EXPECT_THROW(Clause({L(1), L(-1)}), std::invalid_argument);
  EXPECT_FALSE(Clause::make({L(2), L(5), L(-2)}).has_value());
  EXPECT_TRUE(Clause::make({L(2), L(5)}).has_value());
}

TEST(CnfFormula, NumVarsCoversLiterals) {
  CnfFormula f;
  f.add({L(3), L(-7)});
  EXPECT_EQ(f.num_vars(), 7u);
  f.reserve_vars(10);
  EXPECT_EQ(f.num_vars(), 10u);
  f.add_if_nontrivial({L(1), L(-1)});
  EXPECT_EQ(f.num_clauses(), 1u);
}

TEST(Model, EvalCnf) {
  EXPECT_TRUE(eval_cnf(CnfFormula(), Model(std::vector<bool>{})));
  CnfFormula f;
  f.add({L(1)});
  EXPECT_FALSE(eval_cnf(f, Model({false})));
  EXPECT_TRUE(eval_cnf(f, Model({true})));
}

TEST(BlockingClause, UnfoldsDefinition) {
  const Model m({true, false});
  const std::vector<VarId> scope{VarId{1}, VarId{2}};
  const Clause c = blocking_clause(m, scope);
  EXPECT_EQ(c, Clause({L(-1), L(2)}));
  EXPECT_FALSE(eval_clause(c, m));
  EXPECT_THROW(blocking_clause(m, {}), std::invalid_argument);
}

TEST(BlockingClause, TrueUnderEveryModelDifferingOnScope) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<bool> vals(6);
    for (auto&& v : vals) v = rng.below(2) == 1;
    const Model m(vals);
    std::vector<VarId> scope;
    for (std::uint32_t v = 1; v <= 6; ++v)
      if (rng.below(2)) scope.push_back(VarId{v});
    if (scope.empty()) scope.push_back(VarId{1});
    const Clause c = blocking_clause(m, scope);
    for (std::uint32_t bits = 0; bits < 64; ++bits) {
      std::vector<bool> other(6);
      for (int i = 0; i < 6; ++i) other[static_cast<std::size_t>(i)] = (bits >> i) & 1u;
      const Model o(other);
      const bool differs = std::any_of(scope.begin(), scope.end(), [&](VarId v) { return o.value(v) != m.value(v); });
      EXPECT_EQ(eval_clause(c, o), differs);
    }
  }
}

TEST(VarMap, Bijective) {
  VarMap<std::pair<int, int>> map;
  VarAllocator alloc;
  for (int x = 1; x <= 4; ++x)
    for (int y = 1; y <= 4; ++y) map.add({x, y}, alloc);
  EXPECT_EQ(map.size(), 16u);
  for (const auto& [key, id] : map) {
    EXPECT_EQ(map.at(key), id);
    EXPECT_EQ(map.key_of(id), key);
  }
  EXPECT_EQ(map.at({2, 3}).index, 7u);
  EXPECT_THROW(map.insert({1, 1}, VarId{99}), std::invalid_argument);
  EXPECT_THROW(map.insert({9, 9}, VarId{1}), std::invalid_argument);
}

TEST(VarAllocator, NamedAndFresh) {
  VarAllocator a;
  const VarId x = a.reserve("x");
  const VarId t = a.fresh();
  EXPECT_EQ(x.index, 1u);
  EXPECT_EQ(t.index, 2u);
  EXPECT_EQ(a.find("x"), x);
  EXPECT_FALSE(a.find("y").has_value());
  EXPECT_EQ(VarAllocator(5).fresh().index, 6u);
}

// ---------------------------------------------------------------------------

TEST(Dimacs, MinimalInstance) {
  const CnfFormula f = parse_dimacs("p cnf 2 2\n1 -2 0\n2 0\n");
  EXPECT_EQ(f.num_vars(), 2u);
  ASSERT_EQ(f.num_clauses(), 2u);
  EXPECT_EQ(f.clauses()[0], Clause({L(1), L(-2)}));
  EXPECT_EQ(f.clauses()[1], Clause({L(2)}));
}

TEST(Dimacs, CanonicalRoundTrip) {
  EXPECT_EQ(write_dimacs(parse_dimacs("p cnf 1 1\n1 0")), "p cnf 1 1\n1 0\n");
  EXPECT_EQ(write_dimacs(CnfFormula(4)), "p cnf 4 0\n");
  EXPECT_EQ(write_dimacs(parse_dimacs("c hi\np  cnf 3 2\n 1   -3\n 0 2\n3 0\n")), "p cnf 3 2\n1 -3 0\n2 3 0\n");
}

TEST(Dimacs, PercentEndsInput) {
  const CnfFormula f = parse_dimacs("p cnf 2 1\n1 2 0\n%\n0\n");
  EXPECT_EQ(f.num_clauses(), 1u);
}

TEST(Dimacs, RandomRoundTrip) {
  SplitMix64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const CnfFormula f = oracle::random_cnf(rng, 1 + static_cast<int>(rng.below(30)),
                                            static_cast<int>(rng.below(60)), 5);
    EXPECT_EQ(parse_dimacs(write_dimacs(f)), f);
  }
}

TEST(Dimacs, StreamOverload) {
  std::istringstream in("p cnf 2 1\n-1 2 0\n");
  EXPECT_EQ(parse_dimacs(in).num_clauses(), 1u);
}

namespace {
std::size_t error_line(std::string_view text) {
  try {
    parse_dimacs(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return 0;
}
}  // namespace

TEST(Dimacs, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("p cnf x 1\n1 0\n"), 1u);
  EXPECT_EQ(error_line("1 0\n"), 1u);
  EXPECT_EQ(error_line("c\np cnf 2 1\n1 3 0\n"), 3u);
  EXPECT_EQ(error_line("p cnf 2 1\n1 0\n2 0\n"), 3u);
  EXPECT_EQ(error_line("p cnf 2 1\np cnf 2 1\n"), 2u);
  EXPECT_EQ(error_line("p cnf 2 1\n1 -1 0\n"), 2u);
  EXPECT_THROW(parse_dimacs("p cnf 2 1\n1 2\n"), ParseError);      // missing 0
  EXPECT_THROW(parse_dimacs("p cnf 2 2\n1 2 0\n"), ParseError);    // too few clauses
  EXPECT_THROW(parse_dimacs(""), ParseError);
}
