#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "satkit/error.hpp"
#include "satkit/zebra.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace satkit;

namespace {

PuzzleSpec einstein() { return parse_zebra_spec(einstein_spec_text()); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t category_of(const PuzzleSpec& spec, std::string_view name) {
  for (std::size_t c = 0; c < spec.categories.size(); ++c)
    if (spec.categories[c].name == name) return c;
  throw std::out_of_range("no category");
}

int position_of(const ZebraTable& t, std::size_t cat, std::string_view value) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i][cat] == value) return static_cast<int>(i) + 1;
  return 0;
}

std::set<ZebraTable> as_set(std::vector<ZebraTable> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(ZebraSpec, EinsteinShape) {
  const PuzzleSpec spec = einstein();
  EXPECT_EQ(spec.positions, 5);
  EXPECT_EQ(spec.categories.size(), 5u);
  for (const Category& c : spec.categories) EXPECT_EQ(c.values.size(), 5u);
  EXPECT_EQ(spec.clues.size(), 15u);
  EXPECT_EQ(spec.clues[3], Clue::left_of("green", "white"));
  EXPECT_EQ(spec.clues[7], Clue::at("milk", 3));
  EXPECT_EQ(spec.clues[8], Clue::at("Norwegian", 1));
}

TEST(ZebraSpec, ShippedFileMatchesBuiltIn) {
  EXPECT_EQ(read_file(fixtures::data_path("einstein.zebra")), std::string(einstein_spec_text()));
}

TEST(ZebraSpec, WriteThenParseRoundTrip) {
  const PuzzleSpec spec = einstein();
  const PuzzleSpec again = parse_zebra_spec(write_zebra_spec(spec));
  EXPECT_EQ(again.positions, spec.positions);
  EXPECT_EQ(again.clues, spec.clues);
  ASSERT_EQ(again.categories.size(), spec.categories.size());
  for (std::size_t c = 0; c < spec.categories.size(); ++c) {
    EXPECT_EQ(again.categories[c].name, spec.categories[c].name);
    EXPECT_EQ(again.categories[c].values, spec.categories[c].values);
  }
}

TEST(ZebraSpec, EmptyClueSectionIsValid) {
  const PuzzleSpec spec = parse_zebra_spec("category a: x y\ncategory b: p q\n");
  EXPECT_EQ(spec.positions, 2);
  EXPECT_TRUE(spec.clues.empty());
  EXPECT_EQ(enumerate_zebra(spec, 100).size(), 4u);
}

namespace {
std::size_t error_line(std::string_view text) {
  try {
    parse_zebra_spec(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  ADD_FAILURE() << "accepted: " << text;
  return 0;
}
}  // namespace

TEST(ZebraSpec, Errors) {
  EXPECT_EQ(error_line("category a: x y\ncategory b: p q\nsame(x, qq)\n"), 3u);
  EXPECT_EQ(error_line("category a: x y\ncategory b: p x\n"), 2u);
  EXPECT_EQ(error_line("category a: x y\ncategory b: p q r\n"), 2u);
  EXPECT_EQ(error_line("category a: x y\n\nsame(x)\n"), 3u);
  EXPECT_EQ(error_line("category a: x y\npos(x, 3)\n"), 2u);
  EXPECT_EQ(error_line("category a: x y\nbeside(x, y)\n"), 2u);
  EXPECT_EQ(error_line("category a: x y\npos(x, 1)\ncategory b: p q\n"), 3u);
  EXPECT_EQ(error_line("category a: x y\npositions 2\n"), 2u);
}

TEST(ZebraEncode, EinsteinHas125Variables) {
  const ZebraEncoding enc = encode_zebra(einstein());
  EXPECT_EQ(enc.vars.size(), 125u);
  EXPECT_EQ(enc.formula.num_vars(), 125u);
  EXPECT_EQ(enc.vars.at({1, "red"}).index, 1u);
  EXPECT_EQ(enc.vars.at({1, "Brit"}).index, 6u);
  EXPECT_EQ(enc.vars.at({5, "fish"}).index, 125u);
}

TEST(ZebraEncode, SinglePosition) {
  const PuzzleSpec spec = parse_zebra_spec("category a: only\n");
  const auto t = solve_zebra(spec);
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ((*t)[0][0], "only");
  EXPECT_TRUE(is_unique_zebra(spec));
}

TEST(ZebraEncode, ConflictingPositionsAreUnsat) {
  const PuzzleSpec spec = parse_zebra_spec("category a: x y z\npos(x, 2)\npos(y, 2)\n");
  EXPECT_FALSE(solve_zebra(spec).has_value());
  EXPECT_FALSE(is_unique_zebra(spec));
}

TEST(Einstein, GermanOwnsTheFishInHouseFour) {
  const PuzzleSpec spec = einstein();
  const auto t = solve_zebra(spec);
  ASSERT_TRUE(t.has_value());
  EXPECT_TRUE(satisfies_clues(spec, *t));
  EXPECT_EQ((*t)[3][category_of(spec, "nationality")], "German");
  EXPECT_EQ((*t)[3][category_of(spec, "pet")], "fish");
  EXPECT_TRUE(is_unique_zebra(spec));
}

TEST(Einstein, MatchesBruteForce) {
  const PuzzleSpec spec = einstein();
  const auto oracle_tables = oracle::zebra_brute_force(spec, 10);
  ASSERT_EQ(oracle_tables.size(), 1u);
  EXPECT_EQ(*solve_zebra(spec), oracle_tables[0]);
}

TEST(Einstein, DroppingFactNineLosesUniqueness) {
  PuzzleSpec spec = einstein();
  spec.clues.erase(spec.clues.begin() + 8);
  EXPECT_FALSE(is_unique_zebra(spec));
  const auto tables = enumerate_zebra(spec, 1000);
  EXPECT_GE(tables.size(), 2u);
  EXPECT_EQ(as_set(tables), as_set(oracle::zebra_brute_force(spec, 1000)));
  for (const ZebraTable& t : tables) EXPECT_TRUE(satisfies_clues(spec, t));
}

// Reading fact 4 as "green is somewhere left of white" admits more than one
// solution. The looser clue is added as raw clauses over the encoding.
TEST(Einstein, SomewhereLeftReadingIsNotUnique) {
  PuzzleSpec spec = einstein();
  spec.clues.erase(spec.clues.begin() + 3);
  ZebraEncoding enc = encode_zebra(spec);
  for (int i = 1; i <= 5; ++i) {
    std::vector<Literal> c{neg(enc.vars.at({i, "green"}))};
    for (int j = i + 1; j <= 5; ++j) c.push_back(pos(enc.vars.at({j, "white"})));
    enc.formula.add(Clause(c));
  }
  const auto scope = enc.vars.ids();
  const auto models = enumerate(enc.formula, scope, 10);
  EXPECT_GE(models.size(), 2u);

  // Same count from the oracle: strict-left solutions without fact 4.
  std::size_t expected = 0;
  const std::size_t colour = category_of(spec, "colour");
  for (const ZebraTable& t : oracle::zebra_brute_force(spec, 10000))
    if (position_of(t, colour, "green") < position_of(t, colour, "white")) ++expected;
  EXPECT_EQ(models.size(), std::min<std::size_t>(expected, 10));
}

TEST(Einstein, ClueOrderDoesNotMatter) {
  PuzzleSpec spec = einstein();
  spec.clues.erase(spec.clues.begin() + 8);  // several solutions, so set equality is meaningful
  const auto reference = as_set(enumerate_zebra(spec, 1000));
  SplitMix64 rng(77);
  for (int trial = 0; trial < 5; ++trial) {
    PuzzleSpec shuffled = spec;
    shuffle(shuffled.clues, rng);
    EXPECT_EQ(as_set(enumerate_zebra(shuffled, 1000)), reference);
  }
  PuzzleSpec full = einstein();
  std::reverse(full.clues.begin(), full.clues.end());
  EXPECT_EQ(*solve_zebra(full), *solve_zebra(einstein()));
}

TEST(ZebraSolve, RandomSpecsAgreeWithBruteForce) {
  SplitMix64 rng(2);
  for (int trial = 0; trial < 60; ++trial) {
    PuzzleSpec spec;
    spec.positions = 2 + static_cast<int>(rng.below(3));
    const int cats = 1 + static_cast<int>(rng.below(3));
    std::vector<std::string> all;
    for (int c = 0; c < cats; ++c) {
      Category cat{"c" + std::to_string(c), {}};
      for (int v = 0; v < spec.positions; ++v) {
        cat.values.push_back("v" + std::to_string(c) + "_" + std::to_string(v));
        all.push_back(cat.values.back());
      }
      spec.categories.push_back(cat);
    }
    const int clues = static_cast<int>(rng.below(5));
    for (int k = 0; k < clues; ++k) {
      const std::string& a = all[rng.below(all.size())];
      const std::string& b = all[rng.below(all.size())];
      switch (rng.below(4)) {
        case 0: spec.clues.push_back(Clue::same(a, b)); break;
        case 1: spec.clues.push_back(Clue::at(a, 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.positions))))); break;
        case 2: spec.clues.push_back(Clue::left_of(a, b)); break;
        default: spec.clues.push_back(Clue::next_to(a, b)); break;
      }
    }
    const auto got = enumerate_zebra(spec, 100000);
    EXPECT_EQ(as_set(got), as_set(oracle::zebra_brute_force(spec, 100000))) << write_zebra_spec(spec);
    for (const ZebraTable& t : got) EXPECT_TRUE(satisfies_clues(spec, t));
  }
}

TEST(ZebraRender, HeaderAndRows) {
  const PuzzleSpec spec = einstein();
  const std::string r = render_zebra(spec, *solve_zebra(spec));
  EXPECT_EQ(std::count(r.begin(), r.end(), '\n'), 6);
  EXPECT_EQ(r.rfind("position", 0), 0u);
  EXPECT_NE(r.find("German"), std::string::npos);
}
