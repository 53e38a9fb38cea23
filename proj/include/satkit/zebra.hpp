#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "satkit/cnf.hpp"
#include "satkit/solver.hpp"

namespace satkit {

struct Category {
  std::string name;
  std::vector<std::string> values;
};

struct Clue {
  enum class Kind { same, position, left_of, next_to };
  Kind kind = Kind::same;
  std::string a;
  std::string b;      // unused for position
  int position = 0;   // only for position, 1-based

  static Clue same(std::string a, std::string b) { return {Kind::same, std::move(a), std::move(b), 0}; }
  static Clue at(std::string a, int p) { return {Kind::position, std::move(a), {}, p}; }
  static Clue left_of(std::string a, std::string b) { return {Kind::left_of, std::move(a), std::move(b), 0}; }
  static Clue next_to(std::string a, std::string b) { return {Kind::next_to, std::move(a), std::move(b), 0}; }

  bool operator==(const Clue&) const = default;
};

struct PuzzleSpec {
  int positions = 0;
  std::vector<Category> categories;
  std::vector<Clue> clues;

  // Throws std::invalid_argument when a category does not have exactly
  // `positions` values, a value name repeats, or a clue names an unknown value
  // or an out-of-range position.
  void validate() const;
  // (category index, value index) of a value name.
  std::optional<std::pair<std::size_t, std::size_t>> locate(std::string_view value) const;
};

// Line-oriented clue file; see docs/zebra-format.md.
//   # comment
//   positions 5                        (optional, defaults to the first category's size)
//   category colour: red green white yellow blue
//   same(Brit, red)
//   pos(Norwegian, 1)
//   left-of(green, white)              (green immediately left of white)
//   next-to(Blends, cats)
// Throws ParseError with the line number.
PuzzleSpec parse_zebra_spec(std::string_view text);
std::string write_zebra_spec(const PuzzleSpec& spec);

// The fifteen facts of the Einstein riddle, in this file format.
std::string_view einstein_spec_text();

struct ZebraKey {
  int position = 0;
  std::string value;
  auto operator<=>(const ZebraKey&) const = default;
};

struct ZebraEncoding {
  CnfFormula formula;
  // S(i, value), allocated position-major, then category, then value order.
  VarMap<ZebraKey> vars;
};

ZebraEncoding encode_zebra(const PuzzleSpec& spec);

// table[position - 1][category] is the value held at that position.
using ZebraTable = std::vector<std::vector<std::string>>;

std::optional<ZebraTable> solve_zebra(const PuzzleSpec& spec, const SolverOptions& opts = {});
bool is_unique_zebra(const PuzzleSpec& spec, const SolverOptions& opts = {});
// All solutions, up to `limit`.
std::vector<ZebraTable> enumerate_zebra(const PuzzleSpec& spec, std::size_t limit, const SolverOptions& opts = {});

// Clue evaluator that does not consult the solver. Also checks that every
// row holds one value per category and each value is used exactly once.
bool satisfies_clues(const PuzzleSpec& spec, const ZebraTable& table);

std::string render_zebra(const PuzzleSpec& spec, const ZebraTable& table);

}  // namespace satkit
