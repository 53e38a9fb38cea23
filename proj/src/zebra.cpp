#include "satkit/zebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "satkit/cardinality.hpp"
#include "satkit/error.hpp"

namespace satkit {

std::optional<std::pair<std::size_t, std::size_t>> PuzzleSpec::locate(std::string_view value) const {
  for (std::size_t c = 0; c < categories.size(); ++c) {
    const auto& vals = categories[c].values;
    for (std::size_t v = 0; v < vals.size(); ++v)
      if (vals[v] == value) return std::pair{c, v};
  }
  return std::nullopt;
}

void PuzzleSpec::validate() const {
  if (positions < 1) throw std::invalid_argument("puzzle needs at least one position");
  std::set<std::string, std::less<>> names;
  for (const Category& cat : categories) {
    if (cat.values.size() != static_cast<std::size_t>(positions))
      throw std::invalid_argument("category `" + cat.name + "` must have exactly " + std::to_string(positions) +
                                  " values");
    for (const std::string& v : cat.values)
      if (!names.insert(v).second) throw std::invalid_argument("duplicate value `" + v + "`");
  }
  for (const Clue& clue : clues) {
    if (!names.contains(clue.a)) throw std::invalid_argument("clue names unknown value `" + clue.a + "`");
    if (clue.kind == Clue::Kind::position) {
      if (clue.position < 1 || clue.position > positions)
        throw std::invalid_argument("position " + std::to_string(clue.position) + " out of range");
    } else if (!names.contains(clue.b)) {
      throw std::invalid_argument("clue names unknown value `" + clue.b + "`");
    }
  }
}

// ---------------------------------------------------------------------------
// Clue file format

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
  });
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

const char* kind_keyword(Clue::Kind k) {
  switch (k) {
    case Clue::Kind::same: return "same";
    case Clue::Kind::position: return "pos";
    case Clue::Kind::left_of: return "left-of";
    case Clue::Kind::next_to: return "next-to";
  }
  return "?";
}

}  // namespace

PuzzleSpec parse_zebra_spec(std::string_view text) {
  PuzzleSpec spec;
  int declared_positions = 0;
  std::size_t positions_line = 0;
  std::set<std::string, std::less<>> names;
  bool seen_clue = false;
  std::size_t line_no = 0;

  auto require_value = [&](const std::string& v, std::size_t line) {
    if (!names.contains(v)) throw ParseError(line, "unknown value `" + v + "`");
  };

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("positions") && (line.size() == 9 || std::isspace(static_cast<unsigned char>(line[9])))) {
      const auto words = split_words(line);
      if (words.size() != 2) throw ParseError(line_no, "expected `positions <count>`");
      try {
        std::size_t used = 0;
        declared_positions = std::stoi(words[1], &used);
        if (used != words[1].size() || declared_positions < 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError(line_no, "invalid position count `" + words[1] + "`");
      }
      if (!spec.categories.empty()) throw ParseError(line_no, "`positions` must precede the categories");
      positions_line = line_no;
      continue;
    }

    if (line.starts_with("category") && line.size() > 8 && std::isspace(static_cast<unsigned char>(line[8]))) {
      if (seen_clue) throw ParseError(line_no, "category declared after clues");
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) throw ParseError(line_no, "expected `category <name>: <values>`");
      Category cat;
      cat.name = std::string(trim(line.substr(8, colon - 8)));
      if (!valid_name(cat.name)) throw ParseError(line_no, "invalid category name `" + cat.name + "`");
      cat.values = split_words(line.substr(colon + 1));
      if (declared_positions == 0) declared_positions = static_cast<int>(cat.values.size());
      if (cat.values.size() != static_cast<std::size_t>(declared_positions))
        throw ParseError(line_no, "category `" + cat.name + "` has " + std::to_string(cat.values.size()) +
                                      " values, expected " + std::to_string(declared_positions));
      for (const std::string& v : cat.values) {
        if (!valid_name(v)) throw ParseError(line_no, "invalid value name `" + v + "`");
        if (!names.insert(v).second) throw ParseError(line_no, "duplicate value `" + v + "`");
      }
      spec.categories.push_back(std::move(cat));
      continue;
    }

    // keyword(arg, arg)
    const auto open = line.find('(');
    if (open == std::string_view::npos || line.back() != ')')
      throw ParseError(line_no, "unrecognized line `" + std::string(line) + "`");
    const std::string keyword(trim(line.substr(0, open)));
    std::vector<std::string> args;
    std::string_view inner = line.substr(open + 1, line.size() - open - 2);
    while (true) {
      const auto comma = inner.find(',');
      args.emplace_back(trim(inner.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      inner.remove_prefix(comma + 1);
    }
    if (args.size() != 2 || args[0].empty() || args[1].empty())
      throw ParseError(line_no, "`" + keyword + "` takes exactly two arguments");

    seen_clue = true;
    if (keyword == "pos") {
      require_value(args[0], line_no);
      int p = 0;
      try {
        std::size_t used = 0;
        p = std::stoi(args[1], &used);
        if (used != args[1].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ParseError(line_no, "invalid position `" + args[1] + "`");
      }
      if (p < 1 || p > declared_positions) throw ParseError(line_no, "position " + args[1] + " out of range");
      spec.clues.push_back(Clue::at(args[0], p));
      continue;
    }
    require_value(args[0], line_no);
    require_value(args[1], line_no);
    if (keyword == "same")
      spec.clues.push_back(Clue::same(args[0], args[1]));
    else if (keyword == "left-of")
      spec.clues.push_back(Clue::left_of(args[0], args[1]));
    else if (keyword == "next-to")
      spec.clues.push_back(Clue::next_to(args[0], args[1]));
    else
      throw ParseError(line_no, "unknown clue `" + keyword + "`");
  }

  if (spec.categories.empty()) throw ParseError(positions_line, "no categories declared");
  spec.positions = declared_positions;
  spec.validate();
  return spec;
}

std::string write_zebra_spec(const PuzzleSpec& spec) {
  std::string out = "positions " + std::to_string(spec.positions) + "\n";
  for (const Category& c : spec.categories) {
    out += "category " + c.name + ":";
    for (const std::string& v : c.values) out += " " + v;
    out += "\n";
  }
  for (const Clue& clue : spec.clues) {
    out += kind_keyword(clue.kind);
    out += "(" + clue.a + ", " + (clue.kind == Clue::Kind::position ? std::to_string(clue.position) : clue.b) + ")\n";
  }
  return out;
}

std::string_view einstein_spec_text() {
  return R"(# The Einstein riddle. Houses are numbered 1 (leftmost) to 5.
category colour: red green white yellow blue
category nationality: Brit Swede Dane Norwegian German
category drink: tea coffee milk beer water
category smoke: PallMall Dunhill Blends BlueMaster Prince
category pet: dogs birds cats horses fish

same(Brit, red)             # 1. The Brit lives in the red house.
same(Swede, dogs)           # 2. The Swede keeps dogs.
same(Dane, tea)             # 3. The Dane drinks tea.
left-of(green, white)       # 4. The green house is immediately left of the white house.
same(green, coffee)         # 5. The owner of the green house drinks coffee.
same(PallMall, birds)       # 6. The Pall Mall smoker rears birds.
same(yellow, Dunhill)       # 7. The owner of the yellow house smokes Dunhill.
pos(milk, 3)                # 8. The centre house drinks milk.
pos(Norwegian, 1)           # 9. The Norwegian lives in the first house.
next-to(Blends, cats)       # 10. The Blends smoker lives next to the cat owner.
next-to(horses, Dunhill)    # 11. The horse keeper lives next to the Dunhill smoker.
same(BlueMaster, beer)      # 12. The Blue Master smoker drinks beer.
same(German, Prince)        # 13. The German smokes Prince.
next-to(Norwegian, blue)    # 14. The Norwegian lives next to the blue house.
next-to(Blends, water)      # 15. The Blends smoker has a neighbour who drinks water.
)";
}

// ---------------------------------------------------------------------------
// Encoding

ZebraEncoding encode_zebra(const PuzzleSpec& spec) {
  spec.validate();
  const int n = spec.positions;
  ZebraEncoding enc;
  VarAllocator alloc;
  for (int i = 1; i <= n; ++i)
    for (const Category& cat : spec.categories)
      for (const std::string& v : cat.values) enc.vars.add({i, v}, alloc);
  enc.formula.reserve_vars(alloc.count());

  auto s = [&](int i, const std::string& v) { return enc.vars.at({i, v}); };
  auto add_all = [&](const std::vector<Clause>& cls) { enc.formula.append(cls); };

  for (const Category& cat : spec.categories) {
    for (const std::string& v : cat.values) {
      std::vector<VarId> where;
      for (int i = 1; i <= n; ++i) where.push_back(s(i, v));
      add_all(exactly_one(where));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (const Category& cat : spec.categories) {
      std::vector<VarId> which;
      for (const std::string& v : cat.values) which.push_back(s(i, v));
      add_all(exactly_one(which));
    }
  }

  for (const Clue& clue : spec.clues) {
    switch (clue.kind) {
      case Clue::Kind::same:
        for (int i = 1; i <= n; ++i) enc.formula.add_if_nontrivial({neg(s(i, clue.a)), pos(s(i, clue.b))});
        break;
      case Clue::Kind::position:
        enc.formula.add({pos(s(clue.position, clue.a))});
        break;
      case Clue::Kind::left_of:
        for (int i = 1; i < n; ++i) enc.formula.add_if_nontrivial({neg(s(i, clue.a)), pos(s(i + 1, clue.b))});
        enc.formula.add({neg(s(n, clue.a))});
        break;
      case Clue::Kind::next_to:
        for (int i = 1; i <= n; ++i) {
          std::vector<Literal> c{neg(s(i, clue.a))};
          if (i > 1) c.push_back(pos(s(i - 1, clue.b)));
          if (i < n) c.push_back(pos(s(i + 1, clue.b)));
          enc.formula.add_if_nontrivial(std::move(c));
        }
        break;
    }
  }
  return enc;
}

namespace {

ZebraTable decode(const PuzzleSpec& spec, const ZebraEncoding& enc, const Model& m) {
  ZebraTable table(static_cast<std::size_t>(spec.positions), std::vector<std::string>(spec.categories.size()));
  for (const auto& [key, id] : enc.vars) {
    if (!m.value(id)) continue;
    const auto loc = spec.locate(key.value);
    table[static_cast<std::size_t>(key.position - 1)][loc->first] = key.value;
  }
  return table;
}

}  // namespace

std::vector<ZebraTable> enumerate_zebra(const PuzzleSpec& spec, std::size_t limit, const SolverOptions& opts) {
  const ZebraEncoding enc = encode_zebra(spec);
  const auto scope = enc.vars.ids();
  std::vector<ZebraTable> out;
  for (const Model& m : enumerate(enc.formula, scope, limit, opts)) {
    ZebraTable t = decode(spec, enc, m);
    if (!satisfies_clues(spec, t)) throw std::logic_error("solver model violates a clue");
    out.push_back(std::move(t));
  }
  return out;
}

std::optional<ZebraTable> solve_zebra(const PuzzleSpec& spec, const SolverOptions& opts) {
  auto tables = enumerate_zebra(spec, 1, opts);
  if (tables.empty()) return std::nullopt;
  return std::move(tables.front());
}

bool is_unique_zebra(const PuzzleSpec& spec, const SolverOptions& opts) {
  return enumerate_zebra(spec, 2, opts).size() == 1;
}

bool satisfies_clues(const PuzzleSpec& spec, const ZebraTable& table) {
  const auto n = static_cast<std::size_t>(spec.positions);
  if (table.size() != n) return false;
  std::map<std::string, int, std::less<>> where;
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != spec.categories.size()) return false;
    for (std::size_t c = 0; c < spec.categories.size(); ++c) {
      const auto& vals = spec.categories[c].values;
      if (std::find(vals.begin(), vals.end(), table[i][c]) == vals.end()) return false;
      if (!where.emplace(table[i][c], static_cast<int>(i + 1)).second) return false;
    }
  }
  for (const Clue& clue : spec.clues) {
    const int pa = where.at(clue.a);
    switch (clue.kind) {
      case Clue::Kind::same:
        if (pa != where.at(clue.b)) return false;
        break;
      case Clue::Kind::position:
        if (pa != clue.position) return false;
        break;
      case Clue::Kind::left_of:
        if (pa + 1 != where.at(clue.b)) return false;
        break;
      case Clue::Kind::next_to:
        if (std::abs(pa - where.at(clue.b)) != 1) return false;
        break;
    }
  }
  return true;
}

std::string render_zebra(const PuzzleSpec& spec, const ZebraTable& table) {
  std::vector<std::size_t> width(spec.categories.size() + 1, 0);
  width[0] = std::string("position").size();
  for (std::size_t c = 0; c < spec.categories.size(); ++c) {
    width[c + 1] = spec.categories[c].name.size();
    for (const auto& row : table) width[c + 1] = std::max(width[c + 1], row[c].size());
  }
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(w, s.size()), ' ');
    return s;
  };
  std::string out = pad("position", width[0]);
  for (std::size_t c = 0; c < spec.categories.size(); ++c) out += "  " + pad(spec.categories[c].name, width[c + 1]);
  while (!out.empty() && out.back() == ' ') out.pop_back();
  out += '\n';
  for (std::size_t i = 0; i < table.size(); ++i) {
    std::string line = pad(std::to_string(i + 1), width[0]);
    for (std::size_t c = 0; c < table[i].size(); ++c) line += "  " + pad(table[i][c], width[c + 1]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + '\n';
  }
  return out;
}

}  // namespace satkit
