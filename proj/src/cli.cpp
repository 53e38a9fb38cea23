#include "satkit/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "satkit/boolexpr.hpp"
#include "satkit/clique.hpp"
#include "satkit/dimacs.hpp"
#include "satkit/error.hpp"
#include "satkit/fifteen.hpp"
#include "satkit/latin.hpp"
#include "satkit/queens.hpp"
#include "satkit/service.hpp"
#include "satkit/solver.hpp"
#include "satkit/sudoku.hpp"
#include "satkit/zebra.hpp"

namespace satkit {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

// Bad input detected after flag parsing (unreadable file, malformed grid, ...).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::optional<std::uint64_t> seed;
  std::optional<double> timeout;  // seconds
  std::string format = "ascii";
  std::string emit_path;
};

struct Ctx {
  const Globals& g;
  std::ostream& out;
  std::ostream& err;

  bool as_json() const { return g.format == "json"; }
  bool dimacs_only() const { return g.format == "dimacs"; }

  SolverOptions solver() const {
    SolverOptions o;
    if (g.seed) {
      o.random_seed = *g.seed;
      o.rnd_init_act = true;
    }
    if (g.timeout)
      o.time_budget = std::chrono::milliseconds(static_cast<std::int64_t>(std::ceil(*g.timeout * 1000.0)));
    return o;
  }

  // Writes the formula if --emit-dimacs was given. Returns true when the
  // caller should stop: --format dimacs, or emitting to stdout, means export
  // only so the stream stays a valid DIMACS file.
  bool emit(const CnfFormula& f) const {
    if (g.emit_path.empty()) return false;
    if (g.emit_path == "-") {
      write_dimacs(out, f);
      return true;
    }
    std::ofstream file(g.emit_path, std::ios::binary);
    if (!file) throw InputError("cannot write `" + g.emit_path + "`");
    write_dimacs(file, f);
    return dimacs_only();
  }

  int unknown() const {
    if (as_json())
      out << json{{"status", "unknown"}, {"reason", "budget-exhausted"}}.dump() << "\n";
    else
      out << "UNKNOWN (solver budget exhausted)\n";
    return 0;
  }
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read `" + path + "`");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json cell_json(int row, int col) { return json::array({row, col}); }

// ---------------------------------------------------------------------------

int cmd_queens(const Ctx& c, int n) {
  if (n < 1) throw InputError("-n must be at least 1");
  const QueensEncoding enc = encode_queens(n);
  if (c.emit(enc.formula)) return 0;
  const SolveResult r = solve(enc.formula, c.solver());
  if (r.is_unknown()) return c.unknown();
  if (r.is_unsat()) {
    c.out << (c.as_json() ? json{{"status", "unsat"}, {"n", n}}.dump() : std::string("UNSAT")) << "\n";
    return kExitUnsat;
  }
  const QueensBoard b = decode_queens(enc, r.model());
  if (!validate_queens(b)) throw std::logic_error("invalid queens board");
  if (c.as_json()) {
    json qs = json::array();
    for (Square s : b.queens) qs.push_back(cell_json(s.x, s.y));
    c.out << json{{"status", "sat"}, {"n", n}, {"queens", qs}}.dump() << "\n";
  } else {
    c.out << "SAT\n" << render_queens(b);
  }
  return kExitSat;
}

int cmd_zebra(const Ctx& c, const std::string& spec_path) {
  const PuzzleSpec spec = spec_path.empty() ? parse_zebra_spec(einstein_spec_text())
                                            : parse_zebra_spec(read_file(spec_path));
  const ZebraEncoding enc = encode_zebra(spec);
  if (c.emit(enc.formula)) return 0;
  std::vector<ZebraTable> tables;
  try {
    tables = enumerate_zebra(spec, 2, c.solver());
  } catch (const SolveInterrupted&) {
    return c.unknown();
  }
  if (tables.empty()) {
    c.out << (c.as_json() ? json{{"status", "none"}}.dump() : std::string("no solution")) << "\n";
    return kExitNone;
  }
  const bool unique = tables.size() == 1;
  if (c.as_json()) {
    json rows = json::array();
    for (std::size_t i = 0; i < tables[0].size(); ++i) {
      json row{{"position", i + 1}};
      for (std::size_t k = 0; k < spec.categories.size(); ++k) row[spec.categories[k].name] = tables[0][i][k];
      rows.push_back(row);
    }
    c.out << json{{"status", "found"}, {"unique", unique}, {"table", rows}}.dump() << "\n";
  } else {
    c.out << render_zebra(spec, tables[0]) << (unique ? "unique solution\n" : "more than one solution\n");
  }
  return kExitFound;
}

Grid grid_arg(const std::string& text) {
  if (text.empty()) throw InputError("--grid is required");
  try {
    return Grid::parse(text);
  } catch (const std::exception& e) {
    throw InputError(std::string("--grid: ") + e.what());
  }
}

std::string pretty_grid(const Grid& g) {
  std::string out;
  for (int r = 1; r <= 9; ++r) {
    for (int col = 1; col <= 9; ++col) {
      if (col > 1) out += (col == 4 || col == 7) ? " | " : " ";
      out += g.at(r, col) ? static_cast<char>('0' + g.at(r, col)) : '.';
    }
    out += '\n';
    if (r == 3 || r == 6) out += "------+-------+------\n";
  }
  return out;
}

int cmd_sudoku(const Ctx& c, const std::string& action, const std::string& grid_text, bool cell_amo) {
  if (action == "generate") {
    if (!c.g.emit_path.empty()) throw InputError("--emit-dimacs is not supported by `sudoku generate`");
    std::uint64_t seed = c.g.seed.value_or(static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::system_clock::now().time_since_epoch())
            .count()));
    SolverOptions o = c.solver();
    GenerationResult r;
    try {
      r = generate(seed, o);
    } catch (const SolveInterrupted&) {
      return c.unknown();
    }
    if (c.as_json()) {
      c.out << json{{"puzzle", r.puzzle.to_string()},
                    {"solution", r.solution.to_string()},
                    {"seed", seed},
                    {"bounds", {r.estimated_min_clues.first, r.estimated_min_clues.second}},
                    {"attempts", r.attempts}}
                   .dump()
            << "\n";
    } else {
      c.out << "seed " << seed << "\n"
            << "puzzle   " << r.puzzle.to_string() << "\n"
            << "solution " << r.solution.to_string() << "\n"
            << "minimum clues between " << r.estimated_min_clues.first << " and " << r.estimated_min_clues.second
            << "\n"
            << "attempts " << r.attempts << "\n"
            << pretty_grid(r.puzzle);
    }
    return kExitFound;
  }

  const Grid g = grid_arg(grid_text);
  if (c.emit(encode_sudoku(g, cell_amo).formula)) return 0;
  try {
    if (action == "solve") {
      const auto sol = solve_sudoku(g, c.solver(), cell_amo);
      if (!sol) {
        c.out << (c.as_json() ? json{{"status", "none"}}.dump() : std::string("no solution")) << "\n";
        return kExitNone;
      }
      if (c.as_json())
        c.out << json{{"status", "found"}, {"solution", sol->to_string()}}.dump() << "\n";
      else
        c.out << sol->to_string() << "\n" << pretty_grid(*sol);
      return kExitFound;
    }
    // unique
    bool unique = false;
    try {
      unique = is_unique(g, c.solver());
    } catch (const UnsatisfiableGrid&) {
      c.out << (c.as_json() ? json{{"status", "none"}}.dump() : std::string("no solution")) << "\n";
      return kExitNone;
    }
    if (c.as_json())
      c.out << json{{"status", unique ? "unique" : "multiple"}}.dump() << "\n";
    else
      c.out << (unique ? "unique" : "not unique") << "\n";
    return unique ? kExitFound : kExitNone;
  } catch (const SolveInterrupted&) {
    return c.unknown();
  }
}

int cmd_clique(const Ctx& c, const std::string& input, std::optional<int> k) {
  if (input.empty()) throw InputError("--input is required");
  const Graph g = parse_dimacs_graph(read_file(input));
  if (k) {
    if (*k < 1) throw InputError("--k must be at least 1");
    if (c.emit(encode_k_clique(g, *k).formula)) return 0;
    std::optional<std::vector<int>> found;
    try {
      found = find_k_clique(g, *k, c.solver());
    } catch (const SolveInterrupted&) {
      return c.unknown();
    }
    if (c.as_json()) {
      json j{{"status", found ? "found" : "none"}, {"k", *k}};
      if (found) j["vertices"] = *found;
      c.out << j.dump() << "\n";
    } else if (found) {
      c.out << "clique of size " << found->size() << ":";
      for (int v : *found) c.out << " " << v;
      c.out << "\n";
    } else {
      c.out << "no clique of size " << *k << "\n";
    }
    return found ? kExitFound : kExitNone;
  }
  if (!c.g.emit_path.empty()) throw InputError("--emit-dimacs with `clique` needs --k");
  const CliqueResult r = max_clique(g, c.solver());
  if (c.as_json()) {
    json its = json::array();
    for (const auto& it : r.iterations) its.push_back({{"k", it.k}, {"sat", it.sat}});
    c.out << json{{"status", "found"},
                  {"size", r.size()},
                  {"vertices", r.vertices},
                  {"iterations", its},
                  {"proven_optimal", r.proven_optimal}}
                 .dump()
          << "\n";
  } else {
    c.out << "maximum clique size " << r.size() << (r.proven_optimal ? "" : " (budget exhausted, not proven)")
          << "\nvertices:";
    for (int v : r.vertices) c.out << " " << v;
    c.out << "\niterations:";
    for (const auto& it : r.iterations) c.out << " k=" << it.k << ":" << (it.sat ? "sat" : "unsat");
    c.out << "\n";
  }
  return r.vertices.empty() ? kExitNone : kExitFound;
}

int cmd_latin(const Ctx& c, int n) {
  if (n < 1) throw InputError("-n must be at least 1");
  const GraecoEncoding enc = encode_graeco(n);
  if (c.emit(enc.formula)) return 0;
  const SolveResult r = solve(enc.formula, c.solver());
  if (r.is_unknown()) return c.unknown();
  if (r.is_unsat()) {
    c.out << (c.as_json() ? json{{"status", "unsat"}, {"n", n}}.dump() : std::string("UNSAT")) << "\n";
    return kExitUnsat;
  }
  const SquarePair p = decode_graeco(enc, n, r.model());
  if (!validate_graeco(p)) throw std::logic_error("invalid Graeco-Latin pair");
  if (c.as_json()) {
    json pairs = json::array();
    for (int i = 0; i < n; ++i) {
      json row = json::array();
      for (int j = 0; j < n; ++j)
        row.push_back({p.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                       p.b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]});
      pairs.push_back(row);
    }
    c.out << json{{"status", "sat"}, {"n", n}, {"a", p.a}, {"b", p.b}, {"pairs", pairs}}.dump() << "\n";
  } else {
    c.out << "SAT\n" << render_graeco(p);
  }
  return kExitSat;
}

void print_steps(std::ostream& out, const TileBoard& start, const Plan& plan) {
  out << render_board(start);
  for (std::size_t t = 1; t <= plan.length(); ++t) {
    const Plan prefix{std::vector<TilePos>(plan.moves.begin(), plan.moves.begin() + static_cast<std::ptrdiff_t>(t))};
    out << "\n" << render_board(simulate(start, prefix));
  }
}

int cmd_fifteen(const Ctx& c, const std::string& board_text, std::optional<int> horizon, int max_horizon,
                bool steps) {
  if (board_text.empty()) throw InputError("--board is required");
  TileBoard start = TileBoard::goal(4);
  try {
    start = parse_board(board_text);
  } catch (const ParseError& e) {
    throw InputError(std::string("--board: ") + e.what());
  }
  if (!c.g.emit_path.empty()) {
    if (!horizon) throw InputError("--emit-dimacs with `fifteen` needs --horizon");
    if (c.emit(encode_fifteen(start, *horizon).formula)) return 0;
  }
  if (max_horizon < 1 || max_horizon > kMaxHorizon) throw InputError("--max-horizon must be in 1..80");
  const FifteenResult r = solve_fifteen(start, c.solver(), horizon.value_or(max_horizon));
  if (c.as_json()) {
    json hs = json::array();
    for (const auto& h : r.horizons) hs.push_back({{"horizon", h.horizon}, {"sat", h.sat}});
    json j{{"status", r.plan ? "found" : "none"}, {"horizons", hs}, {"parity_solvable", parity_solvable(start)}};
    if (r.plan) {
      json mv = json::array();
      for (TilePos m : r.plan->moves) mv.push_back(cell_json(m.row, m.col));
      j["moves"] = mv;
      j["length"] = r.plan->length();
    }
    c.out << j.dump() << "\n";
  } else {
    if (!parity_solvable(start)) c.out << "board is not solvable (parity)\n";
    for (const auto& h : r.horizons) c.out << "horizon " << h.horizon << ": " << (h.sat ? "sat" : "unsat") << "\n";
    if (r.plan) {
      c.out << "plan of " << r.plan->length() << " moves:";
      for (TilePos m : r.plan->moves) c.out << " (" << m.row << "," << m.col << ")";
      c.out << "\n";
      if (steps) {
        print_steps(c.out, start, *r.plan);
      }
    } else if (parity_solvable(start)) {
      c.out << "no plan within " << max_horizon << " moves\n";
    }
  }
  return r.plan ? kExitFound : kExitNone;
}

int cmd_dimacs(const Ctx& c, const std::string& file, const std::string& expr) {
  CnfFormula f;
  std::map<std::string, VarId> inputs;
  if (!expr.empty()) {
    if (!file.empty()) throw InputError("give either a file or --expr, not both");
    TseitinOutput t = tseitin_cnf(parse_expr(expr));
    f = std::move(t.formula);
    inputs = std::move(t.input_vars);
  } else {
    if (file.empty()) throw InputError("a DIMACS file (or - for stdin) is required");
    f = parse_dimacs(read_file(file));
  }
  if (c.emit(f)) return 0;
  const SolveResult r = solve(f, c.solver());
  if (r.is_unknown()) {
    if (c.as_json()) return c.unknown();
    c.out << "s UNKNOWN\n";
    return 0;
  }
  if (r.is_unsat()) {
    c.out << (c.as_json() ? json{{"status", "unsat"}}.dump() : std::string("s UNSATISFIABLE")) << "\n";
    return kExitUnsat;
  }
  if (!eval_cnf(f, r.model())) throw std::logic_error("model does not satisfy the formula");
  if (c.as_json()) {
    json lits = json::array();
    for (std::uint32_t v = 1; v <= f.num_vars(); ++v)
      lits.push_back(r.model().value(VarId{v}) ? static_cast<long>(v) : -static_cast<long>(v));
    json j{{"status", "sat"}, {"model", lits}};
    if (!inputs.empty()) {
      json named = json::object();
      for (const auto& [name, id] : inputs) named[name] = r.model().value(id);
      j["inputs"] = named;
    }
    c.out << j.dump() << "\n";
  } else {
    c.out << "s SATISFIABLE\n";
    std::string line = "v";
    for (std::uint32_t v = 1; v <= f.num_vars(); ++v) {
      const std::string lit = (r.model().value(VarId{v}) ? "" : "-") + std::to_string(v);
      if (line.size() + lit.size() + 1 > 78) {
        c.out << line << "\n";
        line = "v";
      }
      line += " " + lit;
    }
    c.out << line << " 0\n";
    for (const auto& [name, id] : inputs) c.out << "c " << name << " = " << (r.model().value(id) ? 1 : 0) << "\n";
  }
  return kExitSat;
}

int cmd_bench(const Ctx& c, const std::string& dir) {
  if (!c.g.emit_path.empty()) throw InputError("--emit-dimacs is not supported by `bench`");
  if (dir.empty() || !fs::is_directory(dir)) throw InputError("--dir must name a directory");
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".clq") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  c.out << "name\tvertices\tedges\tclique_size\titerations\tseconds\n";
  for (const fs::path& p : files) {
    const Graph g = parse_dimacs_graph(read_file(p.string()));
    const auto t0 = std::chrono::steady_clock::now();
    const CliqueResult r = max_clique(g, c.solver());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(3);
    s << secs;
    c.out << p.stem().string() << "\t" << g.n() << "\t" << g.num_edges() << "\t"
          << (r.proven_optimal ? "" : ">=") << r.size() << "\t" << r.iterations.size() << "\t" << s.str() << "\n";
    c.out.flush();
  }
  return 0;
}

int cmd_serve(const Ctx& c, const std::string& host, int port, const std::string& static_dir) {
  ServiceOptions o;
  o.static_dir = static_dir;
  if (c.g.timeout)
    o.timeout = std::chrono::milliseconds(static_cast<std::int64_t>(std::ceil(*c.g.timeout * 1000.0)));
  SudokuServer server(o);
  const int bound = server.bind(host, port);
  if (bound < 0) throw InputError("cannot bind " + host + ":" + std::to_string(port));
  c.err << "listening on http://" << host << ":" << bound << "\n";
  c.err.flush();
  return server.listen() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"SAT toolkit: puzzle encoders, a CDCL solver and a Sudoku service", "satkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--seed", g.seed, "Seed for every randomized choice (solver and generator)");
  app.add_option("--timeout", g.timeout, "Time budget per solver call, in seconds")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"ascii", "json", "dimacs"}))
      ->capture_default_str();
  app.add_option("--emit-dimacs", g.emit_path, "Write the CNF encoding to PATH (- for stdout)");

  int queens_n = 8;
  auto* queens = app.add_subcommand("queens", "Place n non-attacking queens");
  queens->add_option("-n", queens_n, "Board size")->capture_default_str();

  std::string zebra_spec;
  auto* zebra = app.add_subcommand("zebra", "Solve a zebra puzzle (built-in Einstein riddle by default)");
  zebra->add_option("--spec", zebra_spec, "Clue file");

  std::string sudoku_action, sudoku_grid;
  bool cell_amo = false;
  auto* sudoku = app.add_subcommand("sudoku", "Solve, check or generate Sudoku puzzles");
  sudoku->add_option("action", sudoku_action, "solve | unique | generate")
      ->required()
      ->check(CLI::IsMember({"solve", "unique", "generate"}));
  sudoku->add_option("--grid", sudoku_grid, "81 characters, row-major, '.' or 0 for blanks");
  sudoku->add_flag("--cell-amo", cell_amo, "Add the optional at-most-one-digit-per-cell clauses");

  std::string clique_input;
  std::optional<int> clique_k;
  auto* clique = app.add_subcommand("clique", "Maximum clique of a DIMACS graph");
  clique->add_option("--input", clique_input, "Graph file (.clq)");
  clique->add_option("--k", clique_k, "Only decide whether a clique of size k exists");

  int latin_n = 5;
  auto* latin = app.add_subcommand("latin", "Find a Graeco-Latin square of order n");
  latin->add_option("-n", latin_n, "Order")->capture_default_str();

  std::string board_text;
  std::optional<int> horizon;
  int max_horizon = kMaxHorizon;
  bool steps = false;
  auto* fifteen = app.add_subcommand("fifteen", "Plan a sliding-tile puzzle solution (4x4 or 3x3)");
  fifteen->add_option("--board", board_text, "16 (or 9) integers row-major, 0 or 16 for the blank");
  fifteen->add_option("--horizon", horizon, "Encode or search only up to this horizon");
  fifteen->add_option("--max-horizon", max_horizon, "Last horizon of the 5, 10, ... schedule")->capture_default_str();
  fifteen->add_flag("--steps", steps, "Print the board after every move");

  std::string dimacs_file, dimacs_expr;
  auto* dimacs = app.add_subcommand("dimacs", "Solve a DIMACS CNF file or a Boolean expression");
  dimacs->add_option("file", dimacs_file, "CNF file, - for stdin");
  dimacs->add_option("--expr", dimacs_expr, "Prefix expression such as &xor(a, b), converted with Tseitin");

  std::string bench_dir;
  auto* bench = app.add_subcommand("bench", "Maximum clique of every .clq file in a directory, as TSV");
  bench->add_option("--dir", bench_dir, "Directory of .clq files")->required();

  std::string host = "127.0.0.1", static_dir;
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Run the Sudoku HTTP service");
  serve->add_option("--port", port, "TCP port (0 picks one)")->capture_default_str();
  serve->add_option("--host", host, "Bind address")->capture_default_str();
  serve->add_option("--static", static_dir, "Directory served at /");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  if (!g.timeout) {
    if (const char* env = std::getenv(kTimeoutEnv); env && *env) {
      char* end = nullptr;
      const double t = std::strtod(env, &end);
      if (end == env || *end != '\0' || !(t > 0)) {
        err << "error: " << kTimeoutEnv << " must be a positive number of seconds\n";
        return kExitUsage;
      }
      g.timeout = t;
    }
  }
  if (g.format == "dimacs" && g.emit_path.empty()) {
    err << "error: --format dimacs requires --emit-dimacs PATH\n";
    return kExitUsage;
  }

  const Ctx c{g, out, err};
  try {
    if (*queens) return cmd_queens(c, queens_n);
    if (*zebra) return cmd_zebra(c, zebra_spec);
    if (*sudoku) return cmd_sudoku(c, sudoku_action, sudoku_grid, cell_amo);
    if (*clique) return cmd_clique(c, clique_input, clique_k);
    if (*latin) return cmd_latin(c, latin_n);
    if (*fifteen) return cmd_fifteen(c, board_text, horizon, max_horizon, steps);
    if (*dimacs) return cmd_dimacs(c, dimacs_file, dimacs_expr);
    if (*bench) return cmd_bench(c, bench_dir);
    if (*serve) return cmd_serve(c, host, port, static_dir);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SolveInterrupted&) {
    return c.unknown();
  }
  return kExitUsage;
}

}  // namespace satkit
