#include "satkit/service.hpp"

#include <httplib.h>

#include <json.hpp>
#include <set>

#include "satkit/error.hpp"
#include "satkit/sudoku.hpp"

namespace satkit {
namespace {

using nlohmann::json;

struct BadRequest : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

HttpReply reply(int status, const json& j) { return {status, j.dump()}; }
HttpReply error_reply(int status, const std::string& msg) { return reply(status, json{{"error", msg}}); }

json parse_body(std::string_view body, std::initializer_list<const char*> allowed) {
  json j;
  try {
    j = body.empty() ? json::object() : json::parse(body);
  } catch (const json::parse_error& e) {
    throw BadRequest(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw BadRequest("request body must be a JSON object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, _] : j.items())
    if (!ok.contains(key)) throw BadRequest("unknown field `" + key + "`");
  return j;
}

std::string string_field(const json& j, const char* key) {
  if (!j.contains(key)) throw BadRequest(std::string("missing field `") + key + "`");
  if (!j[key].is_string()) throw BadRequest(std::string("field `") + key + "` must be a string");
  return j[key].get<std::string>();
}

Cells cells_field(const json& j, const char* key) {
  try {
    return parse_cells(string_field(j, key));
  } catch (const ParseError& e) {
    throw BadRequest(std::string(key) + ": " + e.what());
  }
}

Grid grid_field(const json& j, const char* key) {
  const Cells c = cells_field(j, key);
  try {
    return Grid(c);
  } catch (const std::invalid_argument& e) {
    throw BadRequest(std::string(key) + ": " + e.what());
  }
}

json cell_json(Cell c) { return {{"row", c.row}, {"col", c.col}}; }

SolverOptions solver_options(const ServiceOptions& o) {
  SolverOptions s;
  s.time_budget = o.timeout;
  return s;
}

template <class F>
HttpReply guarded(F&& f) {
  try {
    return f();
  } catch (const BadRequest& e) {
    return error_reply(400, e.what());
  } catch (const SolveInterrupted&) {
    return error_reply(503, "solver time budget exhausted");
  } catch (const std::exception& e) {
    return error_reply(500, e.what());
  }
}

}  // namespace

HttpReply api_new(std::string_view body, const ServiceOptions& opts) {
  return guarded([&] {
    const json j = parse_body(body, {"seed"});
    std::uint64_t seed;
    if (j.contains("seed")) {
      if (!j["seed"].is_number_unsigned()) throw BadRequest("field `seed` must be a non-negative integer");
      seed = j["seed"].get<std::uint64_t>();
    } else if (opts.clock_seed) {
      seed = opts.clock_seed();
    } else {
      seed = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                            std::chrono::system_clock::now().time_since_epoch())
                                            .count());
    }
    const GenerationResult r = generate(seed, solver_options(opts));
    return reply(200, json{{"puzzle", r.puzzle.to_string()},
                           {"solution", r.solution.to_string()},
                           {"seed", seed},
                           {"bounds", {r.estimated_min_clues.first, r.estimated_min_clues.second}}});
  });
}

HttpReply api_check(std::string_view body, const ServiceOptions&) {
  return guarded([&] {
    const json j = parse_body(body, {"puzzle", "progress"});
    const Grid puzzle = grid_field(j, "puzzle");
    const Cells progress = cells_field(j, "progress");
    ProgressCheck c;
    try {
      c = check_progress(puzzle, progress);
    } catch (const std::invalid_argument& e) {
      throw BadRequest(e.what());
    }
    json conflicts = json::array();
    for (Cell cell : c.conflicts) conflicts.push_back(cell_json(cell));
    return reply(200, json{{"status", status_name(c.status)}, {"conflicts", conflicts}});
  });
}

HttpReply api_hint(std::string_view body, const ServiceOptions& opts) {
  return guarded([&] {
    const json j = parse_body(body, {"puzzle", "progress"});
    const Grid puzzle = grid_field(j, "puzzle");
    const Cells progress = cells_field(j, "progress");
    std::optional<Hint> h;
    try {
      h = hint(puzzle, progress, solver_options(opts));
    } catch (const NotUnique& e) {
      return error_reply(409, e.what());
    } catch (const UnsatisfiableGrid& e) {
      return error_reply(409, e.what());
    } catch (const std::invalid_argument& e) {
      throw BadRequest(e.what());
    }
    if (!h) return HttpReply{204, ""};
    return reply(200, json{{"cell", cell_json(h->cell)}, {"digit", h->digit}, {"correction", h->correction}});
  });
}

HttpReply api_solve(std::string_view body, const ServiceOptions& opts) {
  return guarded([&] {
    const json j = parse_body(body, {"puzzle"});
    const Grid puzzle = grid_field(j, "puzzle");
    const auto sol = solve_sudoku(puzzle, solver_options(opts));
    if (!sol) return error_reply(422, "puzzle has no solution");
    return reply(200, json{{"solution", sol->to_string()}});
  });
}

struct SudokuServer::Impl {
  ServiceOptions opts;
  httplib::Server server;
};

SudokuServer::SudokuServer(ServiceOptions opts) : impl_(std::make_unique<Impl>()) {
  impl_->opts = std::move(opts);
  auto& svr = impl_->server;
  const ServiceOptions* o = &impl_->opts;
  auto route = [o](HttpReply (*handler)(std::string_view, const ServiceOptions&)) {
    return [o, handler](const httplib::Request& req, httplib::Response& res) {
      const HttpReply r = handler(req.body, *o);
      res.status = r.status;
      if (r.status != 204) res.set_content(r.body, "application/json");
    };
  };
  svr.Post("/api/sudoku/new", route(&api_new));
  svr.Post("/api/sudoku/check", route(&api_check));
  svr.Post("/api/sudoku/hint", route(&api_hint));
  svr.Post("/api/sudoku/solve", route(&api_solve));
  svr.Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content(R"({"status":"ok"})", "application/json");
  });
  if (!impl_->opts.static_dir.empty() && !svr.set_mount_point("/", impl_->opts.static_dir))
    throw std::invalid_argument("static directory `" + impl_->opts.static_dir + "` does not exist");
}

SudokuServer::~SudokuServer() = default;

int SudokuServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool SudokuServer::listen() { return impl_->server.listen_after_bind(); }

void SudokuServer::stop() { impl_->server.stop(); }

}  // namespace satkit
