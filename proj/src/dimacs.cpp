#include "satkit/dimacs.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <ostream>
#include <sstream>

#include "satkit/error.hpp"

namespace satkit {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v'; }

std::string_view trim_left(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  return s;
}

// Splits a line into whitespace-separated tokens.
template <class Fn>
void for_each_token(std::string_view line, Fn&& fn) {
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    if (j > i) fn(line.substr(i, j - i));
    i = j;
  }
}

bool parse_long(std::string_view tok, long& out) {
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace

CnfFormula parse_dimacs(std::string_view text) {
  bool have_header = false;
  long declared_vars = 0;
  long declared_clauses = 0;
  CnfFormula formula;
  std::vector<Literal> pending;
  std::size_t pending_line = 0;
  std::size_t line_no = 0;

  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_no;

    const std::string_view body = trim_left(line);
    if (body.empty() || body.front() == 'c') continue;
    if (body.front() == '%') break;

    if (body.front() == 'p') {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      std::vector<std::string_view> toks;
      for_each_token(body, [&](std::string_view t) { toks.push_back(t); });
      if (toks.size() != 4 || toks[0] != "p" || toks[1] != "cnf" ||
          !parse_long(toks[2], declared_vars) || !parse_long(toks[3], declared_clauses) ||
          declared_vars < 0 || declared_clauses < 0 || declared_vars > INT32_MAX)
        throw ParseError(line_no, "malformed problem line, expected `p cnf <vars> <clauses>`");
      have_header = true;
      formula.reserve_vars(static_cast<std::uint32_t>(declared_vars));
      continue;
    }

    if (!have_header) throw ParseError(line_no, "clause data before `p cnf` header");

    for_each_token(body, [&](std::string_view tok) {
      long v = 0;
      if (!parse_long(tok, v)) throw ParseError(line_no, "invalid literal `" + std::string(tok) + "`");
      if (v == 0) {
        if (static_cast<long>(formula.num_clauses()) >= declared_clauses)
          throw ParseError(line_no, "more clauses than declared in header");
        auto clause = Clause::make(std::move(pending));
        if (!clause) throw ParseError(line_no, "tautological clause");
        formula.add(std::move(*clause));
        pending.clear();
        return;
      }
      if (v > declared_vars || -v > declared_vars)
        throw ParseError(line_no, "literal " + std::to_string(v) + " exceeds declared variable count " +
                                      std::to_string(declared_vars));
      if (pending.empty()) pending_line = line_no;
      pending.push_back(Literal::from_dimacs(v));
    });
  }

  if (!have_header) throw ParseError(0, "missing `p cnf` header");
  if (!pending.empty()) throw ParseError(pending_line, "clause missing terminating 0");
  if (static_cast<long>(formula.num_clauses()) != declared_clauses)
    throw ParseError(line_no, "header declares " + std::to_string(declared_clauses) + " clauses, found " +
                                  std::to_string(formula.num_clauses()));
  return formula;
}

CnfFormula parse_dimacs(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_dimacs(std::string_view(text));
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
  out << "p cnf " << f.num_vars() << ' ' << f.num_clauses() << '\n';
  for (const Clause& c : f.clauses()) {
    for (const Literal& l : c) out << l.to_dimacs() << ' ';
    out << "0\n";
  }
}

std::string write_dimacs(const CnfFormula& f) {
  std::ostringstream out;
  write_dimacs(out, f);
  return out.str();
}

}  // namespace satkit
