#include "satkit/boolexpr.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "satkit/error.hpp"

namespace satkit {

std::string_view op_name(Op op) {
  switch (op) {
    case Op::var: return "var";
    case Op::not_: return "&not";
    case Op::and_: return "&and";
    case Op::or_: return "&or";
    case Op::implies: return "&implies";
    case Op::iff: return "&iff";
    case Op::xor_: return "&xor";
    case Op::nand: return "&nand";
    case Op::nor: return "&nor";
  }
  return "?";
}

BoolExpr var(std::string name) {
  if (name.empty()) throw std::invalid_argument("variable name must be non-empty");
  return BoolExpr(std::make_shared<const BoolExpr::Node>(BoolExpr::Node{Op::var, std::move(name), {}}));
}

BoolExpr make_expr(Op op, std::vector<BoolExpr> children) {
  switch (op) {
    case Op::var:
      throw std::invalid_argument("use var() to build variables");
    case Op::not_:
      if (children.size() != 1) throw std::invalid_argument("&not takes exactly one operand");
      break;
    case Op::implies:
    case Op::iff:
      if (children.size() != 2) throw std::invalid_argument(std::string(op_name(op)) + " takes exactly two operands");
      break;
    default:
      if (children.empty()) throw std::invalid_argument(std::string(op_name(op)) + " needs at least one operand");
  }
  return BoolExpr(std::make_shared<const BoolExpr::Node>(BoolExpr::Node{op, {}, std::move(children)}));
}

std::size_t BoolExpr::node_count() const {
  std::size_t n = 1;
  for (const BoolExpr& c : children()) n += c.node_count();
  return n;
}

bool eval(const BoolExpr& e, const Assignment& a) {
  const auto kids = e.children();
  auto count_true = [&] {
    std::size_t n = 0;
    for (const BoolExpr& c : kids) n += eval(c, a) ? 1 : 0;
    return n;
  };
  switch (e.op()) {
    case Op::var: {
      auto it = a.find(e.name());
      if (it == a.end()) throw UnboundVariable(e.name());
      return it->second;
    }
    case Op::not_: return !eval(kids[0], a);
    case Op::and_: return count_true() == kids.size();
    case Op::or_: return count_true() > 0;
    case Op::implies: return !eval(kids[0], a) || eval(kids[1], a);
    case Op::iff: return eval(kids[0], a) == eval(kids[1], a);
    case Op::xor_: return count_true() % 2 == 1;
    case Op::nand: return count_true() < kids.size();
    case Op::nor: return count_true() == 0;
  }
  return false;
}

std::vector<std::string> variables_of(const BoolExpr& e) {
  std::vector<std::string> out;
  std::set<std::string, std::less<>> seen;
  std::unordered_set<const void*> visited;
  auto walk = [&](auto&& self, const BoolExpr& x) -> void {
    if (x.is_var()) {
      if (seen.insert(x.name()).second) out.push_back(x.name());
      return;
    }
    if (!visited.insert(x.id()).second) return;
    for (const BoolExpr& c : x.children()) self(self, c);
  };
  walk(walk, e);
  return out;
}

// ---------------------------------------------------------------------------
// normalize_cnf

namespace {

using LitCode = int;  // 2 * name index + negated
using ClauseCodes = std::vector<LitCode>;
using ClauseSet = std::vector<ClauseCodes>;

class Normalizer {
 public:
  ClauseSet cnf(const BoolExpr& e, bool positive) {
    const auto kids = e.children();
    switch (e.op()) {
      case Op::var: return {{2 * index_of(e.name()) + (positive ? 0 : 1)}};
      case Op::not_: return cnf(kids[0], !positive);
      case Op::and_: return positive ? all(kids, true) : any(kids, false);
      case Op::nand: return positive ? any(kids, false) : all(kids, true);
      case Op::or_: return positive ? any(kids, true) : all(kids, false);
      case Op::nor: return positive ? all(kids, false) : any(kids, true);
      case Op::implies:
        return positive ? product(cnf(kids[0], false), cnf(kids[1], true))
                        : concat(cnf(kids[0], true), cnf(kids[1], false));
      case Op::iff: {
        ClauseSet ap = cnf(kids[0], true), an = cnf(kids[0], false);
        ClauseSet bp = cnf(kids[1], true), bn = cnf(kids[1], false);
        return positive ? concat(product(an, bp), product(ap, bn)) : concat(product(ap, bp), product(an, bn));
      }
      case Op::xor_: {
        auto [p, n] = xor_both(kids);
        return positive ? std::move(p) : std::move(n);
      }
    }
    return {};
  }

  const std::vector<std::string>& names() const { return names_; }

 private:
  int index_of(const std::string& name) {
    auto [it, inserted] = index_.emplace(name, static_cast<int>(names_.size()));
    if (inserted) names_.push_back(name);
    return it->second;
  }

  // Conjunction of the children (each with the given polarity).
  ClauseSet all(std::span<const BoolExpr> kids, bool polarity) {
    ClauseSet out;
    for (const BoolExpr& k : kids) {
      ClauseSet part = cnf(k, polarity);
      out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    return out;
  }

  // Disjunction of the children: distribute Or over And.
  ClauseSet any(std::span<const BoolExpr> kids, bool polarity) {
    ClauseSet out = cnf(kids[0], polarity);
    for (std::size_t i = 1; i < kids.size(); ++i) out = product(out, cnf(kids[i], polarity));
    return out;
  }

  // Returns (CNF of xor, CNF of its negation) for the left-to-right fold.
  std::pair<ClauseSet, ClauseSet> xor_both(std::span<const BoolExpr> kids) {
    if (kids.size() == 1) return {cnf(kids[0], true), cnf(kids[0], false)};
    auto [p, n] = xor_both(kids.first(kids.size() - 1));
    ClauseSet cp = cnf(kids.back(), true);
    ClauseSet cn = cnf(kids.back(), false);
    ClauseSet pos = concat(product(p, cp), product(n, cn));
    ClauseSet neg = concat(product(n, cp), product(p, cn));
    return {std::move(pos), std::move(neg)};
  }

  static ClauseSet concat(ClauseSet a, ClauseSet b) {
    a.insert(a.end(), std::make_move_iterator(b.begin()), std::make_move_iterator(b.end()));
    return a;
  }

  static ClauseSet product(const ClauseSet& a, const ClauseSet& b) {
    ClauseSet out;
    out.reserve(a.size() * b.size());
    for (const ClauseCodes& ca : a) {
      for (const ClauseCodes& cb : b) {
        ClauseCodes merged = ca;
        for (LitCode l : cb)
          if (std::find(merged.begin(), merged.end(), l) == merged.end()) merged.push_back(l);
        out.push_back(std::move(merged));
      }
    }
    return out;
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace

BoolExpr normalize_cnf(const BoolExpr& e) {
  Normalizer norm;
  const ClauseSet clauses = norm.cnf(e, true);

  std::vector<BoolExpr> vars;
  vars.reserve(norm.names().size());
  for (const std::string& n : norm.names()) vars.push_back(var(n));
  auto literal = [&](LitCode code) {
    const BoolExpr& v = vars[static_cast<std::size_t>(code / 2)];
    return (code % 2 == 1) ? not_of(v) : v;
  };

  std::vector<BoolExpr> conjuncts;
  conjuncts.reserve(clauses.size());
  for (const ClauseCodes& c : clauses) {
    if (c.size() == 1) {
      conjuncts.push_back(literal(c[0]));
      continue;
    }
    std::vector<BoolExpr> lits;
    lits.reserve(c.size());
    for (LitCode l : c) lits.push_back(literal(l));
    conjuncts.push_back(or_of(std::move(lits)));
  }
  if (conjuncts.size() == 1) return conjuncts.front();
  return and_of(std::move(conjuncts));
}

std::size_t cnf_clause_count(const BoolExpr& cnf) { return cnf.op() == Op::and_ ? cnf.children().size() : 1; }

// ---------------------------------------------------------------------------
// Tseitin

Literal TseitinEncoder::input(const BoolExpr& v) {
  auto id = alloc_.find(v.name());
  if (!id) throw std::invalid_argument("variable `" + v.name() + "` has no reserved id");
  inputs_.emplace(v.name(), *id);
  return pos(*id);
}

Literal TseitinEncoder::encode(const BoolExpr& e) {
  if (e.is_var()) return input(e);
  if (e.op() == Op::not_) return ~encode(e.children()[0]);
  if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;

  const auto kids = e.children();
  Literal result;
  if (e.op() == Op::xor_) {
    result = encode(kids[0]);
    for (std::size_t i = 1; i < kids.size(); ++i) {
      const Literal next = encode(kids[i]);
      const BoolExpr prefix =
          (i + 1 == kids.size()) ? e : xor_of(std::vector<BoolExpr>(kids.begin(), kids.begin() + i + 1));
      result = define_xor2(prefix, result, next);
    }
  } else {
    std::vector<Literal> lits;
    lits.reserve(kids.size());
    for (const BoolExpr& k : kids) lits.push_back(encode(k));
    result = define(e, std::move(lits));
  }
  memo_.emplace(e.id(), result);
  return result;
}

Literal TseitinEncoder::assert_true(const BoolExpr& e) {
  const Literal root = encode(e);
  out_.add(Clause{root});
  return root;
}

Literal TseitinEncoder::define_xor2(const BoolExpr& whole, Literal a, Literal b) {
  const VarId tv = alloc_.fresh();
  const Literal t = pos(tv);
  definitions_.emplace(tv, whole);
  out_.reserve_vars(tv.index);
  out_.add_if_nontrivial({~a, b, t});
  out_.add_if_nontrivial({a, ~b, t});
  out_.add_if_nontrivial({a, b, ~t});
  out_.add_if_nontrivial({~a, ~b, ~t});
  return t;
}

Literal TseitinEncoder::define(const BoolExpr& e, std::vector<Literal> kids) {
  const VarId tv = alloc_.fresh();
  const Literal t = pos(tv);
  definitions_.emplace(tv, e);
  out_.reserve_vars(tv.index);

  // t <-> And(ls), with every literal of ls and t flipped as requested.
  auto conj = [&](Literal out, bool flip_inputs) {
    std::vector<Literal> big{out};
    for (const Literal& k : kids) {
      const Literal in = flip_inputs ? ~k : k;
      out_.add_if_nontrivial({~out, in});
      big.push_back(~in);
    }
    out_.add_if_nontrivial(std::move(big));
  };

  switch (e.op()) {
    case Op::and_: conj(t, false); break;
    case Op::nand: conj(~t, false); break;
    case Op::or_: conj(~t, true); break;  // ~t <-> And(~k)
    case Op::nor: conj(t, true); break;
    case Op::implies: {
      const Literal a = kids[0], b = kids[1];
      out_.add_if_nontrivial({~t, ~a, b});
      out_.add_if_nontrivial({t, a});
      out_.add_if_nontrivial({t, ~b});
      break;
    }
    case Op::iff: {
      const Literal a = kids[0], b = kids[1];
      out_.add_if_nontrivial({~t, ~a, b});
      out_.add_if_nontrivial({~t, a, ~b});
      out_.add_if_nontrivial({t, a, b});
      out_.add_if_nontrivial({t, ~a, ~b});
      break;
    }
    default:
      throw std::logic_error("TseitinEncoder::define: unexpected operator");
  }
  return t;
}

TseitinOutput tseitin_cnf(const BoolExpr& e, VarAllocator& alloc) {
  for (const std::string& name : variables_of(e))
    if (!alloc.find(name)) throw std::invalid_argument("variable `" + name + "` has no reserved id");
  TseitinOutput out;
  out.formula.reserve_vars(alloc.count());
  TseitinEncoder enc(alloc, out.formula);
  out.root_literal = enc.assert_true(e);
  out.formula.reserve_vars(alloc.count());
  out.definitions = enc.definitions();
  out.input_vars = enc.input_vars();
  return out;
}

TseitinOutput tseitin_cnf(const BoolExpr& e) {
  VarAllocator alloc;
  for (const std::string& name : variables_of(e)) alloc.reserve(name);
  return tseitin_cnf(e, alloc);
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  BoolExpr parse() {
    BoolExpr e = expr();
    skip_blank();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(line, "column " + std::to_string(col) + ": " + msg);
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '[' || c == ']';
  }

  void expect(char c) {
    skip_blank();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected `") + c + "`");
    ++pos_;
  }

  BoolExpr expr() {
    skip_blank();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '&') {
      const std::size_t start = pos_++;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      static const std::pair<std::string_view, Op> ops[] = {
          {"&not", Op::not_}, {"&and", Op::and_}, {"&or", Op::or_},   {"&implies", Op::implies},
          {"&iff", Op::iff},  {"&xor", Op::xor_}, {"&nand", Op::nand}, {"&nor", Op::nor}};
      const auto it = std::find_if(std::begin(ops), std::end(ops), [&](const auto& p) { return p.first == word; });
      if (it == std::end(ops)) {
        pos_ = start;
        fail("unknown operator `" + std::string(word) + "`");
      }
      expect('(');
      std::vector<BoolExpr> args{expr()};
      skip_blank();
      while (pos_ < text_.size() && text_[pos_] == ',') {
        ++pos_;
        args.push_back(expr());
        skip_blank();
      }
      expect(')');
      try {
        return make_expr(it->second, std::move(args));
      } catch (const std::invalid_argument& err) {
        pos_ = start;
        fail(err.what());
      }
    }
    if (ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      return var(std::string(text_.substr(start, pos_ - start)));
    }
    fail(std::string("unexpected character `") + c + "`");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BoolExpr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string to_string(const BoolExpr& e) {
  if (e.is_var()) return e.name();
  std::string out(op_name(e.op()));
  out += '(';
  bool first = true;
  for (const BoolExpr& c : e.children()) {
    if (!first) out += ", ";
    first = false;
    out += to_string(c);
  }
  out += ')';
  return out;
}

}  // namespace satkit
