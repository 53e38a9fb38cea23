#include "satkit/solver.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "satkit/error.hpp"
#include "satkit/rng.hpp"

namespace satkit {

void SolverOptions::validate() const {
  if (conflict_budget && *conflict_budget == 0)
    throw std::invalid_argument("conflict budget must be positive");
  if (time_budget && time_budget->count() <= 0)
    throw std::invalid_argument("time budget must be positive");
}

namespace {

// Internal literal: 2 * var + sign, var 0-based, sign 1 = negated.
using Lit = std::uint32_t;
using CRef = std::uint32_t;

constexpr Lit kLitUndef = UINT32_MAX;
constexpr CRef kCRefUndef = UINT32_MAX;

constexpr std::uint32_t var_of(Lit l) { return l >> 1; }
constexpr bool sign_of(Lit l) { return (l & 1U) != 0; }
constexpr Lit make_lit(std::uint32_t v, bool negated) { return (v << 1) | (negated ? 1U : 0U); }
constexpr Lit negate(Lit l) { return l ^ 1U; }

// Truth values: 0 = true, 1 = false, 2 = undefined. XOR with a literal's sign
// gives the literal's value (2 ^ 1 = 3 is still "undefined").
using LBool = std::uint8_t;
constexpr LBool kTrue = 0;
constexpr LBool kFalse = 1;
constexpr LBool kUndef = 2;

Lit to_internal(const Literal& l) { return make_lit(l.var().index - 1, l.negated()); }

// Clause storage in one flat vector. Layout per clause:
//   [size | learnt << 31 | deleted << 30] [lbd] [activity as float bits] lits...
class ClauseArena {
 public:
  static constexpr std::uint32_t kHeader = 3;

  CRef alloc(std::span<const Lit> lits, bool learnt) {
    const auto ref = static_cast<CRef>(mem_.size());
    mem_.push_back(static_cast<std::uint32_t>(lits.size()) | (learnt ? kLearntBit : 0U));
    mem_.push_back(0);
    mem_.push_back(std::bit_cast<std::uint32_t>(0.0F));
    mem_.insert(mem_.end(), lits.begin(), lits.end());
    return ref;
  }

  std::uint32_t size(CRef r) const { return mem_[r] & kSizeMask; }
  bool learnt(CRef r) const { return (mem_[r] & kLearntBit) != 0; }
  bool deleted(CRef r) const { return (mem_[r] & kDeletedBit) != 0; }
  void mark_deleted(CRef r) {
    mem_[r] |= kDeletedBit;
    wasted_ += kHeader + size(r);
  }
  std::uint32_t lbd(CRef r) const { return mem_[r + 1]; }
  void set_lbd(CRef r, std::uint32_t v) { mem_[r + 1] = v; }
  float activity(CRef r) const { return std::bit_cast<float>(mem_[r + 2]); }
  void set_activity(CRef r, float a) { mem_[r + 2] = std::bit_cast<std::uint32_t>(a); }
  Lit* lits(CRef r) { return &mem_[r + kHeader]; }
  const Lit* lits(CRef r) const { return &mem_[r + kHeader]; }

  std::size_t words() const { return mem_.size(); }
  std::size_t wasted() const { return wasted_; }

  // Copies live clause `r` into `to`, returning its new reference.
  CRef move_to(CRef r, ClauseArena& to) const {
    const auto ref = static_cast<CRef>(to.mem_.size());
    to.mem_.insert(to.mem_.end(), mem_.begin() + r, mem_.begin() + r + kHeader + size(r));
    return ref;
  }

  void swap(ClauseArena& other) noexcept {
    mem_.swap(other.mem_);
    std::swap(wasted_, other.wasted_);
  }

 private:
  static constexpr std::uint32_t kLearntBit = 1U << 31;
  static constexpr std::uint32_t kDeletedBit = 1U << 30;
  static constexpr std::uint32_t kSizeMask = (1U << 30) - 1;

  std::vector<std::uint32_t> mem_;
  std::size_t wasted_ = 0;
};

struct Watcher {
  CRef cref;
  Lit blocker;
};

// Binary max-heap of variables keyed by activity; ties broken by lower index
// so the branching order is fully determined by the activities.
class VarHeap {
 public:
  explicit VarHeap(const std::vector<double>& activity) : activity_(&activity) {}

  void grow(std::uint32_t n) { index_.resize(n, -1); }
  bool empty() const { return heap_.empty(); }
  bool contains(std::uint32_t v) const { return index_[v] >= 0; }

  void insert(std::uint32_t v) {
    if (contains(v)) return;
    index_[v] = static_cast<int>(heap_.size());
    heap_.push_back(v);
    sift_up(index_[v]);
  }

  void increased(std::uint32_t v) {
    if (contains(v)) sift_up(index_[v]);
  }

  std::uint32_t pop() {
    const std::uint32_t top = heap_.front();
    heap_.front() = heap_.back();
    index_[heap_.front()] = 0;
    index_[top] = -1;
    heap_.pop_back();
    if (heap_.size() > 1) sift_down(0);
    return top;
  }

  void rebuild(const std::vector<std::uint32_t>& vars) {
    for (std::uint32_t v : heap_) index_[v] = -1;
    heap_.clear();
    for (std::uint32_t v : vars) insert(v);
  }

 private:
  bool before(std::uint32_t a, std::uint32_t b) const {
    const double aa = (*activity_)[a];
    const double ab = (*activity_)[b];
    return aa > ab || (aa == ab && a < b);
  }

  void sift_up(int i) {
    const std::uint32_t v = heap_[i];
    while (i > 0) {
      const int parent = (i - 1) >> 1;
      if (!before(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      index_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    index_[v] = i;
  }

  void sift_down(int i) {
    const std::uint32_t v = heap_[i];
    const int n = static_cast<int>(heap_.size());
    while (2 * i + 1 < n) {
      int child = 2 * i + 1;
      if (child + 1 < n && before(heap_[child + 1], heap_[child])) ++child;
      if (!before(heap_[child], v)) break;
      heap_[i] = heap_[child];
      index_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    index_[v] = i;
  }

  const std::vector<double>* activity_;
  std::vector<std::uint32_t> heap_;
  std::vector<int> index_;
};

// Luby sequence scaled by powers of y (MiniSat formulation).
double luby(double y, std::uint64_t x) {
  std::uint64_t size = 1;
  int seq = 0;
  while (size < x + 1) {
    ++seq;
    size = 2 * size + 1;
  }
  while (size - 1 != x) {
    size = (size - 1) >> 1;
    --seq;
    x = x % size;
  }
  return std::pow(y, seq);
}

constexpr double kVarDecay = 0.95;
constexpr double kClauseDecay = 0.999;
constexpr std::uint64_t kRestartUnit = 100;
constexpr std::uint64_t kFirstReduce = 2000;
constexpr std::uint64_t kReduceIncrement = 300;
constexpr std::uint32_t kKeepLbd = 2;

}  // namespace

class Solver::Impl {
 public:
  explicit Impl(const SolverOptions& opts) : opts_(opts), rng_(opts.random_seed), order_(activity_) {
    opts_.validate();
  }

  void reserve_vars(std::uint32_t count) {
    const auto old = num_vars();
    if (count <= old) return;
    assigns_.resize(count, kUndef);
    level_.resize(count, 0);
    reason_.resize(count, kCRefUndef);
    activity_.resize(count, 0.0);
    polarity_.resize(count, 1);
    seen_.resize(count, 0);
    watches_.resize(2 * static_cast<std::size_t>(count));
    order_.grow(count);
    for (std::uint32_t v = old; v < count; ++v) {
      if (opts_.rnd_init_act) {
        activity_[v] = rng_.unit() * 0.00001;
        polarity_[v] = static_cast<std::uint8_t>(rng_.next() & 1U);
      }
      order_.insert(v);
    }
  }

  std::uint32_t num_vars() const { return static_cast<std::uint32_t>(assigns_.size()); }

  bool add_clause(std::span<const Literal> input) {
    if (!ok_) return false;
    cancel_until(0);
    std::uint32_t max_var = 0;
    for (const Literal& l : input) {
      if (l.var().index == 0) throw std::invalid_argument("variable index 0");
      max_var = std::max(max_var, l.var().index);
    }
    reserve_vars(max_var);

    tmp_.clear();
    for (const Literal& l : input) tmp_.push_back(to_internal(l));
    std::sort(tmp_.begin(), tmp_.end());
    std::size_t j = 0;
    Lit prev = kLitUndef;
    for (Lit l : tmp_) {
      if (value(l) == kTrue || (prev != kLitUndef && l == negate(prev))) return true;
      if (l != prev && value(l) != kFalse) tmp_[j++] = l;
      prev = l;
    }
    tmp_.resize(j);

    if (tmp_.empty()) return ok_ = false;
    if (tmp_.size() == 1) {
      enqueue(tmp_[0], kCRefUndef);
      return ok_ = (propagate() == kCRefUndef);
    }
    const CRef cr = arena_.alloc(tmp_, false);
    clauses_.push_back(cr);
    attach(cr);
    return true;
  }

  SolveResult solve(std::span<const Literal> assumptions) {
    assumptions_.clear();
    for (const Literal& l : assumptions) {
      if (l.var().index == 0 || l.var().index > num_vars())
        throw std::invalid_argument("assumption references an unknown variable");
      assumptions_.push_back(to_internal(l));
    }
    if (!ok_) return SolveResult::unsatisfiable();

    start_time_ = std::chrono::steady_clock::now();
    start_conflicts_ = stats_.conflicts;

    LBool status = kUndef;
    std::uint64_t restarts = 0;
    while (status == kUndef) {
      const auto limit = static_cast<std::uint64_t>(luby(2.0, restarts) * kRestartUnit);
      status = search(limit);
      if (status == kUndef && budget_exhausted()) break;
      ++restarts;
      ++stats_.restarts;
    }

    SolveResult result = SolveResult::unknown("budget-exhausted");
    if (status == kTrue) {
      std::vector<bool> values(num_vars());
      for (std::uint32_t v = 0; v < num_vars(); ++v) values[v] = assigns_[v] == kTrue;
      result = SolveResult::satisfiable(Model(std::move(values)));
    } else if (status == kFalse) {
      result = SolveResult::unsatisfiable();
    }
    cancel_until(0);
    return result;
  }

  const SolverStats& stats() const { return stats_; }

 private:
  LBool value(Lit l) const { return static_cast<LBool>(assigns_[var_of(l)] ^ (l & 1U)); }
  std::uint32_t decision_level() const { return static_cast<std::uint32_t>(trail_lim_.size()); }

  bool locked(CRef cr) const {
    const Lit first = arena_.lits(cr)[0];
    return reason_[var_of(first)] == cr && value(first) == kTrue;
  }

  void attach(CRef cr) {
    const Lit* c = arena_.lits(cr);
    watches_[c[0]].push_back({cr, c[1]});
    watches_[c[1]].push_back({cr, c[0]});
  }

  void enqueue(Lit p, CRef from) {
    const std::uint32_t v = var_of(p);
    assigns_[v] = sign_of(p) ? kFalse : kTrue;
    level_[v] = decision_level();
    reason_[v] = from;
    trail_.push_back(p);
  }

  void cancel_until(std::uint32_t lvl) {
    if (decision_level() <= lvl) return;
    for (std::size_t c = trail_.size(); c-- > trail_lim_[lvl];) {
      const std::uint32_t v = var_of(trail_[c]);
      assigns_[v] = kUndef;
      polarity_[v] = sign_of(trail_[c]) ? 1 : 0;
      order_.insert(v);
    }
    qhead_ = trail_lim_[lvl];
    trail_.resize(trail_lim_[lvl]);
    trail_lim_.resize(lvl);
  }

  CRef propagate() {
    CRef conflict = kCRefUndef;
    while (qhead_ < trail_.size()) {
      const Lit p = trail_[qhead_++];
      const Lit false_lit = negate(p);
      std::vector<Watcher>& ws = watches_[false_lit];
      ++stats_.propagations;

      std::size_t i = 0;
      std::size_t j = 0;
      const std::size_t n = ws.size();
      while (i < n) {
        const Watcher w = ws[i++];
        if (value(w.blocker) == kTrue) {
          ws[j++] = w;
          continue;
        }
        Lit* c = arena_.lits(w.cref);
        if (c[0] == false_lit) std::swap(c[0], c[1]);
        const Lit first = c[0];
        const Watcher updated{w.cref, first};
        if (first != w.blocker && value(first) == kTrue) {
          ws[j++] = updated;
          continue;
        }

        const std::uint32_t size = arena_.size(w.cref);
        bool moved = false;
        for (std::uint32_t k = 2; k < size; ++k) {
          if (value(c[k]) != kFalse) {
            c[1] = c[k];
            c[k] = false_lit;
            watches_[c[1]].push_back(updated);
            moved = true;
            break;
          }
        }
        if (moved) continue;

        ws[j++] = updated;
        if (value(first) == kFalse) {
          conflict = w.cref;
          qhead_ = trail_.size();
          while (i < n) ws[j++] = ws[i++];
        } else {
          enqueue(first, w.cref);
        }
      }
      ws.resize(j);
      if (conflict != kCRefUndef) break;
    }
    return conflict;
  }

  void bump_var(std::uint32_t v) {
    if ((activity_[v] += var_inc_) > 1e100) {
      for (double& a : activity_) a *= 1e-100;
      var_inc_ *= 1e-100;
    }
    order_.increased(v);
  }

  void bump_clause(CRef cr) {
    const float a = arena_.activity(cr) + static_cast<float>(clause_inc_);
    arena_.set_activity(cr, a);
    if (a > 1e20F) {
      for (CRef l : learnts_) arena_.set_activity(l, arena_.activity(l) * 1e-20F);
      clause_inc_ *= 1e-20;
    }
  }

  std::uint32_t abstract_level(std::uint32_t v) const { return 1U << (level_[v] & 31U); }

  bool lit_redundant(Lit p, std::uint32_t abstract_levels) {
    analyze_stack_.clear();
    analyze_stack_.push_back(p);
    const std::size_t top = to_clear_.size();
    while (!analyze_stack_.empty()) {
      const CRef cr = reason_[var_of(analyze_stack_.back())];
      analyze_stack_.pop_back();
      const Lit* c = arena_.lits(cr);
      const std::uint32_t size = arena_.size(cr);
      for (std::uint32_t i = 1; i < size; ++i) {
        const Lit q = c[i];
        const std::uint32_t v = var_of(q);
        if (seen_[v] || level_[v] == 0) continue;
        if (reason_[v] != kCRefUndef && (abstract_level(v) & abstract_levels) != 0) {
          seen_[v] = 1;
          analyze_stack_.push_back(q);
          to_clear_.push_back(q);
        } else {
          for (std::size_t k = top; k < to_clear_.size(); ++k) seen_[var_of(to_clear_[k])] = 0;
          to_clear_.resize(top);
          return false;
        }
      }
    }
    return true;
  }

  // First-UIP conflict analysis. Leaves the asserting literal in out[0] and a
  // literal of the backjump level in out[1].
  void analyze(CRef conflict, std::vector<Lit>& out, std::uint32_t& backjump, std::uint32_t& lbd) {
    int path = 0;
    Lit p = kLitUndef;
    out.clear();
    out.push_back(kLitUndef);
    std::size_t index = trail_.size();

    do {
      if (arena_.learnt(conflict)) bump_clause(conflict);
      const Lit* c = arena_.lits(conflict);
      const std::uint32_t size = arena_.size(conflict);
      for (std::uint32_t j = (p == kLitUndef) ? 0 : 1; j < size; ++j) {
        const Lit q = c[j];
        const std::uint32_t v = var_of(q);
        if (!seen_[v] && level_[v] > 0) {
          bump_var(v);
          seen_[v] = 1;
          if (level_[v] >= decision_level())
            ++path;
          else
            out.push_back(q);
        }
      }
      while (!seen_[var_of(trail_[--index])]) {
      }
      p = trail_[index];
      conflict = reason_[var_of(p)];
      seen_[var_of(p)] = 0;
      --path;
    } while (path > 0);
    out[0] = negate(p);

    to_clear_.assign(out.begin(), out.end());
    std::uint32_t levels = 0;
    for (std::size_t i = 1; i < out.size(); ++i) levels |= abstract_level(var_of(out[i]));
    std::size_t j = 1;
    for (std::size_t i = 1; i < out.size(); ++i) {
      if (reason_[var_of(out[i])] == kCRefUndef || !lit_redundant(out[i], levels)) out[j++] = out[i];
    }
    out.resize(j);

    if (out.size() == 1) {
      backjump = 0;
    } else {
      std::size_t max_i = 1;
      for (std::size_t i = 2; i < out.size(); ++i)
        if (level_[var_of(out[i])] > level_[var_of(out[max_i])]) max_i = i;
      std::swap(out[1], out[max_i]);
      backjump = level_[var_of(out[1])];
    }

    for (Lit l : to_clear_) seen_[var_of(l)] = 0;

    ++lbd_stamp_;
    if (level_stamp_.size() <= decision_level()) level_stamp_.resize(decision_level() + 1, 0);
    lbd = 0;
    for (Lit l : out) {
      const std::uint32_t lv = level_[var_of(l)];
      if (level_stamp_[lv] != lbd_stamp_) {
        level_stamp_[lv] = lbd_stamp_;
        ++lbd;
      }
    }
  }

  Lit pick_branch() {
    while (!order_.empty()) {
      const std::uint32_t v = order_.pop();
      if (assigns_[v] == kUndef) return make_lit(v, polarity_[v] != 0);
    }
    return kLitUndef;
  }

  bool budget_exhausted() const {
    if (opts_.conflict_budget && stats_.conflicts - start_conflicts_ >= *opts_.conflict_budget) return true;
    if (opts_.time_budget && std::chrono::steady_clock::now() - start_time_ >= *opts_.time_budget) return true;
    return false;
  }

  void remove_clause(CRef cr) {
    if (locked(cr)) reason_[var_of(arena_.lits(cr)[0])] = kCRefUndef;
    arena_.mark_deleted(cr);
    ++stats_.deleted_clauses;
  }

  void purge_watches() {
    for (auto& ws : watches_)
      std::erase_if(ws, [&](const Watcher& w) { return arena_.deleted(w.cref); });
  }

  void reduce_db() {
    std::vector<CRef> candidates;
    for (CRef cr : learnts_)
      if (arena_.lbd(cr) > kKeepLbd && !locked(cr)) candidates.push_back(cr);
    std::sort(candidates.begin(), candidates.end(), [&](CRef a, CRef b) {
      if (arena_.lbd(a) != arena_.lbd(b)) return arena_.lbd(a) > arena_.lbd(b);
      if (arena_.activity(a) != arena_.activity(b)) return arena_.activity(a) < arena_.activity(b);
      return a < b;
    });
    const std::size_t drop = candidates.size() / 2;
    for (std::size_t i = 0; i < drop; ++i) remove_clause(candidates[i]);
    std::erase_if(learnts_, [&](CRef cr) { return arena_.deleted(cr); });
    purge_watches();
    maybe_collect();
  }

  bool satisfied_at_root(CRef cr) const {
    const Lit* c = arena_.lits(cr);
    for (std::uint32_t i = 0; i < arena_.size(cr); ++i)
      if (value(c[i]) == kTrue && level_[var_of(c[i])] == 0) return true;
    return false;
  }

  // Level-0 cleanup: drop every clause already satisfied by root assignments.
  void simplify() {
    for (auto* list : {&clauses_, &learnts_}) {
      for (CRef cr : *list)
        if (satisfied_at_root(cr)) remove_clause(cr);
      std::erase_if(*list, [&](CRef cr) { return arena_.deleted(cr); });
    }
    purge_watches();
    maybe_collect();
    simplified_trail_ = trail_.size();
  }

  void maybe_collect() {
    if (arena_.wasted() * 5 < arena_.words()) return;
    ClauseArena fresh;
    std::vector<CRef> remap_from;
    std::vector<CRef> remap_to;
    auto relocate = [&](std::vector<CRef>& list) {
      for (CRef& cr : list) {
        const CRef moved = arena_.move_to(cr, fresh);
        remap_from.push_back(cr);
        remap_to.push_back(moved);
        cr = moved;
      }
    };
    relocate(clauses_);
    relocate(learnts_);

    // remap_from is not sorted across the two lists; sort pairs for lookup.
    std::vector<std::size_t> idx(remap_from.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return remap_from[a] < remap_from[b]; });
    auto lookup = [&](CRef old) {
      auto it = std::lower_bound(idx.begin(), idx.end(), old,
                                 [&](std::size_t i, CRef v) { return remap_from[i] < v; });
      return remap_to[*it];
    };
    for (Lit l : trail_) {
      CRef& r = reason_[var_of(l)];
      if (r != kCRefUndef) r = lookup(r);
    }
    for (auto& ws : watches_)
      for (Watcher& w : ws) w.cref = lookup(w.cref);
    arena_.swap(fresh);
  }

  LBool search(std::uint64_t conflict_limit) {
    std::uint64_t local_conflicts = 0;
    std::vector<Lit>& learnt = learnt_buf_;
    for (;;) {
      const CRef conflict = propagate();
      if (conflict != kCRefUndef) {
        ++stats_.conflicts;
        ++local_conflicts;
        if (decision_level() == 0) {
          ok_ = false;
          return kFalse;
        }
        std::uint32_t backjump = 0;
        std::uint32_t lbd = 0;
        analyze(conflict, learnt, backjump, lbd);
        cancel_until(backjump);
        if (learnt.size() == 1) {
          enqueue(learnt[0], kCRefUndef);
        } else {
          const CRef cr = arena_.alloc(learnt, true);
          arena_.set_lbd(cr, lbd);
          learnts_.push_back(cr);
          attach(cr);
          bump_clause(cr);
          enqueue(learnt[0], cr);
          ++stats_.learnt_clauses;
        }
        var_inc_ /= kVarDecay;
        clause_inc_ /= kClauseDecay;

        if (stats_.conflicts >= next_reduce_) {
          reduce_interval_ += kReduceIncrement;
          next_reduce_ = stats_.conflicts + reduce_interval_;
          reduce_db();
        }
        continue;
      }

      if (local_conflicts >= conflict_limit || budget_exhausted()) {
        cancel_until(0);
        return kUndef;
      }
      if (decision_level() == 0 && trail_.size() > simplified_trail_) simplify();

      Lit next = kLitUndef;
      while (decision_level() < assumptions_.size()) {
        const Lit a = assumptions_[decision_level()];
        const LBool v = value(a);
        if (v == kTrue) {
          trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
        } else if (v == kFalse) {
          return kFalse;
        } else {
          next = a;
          break;
        }
      }
      if (next == kLitUndef) {
        next = pick_branch();
        if (next == kLitUndef) return kTrue;
        ++stats_.decisions;
      }
      trail_lim_.push_back(static_cast<std::uint32_t>(trail_.size()));
      enqueue(next, kCRefUndef);
    }
  }

  SolverOptions opts_;
  SplitMix64 rng_;
  bool ok_ = true;

  std::vector<LBool> assigns_;
  std::vector<std::uint32_t> level_;
  std::vector<CRef> reason_;
  std::vector<double> activity_;
  std::vector<std::uint8_t> polarity_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::vector<Watcher>> watches_;
  VarHeap order_;

  std::vector<Lit> trail_;
  std::vector<std::uint32_t> trail_lim_;
  std::size_t qhead_ = 0;
  std::vector<Lit> assumptions_;

  ClauseArena arena_;
  std::vector<CRef> clauses_;
  std::vector<CRef> learnts_;

  double var_inc_ = 1.0;
  double clause_inc_ = 1.0;
  std::uint64_t next_reduce_ = kFirstReduce;
  std::uint64_t reduce_interval_ = kFirstReduce;
  std::size_t simplified_trail_ = 0;

  std::vector<Lit> tmp_;
  std::vector<Lit> learnt_buf_;
  std::vector<Lit> analyze_stack_;
  std::vector<Lit> to_clear_;
  std::vector<std::uint64_t> level_stamp_;
  std::uint64_t lbd_stamp_ = 0;

  std::chrono::steady_clock::time_point start_time_;
  std::uint64_t start_conflicts_ = 0;
  SolverStats stats_;
};

Solver::Solver(const SolverOptions& opts) : impl_(std::make_unique<Impl>(opts)) {}
Solver::~Solver() = default;
Solver::Solver(Solver&&) noexcept = default;
Solver& Solver::operator=(Solver&&) noexcept = default;

void Solver::reserve_vars(std::uint32_t count) { impl_->reserve_vars(count); }
bool Solver::add_clause(std::span<const Literal> lits) { return impl_->add_clause(lits); }

void Solver::add_formula(const CnfFormula& f) {
  impl_->reserve_vars(f.num_vars());
  for (const Clause& c : f.clauses())
    if (!impl_->add_clause(c.literals())) return;
}

SolveResult Solver::solve(std::span<const Literal> assumptions) { return impl_->solve(assumptions); }
std::uint32_t Solver::num_vars() const { return impl_->num_vars(); }
const SolverStats& Solver::stats() const { return impl_->stats(); }

SolveResult solve(const CnfFormula& f, const SolverOptions& opts, std::span<const Literal> assumptions) {
  Solver s(opts);
  s.add_formula(f);
  return s.solve(assumptions);
}

std::vector<Model> enumerate(const CnfFormula& f, std::span<const VarId> scope, std::size_t limit,
                             const SolverOptions& opts) {
  if (scope.empty()) throw std::invalid_argument("enumeration scope is empty");
  for (VarId v : scope)
    if (v.index == 0 || v.index > f.num_vars()) throw std::invalid_argument("scope variable outside formula");
  Solver s(opts);
  s.add_formula(f);
  std::vector<Model> models;
  while (models.size() < limit) {
    SolveResult r = s.solve();
    if (r.is_unknown()) throw SolveInterrupted();
    if (r.is_unsat()) break;
    models.push_back(r.model());
    if (!s.add_clause(blocking_clause(models.back(), scope))) break;
  }
  return models;
}

}  // namespace satkit
