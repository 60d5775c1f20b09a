#include "ltlcore/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace ltlcore {

namespace {

// Distinct subformulas in bottom-up order (children before parents).
std::vector<FormulaId> postorder_subformulas(const FormulaArena& arena, FormulaId f) {
  std::vector<FormulaId> order;
  std::set<FormulaId> seen;
  std::vector<std::pair<FormulaId, bool>> stack{{f, false}};
  while (!stack.empty()) {
    auto [g, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(g);
      continue;
    }
    if (seen.count(g)) continue;
    seen.insert(g);
    stack.push_back({g, true});
    for (FormulaId c : arena.node(g).children) stack.push_back({c, false});
  }
  return order;
}

}  // namespace

bool eval_lasso(const FormulaArena& arena, FormulaId f, const Lasso& w, std::size_t pos) {
  if (w.loop.empty()) throw InternalError("eval_lasso: empty loop");
  const std::size_t n = w.total_len();
  if (pos >= n) throw InternalError("eval_lasso: position out of range");
  auto next = [&](std::size_t i) { return i + 1 < n ? i + 1 : w.prefix.size(); };

  std::vector<FormulaId> order = postorder_subformulas(arena, f);
  std::unordered_map<FormulaId, std::vector<char>> truth;
  auto word_at = [&](std::size_t i) -> const Valuation& {
    return i < w.prefix.size() ? w.prefix[i] : w.loop[i - w.prefix.size()];
  };

  for (FormulaId g : order) {
    const FormulaNode& node = arena.node(g);
    std::vector<char> v(n, 0);
    switch (node.kind) {
      case Kind::True:
        std::fill(v.begin(), v.end(), 1);
        break;
      case Kind::False:
        break;
      case Kind::Prop:
      case Kind::NegProp: {
        const std::string& name = arena.prop_name(g);
        for (std::size_t i = 0; i < n; ++i) {
          const Valuation& val = word_at(i);
          bool holds = std::find(val.begin(), val.end(), name) != val.end();
          v[i] = (node.kind == Kind::Prop) == holds;
        }
        break;
      }
      case Kind::And:
        std::fill(v.begin(), v.end(), 1);
        for (FormulaId c : node.children) {
          const auto& cv = truth[c];
          for (std::size_t i = 0; i < n; ++i) v[i] = v[i] && cv[i];
        }
        break;
      case Kind::Or:
        for (FormulaId c : node.children) {
          const auto& cv = truth[c];
          for (std::size_t i = 0; i < n; ++i) v[i] = v[i] || cv[i];
        }
        break;
      case Kind::Next: {
        const auto& cv = truth[node.children[0]];
        for (std::size_t i = 0; i < n; ++i) v[i] = cv[next(i)];
        break;
      }
      case Kind::Future:
      case Kind::Until: {
        // least fixpoint of v = rhs | (lhs & X v)
        const auto& rhs = truth[node.children[node.kind == Kind::Future ? 0 : 1]];
        const std::vector<char>* lhs =
            node.kind == Kind::Until ? &truth[node.children[0]] : nullptr;
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t round = 0; round <= n; ++round) {
          bool changed = false;
          for (std::size_t i = n; i-- > 0;) {
            char nv = rhs[i] || ((lhs ? (*lhs)[i] : 1) && v[next(i)]);
            if (nv != v[i]) {
              v[i] = nv;
              changed = true;
            }
          }
          if (!changed) break;
        }
        break;
      }
      case Kind::Globally:
      case Kind::WeakUntil: {
        // greatest fixpoint of v = rhs | (lhs & X v); for G, rhs = false.
        const std::vector<char>* rhs =
            node.kind == Kind::WeakUntil ? &truth[node.children[1]] : nullptr;
        const auto& lhs = truth[node.children[0]];
        std::fill(v.begin(), v.end(), 1);
        for (std::size_t round = 0; round <= n; ++round) {
          bool changed = false;
          for (std::size_t i = n; i-- > 0;) {
            char nv = (rhs && (*rhs)[i]) || (lhs[i] && v[next(i)]);
            if (nv != v[i]) {
              v[i] = nv;
              changed = true;
            }
          }
          if (!changed) break;
        }
        break;
      }
    }
    truth.emplace(g, std::move(v));
  }
  return truth[f][pos] != 0;
}

namespace {

// Local replica of the closure counting rules; keeps the oracle independent
// of the solver's closure bookkeeping.
void closure_insert(FormulaId f, std::set<FormulaId>& set, std::vector<FormulaId>& work) {
  if (set.insert(f).second) work.push_back(f);
}

std::set<FormulaId> local_closure(FormulaArena& arena, FormulaId f) {
  std::set<FormulaId> set;
  std::vector<FormulaId> work;
  closure_insert(f, set, work);
  for (std::size_t i = 0; i < work.size(); ++i) {
    FormulaId g = work[i];
    const FormulaNode& n = arena.node(g);
    switch (n.kind) {
      case Kind::And:
      case Kind::Or:
        for (FormulaId c : n.children) closure_insert(c, set, work);
        break;
      case Kind::Future:
      case Kind::Globally:
        closure_insert(n.children[0], set, work);
        closure_insert(arena.mk_next(g), set, work);
        break;
      case Kind::Until:
      case Kind::WeakUntil:
        closure_insert(n.children[1], set, work);
        closure_insert(arena.mk_and({n.children[0], arena.mk_next(g)}), set, work);
        break;
      case Kind::Next:
        closure_insert(n.children[0], set, work);
        break;
      default:
        break;
    }
  }
  return set;
}

using StateSet = std::vector<FormulaId>;  // sorted

// Enumerates the full saturations of a prestate under the choice rules,
// pruning propositionally conflicting branches.
class Saturator {
 public:
  explicit Saturator(FormulaArena& arena) : arena_(arena) {}

  std::vector<StateSet> states_of(const StateSet& prestate) {
    results_.clear();
    std::set<FormulaId> cur;
    std::vector<FormulaId> pending;
    for (FormulaId f : prestate) {
      if (!add(f, cur, pending)) return {};
    }
    branch(cur, std::move(pending), 0);
    std::sort(results_.begin(), results_.end());
    results_.erase(std::unique(results_.begin(), results_.end()), results_.end());
    return results_;
  }

 private:
  // Adds f and its forced consequences to cur; returns false on conflict.
  // Choice points are appended to `pending`.
  bool add(FormulaId f, std::set<FormulaId>& cur, std::vector<FormulaId>& pending) {
    if (cur.count(f)) return true;
    const FormulaNode& n = arena_.node(f);
    if (n.kind == Kind::False) return false;
    if (n.kind == Kind::Prop || n.kind == Kind::NegProp) {
      if (cur.count(arena_.mk_literal_negation(f))) return false;
    }
    cur.insert(f);
    switch (n.kind) {
      case Kind::And:
        for (FormulaId c : n.children) {
          if (!add(c, cur, pending)) return false;
        }
        return true;
      case Kind::Globally:
        return add(n.children[0], cur, pending) && add(arena_.mk_next(f), cur, pending);
      case Kind::Or:
      case Kind::Future:
      case Kind::Until:
      case Kind::WeakUntil:
        pending.push_back(f);
        return true;
      default:
        return true;
    }
  }

  void branch(std::set<FormulaId>& cur, std::vector<FormulaId> pending, std::size_t i) {
    // Choices already satisfied by the current set need no branch.
    while (i < pending.size() && satisfied(pending[i], cur)) ++i;
    if (i == pending.size()) {
      results_.emplace_back(cur.begin(), cur.end());
      return;
    }
    FormulaId f = pending[i];
    const FormulaNode& n = arena_.node(f);
    std::vector<FormulaId> options;
    switch (n.kind) {
      case Kind::Or:
        options = n.children;
        break;
      case Kind::Future:
        options = {n.children[0], arena_.mk_next(f)};
        break;
      case Kind::Until:
      case Kind::WeakUntil:
        options = {n.children[1], arena_.mk_and({n.children[0], arena_.mk_next(f)})};
        break;
      default:
        throw InternalError("Saturator: unexpected pending kind");
    }
    for (FormulaId opt : options) {
      std::set<FormulaId> copy = cur;
      std::vector<FormulaId> pend = pending;
      if (add(opt, copy, pend)) branch(copy, std::move(pend), i + 1);
    }
  }

  bool satisfied(FormulaId f, const std::set<FormulaId>& cur) const {
    const FormulaNode& n = arena_.node(f);
    switch (n.kind) {
      case Kind::Or:
        for (FormulaId c : n.children) {
          if (cur.count(c)) return true;
        }
        return false;
      case Kind::Future:
        return cur.count(n.children[0]) || cur.count(arena_.mk_next(f));
      case Kind::Until:
      case Kind::WeakUntil:
        return cur.count(n.children[1]) ||
               cur.count(arena_.mk_and({n.children[0], arena_.mk_next(f)}));
      default:
        return true;
    }
  }

  FormulaArena& arena_;
  std::vector<StateSet> results_;
};

// Exhaustive Def 6 expansion graph with fair-SCC acceptance. Returns
// nullopt when the state budget runs out.
struct TableauDecision {
  bool sat;
  Lasso witness;  // Sat only
};

class TableauDecider {
 public:
  TableauDecider(FormulaArena& arena, std::size_t state_budget)
      : arena_(arena), sat_(arena), budget_(state_budget) {}

  std::optional<TableauDecision> decide(FormulaId f) {
    StateSet s0 = conjuncts(arena_, f);
    std::sort(s0.begin(), s0.end());
    for (const StateSet& st : sat_.states_of(s0)) {
      if (!intern_state(st)) return std::nullopt;
    }
    initial_count_ = states_.size();
    for (std::size_t i = 0; i < states_.size(); ++i) {
      if (!expand_state(i)) return std::nullopt;
    }
    // Tarjan over the finished graph.
    std::size_t n = states_.size();
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::size_t> stack;
    int counter = 0;
    std::vector<std::vector<std::size_t>> sccs;
    // Iterative Tarjan.
    struct Frame {
      std::size_t v;
      std::size_t edge = 0;
    };
    for (std::size_t root = 0; root < n; ++root) {
      if (index[root] != -1) continue;
      std::vector<Frame> rec{{root}};
      index[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = true;
      while (!rec.empty()) {
        Frame& fr = rec.back();
        if (fr.edge < edges_[fr.v].size()) {
          std::size_t w = edges_[fr.v][fr.edge++];
          if (index[w] == -1) {
            index[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = true;
            rec.push_back({w});
          } else if (on_stack[w]) {
            low[fr.v] = std::min(low[fr.v], index[w]);
          }
        } else {
          if (low[fr.v] == index[fr.v]) {
            std::vector<std::size_t> scc;
            for (;;) {
              std::size_t w = stack.back();
              stack.pop_back();
              on_stack[w] = false;
              scc.push_back(w);
              if (w == fr.v) break;
            }
            sccs.push_back(std::move(scc));
          }
          std::size_t v = fr.v;
          rec.pop_back();
          if (!rec.empty()) low[rec.back().v] = std::min(low[rec.back().v], low[v]);
        }
      }
    }
    // Accepting components: terminal sinks or fair SCCs with a cycle.
    for (std::size_t v = 0; v < n; ++v) {
      if (terminal_[v]) return make_witness_path(v, {});
    }
    for (const auto& scc : sccs) {
      bool has_cycle = scc.size() > 1;
      if (!has_cycle) {
        std::size_t v = scc[0];
        has_cycle = std::find(edges_[v].begin(), edges_[v].end(), v) != edges_[v].end();
      }
      if (!has_cycle) continue;
      if (fair(scc)) return make_witness_path(scc[0], scc);
    }
    return TableauDecision{false, {}};
  }

 private:
  bool intern_state(const StateSet& st) {
    if (state_ids_.count(st)) return true;
    if (states_.size() >= budget_) return false;
    state_ids_.emplace(st, states_.size());
    states_.push_back(st);
    edges_.emplace_back();
    bool term = true;
    for (FormulaId g : st) {
      if (arena_.kind(g) == Kind::Next) term = false;
    }
    terminal_.push_back(term);
    return true;
  }

  bool expand_state(std::size_t v) {
    StateSet next_prestate;
    for (FormulaId g : states_[v]) {
      if (arena_.kind(g) == Kind::Next) next_prestate.push_back(arena_.node(g).children[0]);
    }
    if (next_prestate.empty()) return true;
    std::sort(next_prestate.begin(), next_prestate.end());
    next_prestate.erase(std::unique(next_prestate.begin(), next_prestate.end()),
                        next_prestate.end());
    for (const StateSet& st : sat_.states_of(next_prestate)) {
      if (!intern_state(st)) return false;
      edges_[v].push_back(state_ids_[st]);
    }
    return true;
  }

  bool fair(const std::vector<std::size_t>& scc) const {
    std::set<std::size_t> members(scc.begin(), scc.end());
    for (std::size_t v : scc) {
      for (FormulaId g : states_[v]) {
        const FormulaNode& n = arena_.node(g);
        FormulaId operand = kNoFormula;
        if (n.kind == Kind::Future) operand = n.children[0];
        if (n.kind == Kind::Until) operand = n.children[1];
        if (operand == kNoFormula) continue;
        bool fulfilled = false;
        for (std::size_t t : scc) {
          if (std::binary_search(states_[t].begin(), states_[t].end(), operand)) {
            fulfilled = true;
            break;
          }
        }
        if (!fulfilled) return false;
      }
    }
    return true;
  }

  Valuation val_of(std::size_t v) const {
    Valuation out;
    for (FormulaId g : states_[v]) {
      if (arena_.kind(g) == Kind::Prop) out.push_back(arena_.prop_name(g));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // BFS path root-set -> target over the whole graph.
  std::vector<std::size_t> bfs_path(std::size_t from, std::size_t to,
                                    const std::set<std::size_t>* restrict) const {
    std::vector<int> parent(states_.size(), -2);
    std::vector<std::size_t> queue{from};
    parent[from] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      std::size_t v = queue[qi];
      if (v == to && qi > 0) break;
      for (std::size_t w : edges_[v]) {
        if (restrict && !restrict->count(w)) continue;
        if (parent[w] != -2) continue;
        parent[w] = static_cast<int>(v);
        queue.push_back(w);
      }
    }
    std::vector<std::size_t> path;
    if (parent[to] == -2) return path;
    for (std::size_t v = to; parent[v] != -1; v = static_cast<std::size_t>(parent[v])) {
      path.push_back(v);
    }
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
  }

  TableauDecision make_witness_path(std::size_t target, std::vector<std::size_t> scc) {
    // BFS from every root saturation (they occupy the front of states_).
    std::vector<int> parent(states_.size(), -2);
    std::vector<std::size_t> queue;
    for (std::size_t v = 0; v < states_.size() && v < initial_count_; ++v) {
      parent[v] = -1;
      queue.push_back(v);
    }
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.erase(queue.begin());
      for (std::size_t w : edges_[v]) {
        if (parent[w] != -2) continue;
        parent[w] = static_cast<int>(v);
        queue.push_back(w);
      }
    }
    if (parent[target] == -2) {
      // Unreachable target cannot happen for reached states.
      throw InternalError("TableauDecider: witness target unreachable");
    }
    std::vector<std::size_t> path;
    for (std::size_t v = target;; v = static_cast<std::size_t>(parent[v])) {
      path.push_back(v);
      if (parent[v] == -1) break;
    }
    std::reverse(path.begin(), path.end());

    Lasso w;
    if (scc.empty()) {
      // Terminal sink: prefix up to the sink, loop repeats its valuation.
      for (std::size_t i = 0; i + 1 < path.size(); ++i) w.prefix.push_back(val_of(path[i]));
      w.loop.push_back(val_of(path.back()));
      return {true, std::move(w)};
    }
    std::set<std::size_t> members(scc.begin(), scc.end());
    // Enter the SCC at the end of the path (the Tarjan root is reachable).
    for (std::size_t i = 0; i + 1 < path.size(); ++i) w.prefix.push_back(val_of(path[i]));
    // Closed walk from path.back() visiting every member.
    std::size_t here = path.back();
    std::vector<std::size_t> walk{here};
    for (std::size_t m : scc) {
      if (m == here) continue;
      auto leg = bfs_path(walk.back(), m, &members);
      walk.insert(walk.end(), leg.begin() + 1, leg.end());
    }
    auto back = bfs_path(walk.back(), here, &members);
    if (back.empty()) {
      // Self-loop on a single state.
      walk.push_back(here);
    } else {
      walk.insert(walk.end(), back.begin() + 1, back.end());
    }
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) w.loop.push_back(val_of(walk[i]));
    if (w.loop.empty()) w.loop.push_back(val_of(here));
    return {true, std::move(w)};
  }

  FormulaArena& arena_;
  Saturator sat_;
  std::size_t budget_;
  std::size_t initial_count_ = 0;
  std::map<StateSet, std::size_t> state_ids_;
  std::vector<StateSet> states_;
  std::vector<std::vector<std::size_t>> edges_;
  std::vector<bool> terminal_;
};

}  // namespace

std::size_t oracle_closure_size(const FormulaArena& arena, FormulaId f) {
  return local_closure(const_cast<FormulaArena&>(arena), f).size();
}

std::uint64_t oracle_complete_bound(const FormulaArena& arena, FormulaId f) {
  std::size_t cl = oracle_closure_size(arena, f);
  if (cl >= 62) return UINT64_MAX;
  return (1ull << cl) + 1;
}

OracleResult oracle_solve(FormulaArena& arena, FormulaId f, std::uint64_t max_len,
                          const OracleLimits& limits) {
  if (max_len < 1) throw InternalError("oracle_solve: max_len must be >= 1");
  std::vector<std::string> props = arena.props_of(f);
  const std::size_t nprops = props.size();
  const std::uint64_t nvals = 1ull << std::min<std::size_t>(nprops, 20);
  std::uint64_t bound = oracle_complete_bound(arena, f);
  bool cap_ok = oracle_closure_size(arena, f) <= limits.closure_cap;

  auto to_val = [&](std::uint64_t mask) {
    Valuation v;
    for (std::size_t i = 0; i < nprops; ++i) {
      if (mask & (1ull << i)) v.push_back(props[i]);
    }
    return v;
  };

  std::uint64_t evals = 0;
  std::uint64_t completed_len = 0;
  bool budget_hit = false;
  for (std::uint64_t n = 1; n <= max_len && !budget_hit; ++n) {
    // All valuation sequences of length n, lexicographic; for each, every
    // prefix/loop split.
    std::vector<std::uint64_t> seq(n, 0);
    bool more = true;
    while (more && !budget_hit) {
      for (std::uint64_t p = 0; p < n; ++p) {
        if (++evals > limits.eval_budget) {
          budget_hit = true;
          break;
        }
        Lasso w;
        for (std::uint64_t i = 0; i < p; ++i) w.prefix.push_back(to_val(seq[i]));
        for (std::uint64_t i = p; i < n; ++i) w.loop.push_back(to_val(seq[i]));
        if (eval_lasso(arena, f, w, 0)) {
          return {OracleResult::Kind::Sat, std::move(w), 0};
        }
      }
      // increment seq as a base-nvals counter, most significant first
      more = false;
      for (std::size_t i = n; i-- > 0;) {
        if (++seq[i] < nvals) {
          more = true;
          break;
        }
        seq[i] = 0;
      }
    }
    if (!budget_hit) completed_len = n;
  }

  if (!budget_hit) {
    if (cap_ok && max_len >= bound) return {OracleResult::Kind::UnsatComplete, std::nullopt, 0};
    return {OracleResult::Kind::UnsatUpTo, std::nullopt, completed_len};
  }

  TableauDecider decider(arena, limits.state_budget);
  auto decision = decider.decide(f);
  if (!decision) return {OracleResult::Kind::UnsatUpTo, std::nullopt, completed_len};
  if (decision->sat) {
    if (!eval_lasso(arena, f, decision->witness, 0)) {
      throw InternalError("oracle_solve: decider produced an invalid witness");
    }
    return {OracleResult::Kind::Sat, std::move(decision->witness), 0};
  }
  if (cap_ok && max_len >= bound) return {OracleResult::Kind::UnsatComplete, std::nullopt, 0};
  return {OracleResult::Kind::UnsatUpTo, std::nullopt, max_len};
}

}  // namespace ltlcore
