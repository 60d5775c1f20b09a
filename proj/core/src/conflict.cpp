#include "ltlcore/conflict.hpp"

#include <algorithm>
#include <set>

namespace ltlcore {

namespace {

void collect_premises(const ImpGraph& ig, const ClauseStore& store,
                      const std::vector<NodeId>& nodes, std::vector<RuleIdx>& out) {
  std::set<RuleIdx> acc(out.begin(), out.end());
  for (NodeId n : nodes) {
    const IGNode& node = ig.node(n);
    if (node.reason == ReasonKind::Clause && node.reason_clause >= 0) {
      const Clause& c = store.clause(static_cast<ClauseIdx>(node.reason_clause));
      acc.insert(c.premises.begin(), c.premises.end());
    }
  }
  out.assign(acc.begin(), acc.end());
}

}  // namespace

ConflictReport analyze_boolean(const ImpGraph& ig, const ClauseStore& store,
                               const std::vector<NodeId>& seeds) {
  ConflictReport report;
  report.kind = ConflictReport::Kind::Boolean;
  report.cone = ig.red_ancestors(seeds);
  std::int32_t level = 0;
  for (NodeId s : seeds) level = std::max(level, ig.node(s).level);
  report.conflict_level = level;
  collect_premises(ig, store, report.cone, report.premises);

  if (level == 0) {
    for (NodeId n : report.cone) {
      bool has_live_parent = false;
      for (NodeId p : ig.node(n).red_parents) {
        if (!ig.node(p).red_dead) has_live_parent = true;
      }
      if (!has_live_parent) report.level0_ancestors.push_back(n);
    }
    return report;
  }

  // N(conflict-level): the unique live chosen node at the conflict level.
  NodeId chosen = kNoNode;
  for (NodeId n : report.cone) {
    const IGNode& node = ig.node(n);
    if (node.kind == NodeKind::Chosen && node.level == level && !node.red_dead) {
      if (chosen != kNoNode && chosen != n) {
        throw InternalError("analyze_boolean: two chosen nodes at the conflict level");
      }
      chosen = n;
    }
  }
  if (chosen == kNoNode) {
    throw InternalError("analyze_boolean: no chosen node at the conflict level");
  }

  // Limit(C) = {N} + red parents of the level-cl part of the cone (the
  // virtual conflict node's parents are the seeds) at level <= cl-1.
  std::set<NodeId> low;
  for (NodeId s : seeds) {
    if (ig.node(s).level <= level - 1) low.insert(s);
  }
  std::set<NodeId> cone_set(report.cone.begin(), report.cone.end());
  for (NodeId n : report.cone) {
    if (ig.node(n).level != level) continue;
    for (NodeId p : ig.node(n).red_parents) {
      if (ig.node(p).red_dead) continue;
      if (ig.node(p).level <= level - 1) low.insert(p);
    }
  }
  report.limit.push_back(chosen);
  for (NodeId n : low) {
    if (n != chosen) report.limit.push_back(n);
  }
  return report;
}

std::optional<Clause> learn_state_clause(const ImpGraph& ig, const ConflictReport& report) {
  if (report.limit.empty()) return std::nullopt;
  SliceId slice = ig.node(report.limit[0]).slice;
  for (NodeId n : report.limit) {
    if (ig.node(n).slice != slice) return std::nullopt;
  }
  Clause c;
  c.origin = Origin::LearnedState;
  c.premises = report.premises;
  for (NodeId n : report.limit) c.lits.push_back(lit_negate(ig.node(n).lit));
  std::sort(c.lits.begin(), c.lits.end());
  c.lits.erase(std::unique(c.lits.begin(), c.lits.end()), c.lits.end());
  return c;
}

TemporalAnalysis analyze_temporal(const ImpGraph& ig, const ClauseStore& store,
                                  const Closure& closure,
                                  const std::vector<SccStateView>& scc, FormulaId promise) {
  TemporalAnalysis out;
  ClosureVarId promise_var = closure.var(promise);
  ClosureVarId operand = closure.promise_operand(promise_var);

  // INI: nodes asserting the operand's absence across the SCC's slices;
  // states where the operand was merely left unassigned contribute their
  // promise carry node instead.
  std::set<NodeId> marked;
  std::vector<NodeId> work;
  FormulaId carry = kNoFormula;
  {
    const FormulaArena& arena = closure.arena();
    carry = const_cast<FormulaArena&>(arena).mk_next(promise);
  }
  ClosureVarId carry_var = closure.contains(carry) ? closure.var(carry) : kNoVar;
  for (const SccStateView& st : scc) {
    bool state_found = false;
    for (SliceId s : st.slices) {
      // Each slice supplies its own seed so the clause-source slice always
      // carries marks: the operand's falsifier when one was recorded, the
      // promise carry otherwise.
      bool found = false;
      for (NodeId n : ig.slice_nodes(s)) {
        if (ig.node(n).lit == neg_lit(operand)) {
          if (marked.insert(n).second) work.push_back(n);
          found = true;
        }
      }
      if (!found && carry_var != kNoVar) {
        for (NodeId n : ig.slice_nodes(s)) {
          if (ig.node(n).lit == pos_lit(carry_var)) {
            if (marked.insert(n).second) work.push_back(n);
            found = true;
          }
        }
      }
      state_found |= found;
    }
    if (!state_found) {
      throw InternalError("analyze_temporal: promise operand absence has no node in any slice");
    }
  }

  // Inflationary backward fixpoint over black edges.
  std::size_t rounds = 0;
  while (!work.empty()) {
    NodeId n = work.back();
    work.pop_back();
    ++rounds;
    for (NodeId p : ig.node(n).black_parents) {
      if (marked.insert(p).second) work.push_back(p);
    }
  }
  out.fixpoint_rounds = rounds;
  out.marked.assign(marked.begin(), marked.end());
  collect_premises(ig, store, out.marked, out.premises);

  // One clause per state from its most recent black slice: the negated
  // marked prestate nodes of that slice, plus the negation of every marked
  // choice-like source (an operand absence that was decided rather than
  // forced must appear in the cut, or the clause would prune fair states).
  std::set<std::vector<Literal>> seen;
  auto is_prestate_node = [&](const IGNode& n) {
    if (n.reason == ReasonKind::Derivation) return true;
    if (n.reason == ReasonKind::Clause && n.reason_clause >= 0) {
      return store.clause(static_cast<ClauseIdx>(n.reason_clause)).origin == Origin::Presence;
    }
    return false;
  };
  for (const SccStateView& st : scc) {
    SliceId slice = st.slices.back();
    Clause c;
    c.origin = Origin::LearnedTemporal;
    c.origin_formula = promise;
    c.premises = out.premises;
    for (NodeId n : ig.slice_nodes(slice)) {
      if (!marked.count(n)) continue;
      const IGNode& node = ig.node(n);
      if (is_prestate_node(node)) {
        if (!lit_negative(node.lit)) c.lits.push_back(lit_negate(node.lit));
      } else if (node.kind == NodeKind::Chosen || node.black_parents.empty()) {
        c.lits.push_back(lit_negate(node.lit));
      }
    }
    c.lits.push_back(neg_lit(promise_var));
    std::sort(c.lits.begin(), c.lits.end());
    c.lits.erase(std::unique(c.lits.begin(), c.lits.end()), c.lits.end());
    if (seen.count(c.lits) == 0) {
      seen.insert(c.lits);
      out.learned.push_back(c);
    }
    out.per_state.push_back(std::move(c));
  }
  return out;
}

}  // namespace ltlcore
