#include "ltlcore/assign.hpp"

#include <algorithm>

namespace ltlcore {

Subproblem::Subproblem(const Closure& closure, ClauseStore& store, ImpGraph& ig, PrestateId ps,
                       SliceId slice)
    : closure_(closure), store_(store), ig_(ig), prestate_(ps), slice_(slice) {
  values_.assign(closure.size(), Value::Unassigned);
  node_of_.assign(closure.size(), kNoNode);
  occ_.resize(closure.size());
  refresh_active();
}

void Subproblem::refresh_active() {
  const std::vector<ClauseIdx>& all = store_.clauses_for(prestate_);
  for (; store_seen_ < all.size(); ++store_seen_) activate(all[store_seen_]);
}

void Subproblem::activate(ClauseIdx ci) {
  const Clause& c = store_.clause(ci);
  std::uint32_t pos = static_cast<std::uint32_t>(active_.size());
  active_.push_back(ci);
  Count cnt;
  for (Literal l : c.lits) {
    occ_[lit_var(l)].push_back({pos, !lit_negative(l)});
    Value v = values_[lit_var(l)];
    if (v == Value::Unassigned) continue;
    bool lit_true = (v == Value::True) != lit_negative(l);
    if (lit_true) {
      ++cnt.n_true;
    } else {
      ++cnt.n_false;
    }
  }
  counts_.push_back(cnt);
}

void Subproblem::assign(Literal l, NodeId node) {
  ClosureVarId v = lit_var(l);
  if (values_[v] != Value::Unassigned) throw InternalError("assign: var already assigned");
  values_[v] = lit_negative(l) ? Value::False : Value::True;
  node_of_[v] = node;
  trail_.push_back({l, node});
  for (const Watch& w : occ_[v]) {
    bool lit_true = w.positive != lit_negative(l);
    if (lit_true) {
      ++counts_[w.active_pos].n_true;
    } else {
      ++counts_[w.active_pos].n_false;
    }
  }
}

void Subproblem::unassign(const TrailEntry& e) {
  ClosureVarId v = lit_var(e.lit);
  for (const Watch& w : occ_[v]) {
    bool lit_true = w.positive != lit_negative(e.lit);
    if (lit_true) {
      --counts_[w.active_pos].n_true;
    } else {
      --counts_[w.active_pos].n_false;
    }
  }
  values_[v] = Value::Unassigned;
  node_of_[v] = kNoNode;
}

void Subproblem::assume_presence(ClosureVarId v, NodeId derivation_parent,
                                 std::int32_t presence_clause) {
  if (values_[v] == Value::True) return;
  if (values_[v] == Value::False) throw InternalError("assume_presence: member already false");
  NodeId node;
  if (derivation_parent != kNoNode) {
    node = ig_.add_node(pos_lit(v), slice_, NodeKind::Required, 0, ReasonKind::Derivation, -1,
                        {derivation_parent});
  } else {
    node = ig_.add_node(pos_lit(v), slice_, NodeKind::Required, 0, ReasonKind::Clause,
                        presence_clause, {});
  }
  assign(pos_lit(v), node);
}

std::optional<Conflict> Subproblem::propagate(SearchStats& stats) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::uint32_t pos = 0; pos < active_.size(); ++pos) {
      const Count& cnt = counts_[pos];
      if (cnt.n_true > 0) continue;
      const Clause& c = store_.clause(active_[pos]);
      std::uint32_t width = static_cast<std::uint32_t>(c.lits.size());
      if (cnt.n_false == width) {
        Conflict conf;
        conf.clause = active_[pos];
        for (Literal l : c.lits) conf.seeds.push_back(node_of_[lit_var(l)]);
        return conf;
      }
      if (cnt.n_false + 1u == width) {
        // Unit: the one free literal is implied by the falsified rest.
        Literal unit = 0;
        std::vector<NodeId> parents;
        for (Literal l : c.lits) {
          if (values_[lit_var(l)] == Value::Unassigned) {
            unit = l;
          } else {
            parents.push_back(node_of_[lit_var(l)]);
          }
        }
        NodeId node = ig_.add_node(unit, slice_, NodeKind::Required, 0, ReasonKind::Clause,
                                   static_cast<std::int32_t>(active_[pos]), std::move(parents));
        assign(unit, node);
        ++stats.propagations;
        ++stats.steps;
        progress = true;
      }
    }
  }
  return std::nullopt;
}

std::optional<Literal> Subproblem::pick_decision() const {
  auto pick_from = [&](const Clause& c) -> Literal {
    // Promise-fulfilling disjunct first, then smallest var.
    if (c.origin == Origin::Unwound) {
      Kind k = closure_.arena().kind(c.origin_formula);
      if (k == Kind::Future || k == Kind::Until) {
        ClosureVarId src = closure_.var(c.origin_formula);
        ClosureVarId op = closure_.promise_operand(src);
        if (values_[op] == Value::Unassigned &&
            std::find(c.lits.begin(), c.lits.end(), pos_lit(op)) != c.lits.end()) {
          return pos_lit(op);
        }
      }
    }
    for (Literal l : c.lits) {  // lits sorted by var
      if (values_[lit_var(l)] == Value::Unassigned) return l;
    }
    throw InternalError("pick_decision: no free literal in pending clause");
  };
  for (int round = 0; round < 2; ++round) {
    for (std::uint32_t pos = 0; pos < active_.size(); ++pos) {
      if (counts_[pos].n_true > 0) continue;
      const Clause& c = store_.clause(active_[pos]);
      bool disjunctive = c.origin == Origin::Unwound && c.lits.size() > 2;
      if (round == 0 && !disjunctive) continue;
      std::uint32_t width = static_cast<std::uint32_t>(c.lits.size());
      if (counts_[pos].n_false >= width - 1) {
        throw InternalError("pick_decision: unit or falsified clause after quiescence");
      }
      return pick_from(c);
    }
  }
  // A promise whose unwinding clause is already satisfied by the carry
  // still needs its fulfilling branch: the choice function picks the
  // operand independently of the other members.
  for (ClosureVarId v : closure_.promise_vars()) {
    if (values_[v] != Value::True) continue;
    ClosureVarId op = closure_.promise_operand(v);
    if (values_[op] == Value::Unassigned) return pos_lit(op);
  }
  return std::nullopt;
}

NodeId Subproblem::decide(Literal l, std::int32_t level, std::uint8_t flip, SearchStats& stats) {
  NodeId node = ig_.add_node(l, slice_, NodeKind::Chosen, level, ReasonKind::Decision, -1, {});
  ig_.node_mut(node).flip = flip;
  assign(l, node);
  decisions_.push_back({lit_var(l), l, level, node, flip});
  ++stats.decisions;
  ++stats.steps;
  return node;
}

NodeId Subproblem::assign_required_node(NodeId node) {
  assign(ig_.node(node).lit, node);
  return node;
}

bool Subproblem::all_clauses_satisfied() const {
  for (std::uint32_t pos = 0; pos < active_.size(); ++pos) {
    if (counts_[pos].n_true == 0) return false;
  }
  return true;
}

bool Subproblem::satisfied_under(const Clause& c, const std::vector<Value>& vals) const {
  for (Literal l : c.lits) {
    Value v = vals[lit_var(l)];
    if (v == Value::Unassigned) continue;
    if ((v == Value::True) != lit_negative(l)) return true;
  }
  return false;
}

std::vector<ClosureVarId> Subproblem::extract_fpi() const {
  // Project Unassigned to absent first; switching maximality is judged in
  // the induced state's set semantics.
  std::vector<Value> scratch = values_;
  for (Value& v : scratch) {
    if (v == Value::Unassigned) v = Value::False;
  }
  // A switch can enable an earlier-blocked one through a negated literal,
  // so the descending pass repeats until no further switch succeeds.
  bool switched = true;
  while (switched) {
    switched = false;
    for (ClosureVarId v = static_cast<ClosureVarId>(closure_.size()); v-- > 0;) {
      if (scratch[v] != Value::True) continue;
      if (closure_.is_promise_operand(v)) continue;
      scratch[v] = Value::False;
      bool ok = true;
      for (ClauseIdx ci : active_) {
        if (!satisfied_under(store_.clause(ci), scratch)) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        scratch[v] = Value::True;
      } else {
        switched = true;
      }
    }
  }
  std::vector<ClosureVarId> members;
  for (ClosureVarId v = 0; v < closure_.size(); ++v) {
    if (scratch[v] == Value::True) members.push_back(v);
  }
  return members;
}

bool Subproblem::fpi_is_maximal(const std::vector<ClosureVarId>& fpi) const {
  std::vector<Value> vals(closure_.size(), Value::Unassigned);
  for (ClosureVarId v : fpi) vals[v] = Value::True;
  // Project absent vars to false for the satisfaction check.
  for (ClosureVarId v = 0; v < closure_.size(); ++v) {
    if (vals[v] == Value::Unassigned) vals[v] = Value::False;
  }
  for (ClauseIdx ci : active_) {
    if (!satisfied_under(store_.clause(ci), vals)) return false;
  }
  for (ClosureVarId v : fpi) {
    if (closure_.is_promise_operand(v)) continue;
    vals[v] = Value::False;
    bool still_ok = true;
    for (ClauseIdx ci : active_) {
      if (!satisfied_under(store_.clause(ci), vals)) {
        still_ok = false;
        break;
      }
    }
    vals[v] = Value::True;
    if (still_ok) return false;  // one more switch was possible
  }
  return true;
}

void Subproblem::erase_from_level(std::int32_t level) {
  std::vector<TrailEntry> kept;
  kept.reserve(trail_.size());
  for (const TrailEntry& e : trail_) {
    if (ig_.node(e.node).level >= level) {
      unassign(e);
      ig_.mark_red_dead(e.node);
    } else {
      kept.push_back(e);
    }
  }
  trail_ = std::move(kept);
  std::erase_if(decisions_, [&](const DecisionRec& d) { return d.level >= level; });
}

}  // namespace ltlcore
