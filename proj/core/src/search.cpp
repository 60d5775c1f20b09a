#include "ltlcore/search.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace ltlcore {

namespace {

std::vector<RuleIdx> merge_rules(const std::vector<RuleIdx>& a, const std::vector<RuleIdx>& b) {
  std::vector<RuleIdx> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<ClosureVarId> intersect_vars(const std::vector<ClosureVarId>& a,
                                         const std::vector<ClosureVarId>& b) {
  std::vector<ClosureVarId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

struct Solver::StateVisit {
  enum class Status : std::uint8_t { OnStack, Pending, Bad, Erased };

  std::vector<ClosureVarId> members;  // sorted FPI
  PrestateId prestate = 0;
  std::int32_t nb = 0, lp = 0, lv = 0;
  std::vector<ClosureVarId> unr_prom;
  bool self_loop = false;
  Status status = Status::OnStack;
  std::vector<SliceId> slices;  // first visit, then revisit slices
  std::vector<std::uint32_t> out_edges;
  std::size_t sprime_pos = 0;
  // Blocking record replayed when the forbidding clause is not active.
  std::vector<Literal> bad_lits;
  std::vector<RuleIdx> bad_premises;
};

struct Solver::Frame {
  PrestateId prestate = 0;
  SliceId slice = kNoSlice;
  std::unique_ptr<Subproblem> sub;
  std::int32_t sv = -1;         // state pushed from this frame's current IS
  std::int32_t parent_sv = -1;  // state whose X-members spawned this prestate
  std::vector<RuleIdx> exhaust_premises;
  std::map<std::int32_t, std::size_t> sprime_mark;  // decision level -> S' size
};

Solver::Solver(FormulaArena& arena, const RuleSet& rules, SolverConfig config)
    : arena_(arena), rules_(rules), config_(config) {}

Solver::~Solver() = default;

Verdict solve(FormulaArena& arena, const RuleSet& rules, SolverConfig config) {
  Solver s(arena, rules, config);
  return s.solve();
}

Verdict Solver::solve() { return run(); }

Verdict Solver::run() {
  // The closure is seeded with the root conjunction and every rule formula
  // (constant folding may have dropped a rule from the root).
  std::vector<FormulaId> seeds{rules_.root};
  for (const Rule& r : rules_.rules) seeds.push_back(r.formula);
  closure_ = std::make_unique<Closure>(arena_, seeds);
  store_ = std::make_unique<ClauseStore>(arena_, *closure_);
  ig_ = std::make_unique<ImpGraph>();

  // Root prestate: one member per rule formula, rule premises attached.
  std::vector<ClosureVarId> members;
  std::vector<std::vector<RuleIdx>> premises;
  for (RuleIdx i = 0; i < rules_.rules.size(); ++i) {
    ClosureVarId v = closure_->var(rules_.rules[i].formula);
    auto it = std::find(members.begin(), members.end(), v);
    if (it == members.end()) {
      members.push_back(v);
      premises.push_back({i});
    } else {
      premises[it - members.begin()].push_back(i);
    }
  }
  PrestateId ps = store_->register_prestate(members, premises);

  Frame root_frame;
  root_frame.prestate = ps;
  root_frame.slice = ig_->new_slice();
  root_frame.sub = std::make_unique<Subproblem>(*closure_, *store_, *ig_, ps, root_frame.slice);
  const UnwindResult& uw = store_->unwind(ps);
  for (std::size_t i = 0; i < members.size(); ++i) {
    root_frame.sub->assume_presence(members[i], kNoNode,
                                    static_cast<std::int32_t>(uw.presence[i]));
  }
  frames_.push_back(std::move(root_frame));
  mode_ = Mode::Propagate;

  for (;;) {
    if (stats_.steps > config_.max_steps) return make_unknown("step limit exceeded");
    std::optional<Verdict> v =
        mode_ == Mode::Propagate ? step_propagate() : step_rollback();
    if (v) {
      v->stats = stats_;
      return *v;
    }
  }
}

std::optional<Verdict> Solver::step_propagate() {
  Frame& f = frames_.back();
  f.sub->refresh_active();
  std::optional<Conflict> conflict = f.sub->propagate(stats_);
  if (config_.check_invariants) check_invariants_now("propagate");
  if (conflict) return handle_conflict(conflict->seeds, {});
  std::optional<Literal> lit = f.sub->pick_decision();
  if (lit) {
    ++decision_counter_;
    f.sprime_mark[decision_counter_] = sprime_.size();
    f.sub->decide(*lit, decision_counter_, 1, stats_);
    return std::nullopt;
  }
  return handle_is();
}

std::vector<ClosureVarId> Solver::unrealized_promises(
    const std::vector<ClosureVarId>& members) const {
  std::vector<ClosureVarId> out;
  for (ClosureVarId v : members) {
    if (!closure_->is_promise(v)) continue;
    ClosureVarId op = closure_->promise_operand(v);
    if (!std::binary_search(members.begin(), members.end(), op)) out.push_back(v);
  }
  return out;
}

std::vector<Literal> Solver::bind_literals_of(std::uint32_t sv) const {
  std::vector<Literal> lits;
  for (ClosureVarId v : visits_[sv].members) {
    if (arena_.kind(closure_->formula(v)) == Kind::Next) lits.push_back(pos_lit(v));
    if (closure_->is_promise(v)) lits.push_back(neg_lit(closure_->promise_operand(v)));
  }
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
  return lits;
}

void Solver::record_edge(std::uint32_t from_sv, std::uint32_t to_sv) {
  auto& edges = visits_[from_sv].out_edges;
  if (std::find(edges.begin(), edges.end(), to_sv) == edges.end()) edges.push_back(to_sv);
}

std::optional<Verdict> Solver::handle_is() {
  Frame& f = frames_.back();
  ++stats_.steps;
  std::vector<ClosureVarId> fpi = f.sub->extract_fpi();
  if (config_.check_invariants && !f.sub->fpi_is_maximal(fpi)) {
    throw InternalError("extracted FPI is not maximal");
  }
  auto it = visited_.find(fpi);
  if (it == visited_.end()) {
    std::uint32_t svid = static_cast<std::uint32_t>(visits_.size());
    StateVisit sv;
    sv.members = fpi;
    sv.prestate = f.prestate;
    sv.nb = sv.lp = sv.lv = ++nb_counter_;
    sv.unr_prom = unrealized_promises(fpi);
    sv.status = StateVisit::Status::OnStack;
    sv.slices = {f.slice};
    sv.sprime_pos = sprime_.size();
    visits_.push_back(std::move(sv));
    visited_.emplace(fpi, svid);
    ++ever_seen_fpis_;
    stats_.distinct_fpis = ever_seen_fpis_;
    f.sv = static_cast<std::int32_t>(svid);
    sprime_.push_back(svid);
    if (f.parent_sv >= 0) record_edge(static_cast<std::uint32_t>(f.parent_sv), svid);
    stats_.max_stack_depth = std::max<std::uint64_t>(stats_.max_stack_depth, frames_.size());

    bool has_next = false;
    for (ClosureVarId v : visits_[svid].members) {
      if (arena_.kind(closure_->formula(v)) == Kind::Next) has_next = true;
    }
    if (!has_next) return make_sat_terminal(svid);
    spawn_child_frame(svid);
    return std::nullopt;
  }

  std::uint32_t t = it->second;
  StateVisit& tv = visits_[t];
  switch (tv.status) {
    case StateVisit::Status::Bad: {
      // Vars absent by non-assignment falsify the blocking clause without a
      // node; the cone runs over the assigned falsifiers.
      std::vector<NodeId> seeds;
      for (Literal l : tv.bad_lits) {
        NodeId n = f.sub->node_of(lit_var(l));
        if (n != kNoNode) seeds.push_back(n);
      }
      if (seeds.empty()) throw InternalError("bad-state hit with no assigned falsifier");
      return handle_conflict(std::move(seeds), tv.bad_premises);
    }
    case StateVisit::Status::OnStack:
    case StateVisit::Status::Pending: {
      tv.slices.push_back(f.slice);
      ig_->black_copies(f.slice);
      ig_->bind(f.slice, tv.slices.front(), bind_literals_of(t));
      if (f.parent_sv >= 0) {
        std::uint32_t p = static_cast<std::uint32_t>(f.parent_sv);
        record_edge(p, t);
        StateVisit& pv = visits_[p];
        if (t == p) pv.self_loop = true;
        if (tv.status == StateVisit::Status::OnStack) {
          pv.lp = std::min(pv.lp, tv.nb);
        } else {
          pv.lv = std::min(pv.lv, tv.nb);
          pv.unr_prom = intersect_vars(pv.unr_prom, tv.unr_prom);
        }
      }
      mode_ = Mode::Rollback;
      return std::nullopt;
    }
    case StateVisit::Status::Erased:
      throw InternalError("erased state still in the visited table");
  }
  return std::nullopt;
}

void Solver::spawn_child_frame(std::uint32_t parent_sv) {
  Frame& f = frames_.back();
  std::vector<std::pair<ClosureVarId, NodeId>> derived;
  for (ClosureVarId v : visits_[parent_sv].members) {
    FormulaId g = closure_->formula(v);
    if (arena_.kind(g) != Kind::Next) continue;
    ClosureVarId child = closure_->var(arena_.node(g).children[0]);
    NodeId parent_node = f.sub->node_of(v);
    if (parent_node == kNoNode) throw InternalError("X-member without a node");
    derived.emplace_back(child, parent_node);
  }
  std::sort(derived.begin(), derived.end());
  derived.erase(std::unique(derived.begin(), derived.end(),
                            [](auto& a, auto& b) { return a.first == b.first; }),
                derived.end());
  std::vector<ClosureVarId> members;
  for (auto& [v, n] : derived) members.push_back(v);
  PrestateId ps = store_->register_prestate(members);

  Frame child;
  child.prestate = ps;
  child.slice = ig_->new_slice();
  child.sub = std::make_unique<Subproblem>(*closure_, *store_, *ig_, ps, child.slice);
  child.parent_sv = static_cast<std::int32_t>(parent_sv);
  for (auto& [v, parent_node] : derived) child.sub->assume_presence(v, parent_node, -1);
  frames_.push_back(std::move(child));
  mode_ = Mode::Propagate;
}

void Solver::walk_flip(Frame& f, std::size_t decision_index) {
  Subproblem::DecisionRec d = f.sub->decisions()[decision_index];
  ig_->black_copies(f.slice);
  f.sub->erase_from_level(d.level);
  for (auto it = f.sprime_mark.lower_bound(d.level); it != f.sprime_mark.end();) {
    it = f.sprime_mark.erase(it);
  }
  ++decision_counter_;
  f.sprime_mark[decision_counter_] = sprime_.size();
  f.sub->decide(lit_negate(d.lit), decision_counter_, 2, stats_);
  mode_ = Mode::Propagate;
}

std::optional<Verdict> Solver::step_rollback() {
  Frame& f = frames_.back();
  const auto& decs = f.sub->decisions();
  for (std::size_t i = decs.size(); i-- > 0;) {
    if (decs[i].flip == 1) {
      walk_flip(f, i);
      return std::nullopt;
    }
  }
  // Frame exhausted: every saturation of this prestate has been explored.
  if (frames_.size() == 1) {
    if (!sprime_.empty()) throw InternalError("pending states under the root prestate");
    // All root states resolved bad without a level-0 conflict.
    ConflictReport report;
    report.conflict_level = 0;
    report.premises = frames_[0].exhaust_premises;
    Verdict v = make_unsat(report);
    v.core_theorem = v.core;
    return v;
  }
  Frame child = std::move(frames_.back());
  frames_.pop_back();
  Frame& pf = frames_.back();
  pf.exhaust_premises = merge_rules(pf.exhaust_premises, child.exhaust_premises);
  if (pf.sv < 0) throw InternalError("pop step without a pushed state");
  std::uint32_t T = static_cast<std::uint32_t>(pf.sv);
  pf.sv = -1;
  StateVisit& tv = visits_[T];
  ig_->black_copies(pf.slice);
  if (config_.check_invariants && (tv.lp > tv.nb || tv.lv > tv.nb)) {
    throw InternalError("Tarjan lowlink exceeds nb");
  }
  if (tv.lp == tv.nb && tv.lv == tv.nb) return resolve_scc_root(T);
  tv.status = StateVisit::Status::Pending;
  if (pf.parent_sv < 0) throw InternalError("root-frame state popped as pending");
  StateVisit& pv = visits_[static_cast<std::uint32_t>(pf.parent_sv)];
  pv.lp = std::min(pv.lp, tv.lp);
  pv.lv = std::min(pv.lv, tv.lv);
  pv.unr_prom = intersect_vars(pv.unr_prom, tv.unr_prom);
  return std::nullopt;
}

std::optional<Verdict> Solver::resolve_scc_root(std::uint32_t root_sv) {
  StateVisit& tv = visits_[root_sv];
  if (tv.sprime_pos >= sprime_.size() || sprime_[tv.sprime_pos] != root_sv) {
    throw InternalError("SCC root lost its S' position");
  }
  std::vector<std::uint32_t> segment(sprime_.begin() + tv.sprime_pos, sprime_.end());
  sprime_.resize(tv.sprime_pos);
  bool cycle = segment.size() > 1 || tv.self_loop;
  Frame& pf = frames_.back();

  if (!cycle) {
    // Trivial component: every continuation of this state was refuted, so
    // its prestate cause set is contradictory on any fair path.
    ++stats_.steps;
    Clause c;
    c.origin = Origin::LimitConflict;
    c.premises = pf.exhaust_premises;
    for (ClosureVarId v : store_->prestate_members(tv.prestate)) c.lits.push_back(neg_lit(v));
    std::sort(c.lits.begin(), c.lits.end());
    tv.status = StateVisit::Status::Bad;
    tv.bad_lits = c.lits;
    tv.bad_premises = c.premises;
    std::vector<NodeId> seeds;
    for (ClosureVarId v : store_->prestate_members(tv.prestate)) {
      NodeId n = pf.sub->node_of(v);
      if (n == kNoNode) throw InternalError("prestate member unassigned at trivial pop");
      seeds.push_back(n);
    }
    std::vector<RuleIdx> premises = c.premises;
    if (config_.learning) {
      if (store_->add_learned(std::move(c))) ++stats_.learned_clauses;
    }
    return handle_conflict(std::move(seeds), premises);
  }

  if (tv.unr_prom.empty()) return make_sat_scc(root_sv, segment);

  // Temporal conflict: the smallest unrealizable promise of the component.
  ++stats_.temporal_conflicts;
  ++stats_.steps;
  // The backward fixpoint chases causes through the live prefix as well;
  // its slices become black history now so premise attribution sees them.
  for (const Frame& fr : frames_) ig_->black_copies(fr.slice);
  FormulaId promise = closure_->formula(tv.unr_prom.front());
  std::vector<SccStateView> views;
  for (std::uint32_t svid : segment) {
    SccStateView view;
    view.slices = visits_[svid].slices;
    view.prestate_members = store_->prestate_members(visits_[svid].prestate);
    view.fpi_members = visits_[svid].members;
    views.push_back(std::move(view));
  }
  TemporalAnalysis ta = analyze_temporal(*ig_, *store_, *closure_, views, promise);
  // The component's doom also rests on every failed exit of its states;
  // those failures accumulated in the enclosing frame's exhaust set.
  std::vector<RuleIdx> full_premises = merge_rules(ta.premises, pf.exhaust_premises);
  if (config_.learning) {
    for (Clause c : ta.learned) {
      c.premises = full_premises;
      if (store_->add_learned(std::move(c))) ++stats_.learned_clauses;
    }
  }
  for (std::size_t i = 0; i < segment.size(); ++i) {
    StateVisit& sv = visits_[segment[i]];
    sv.status = StateVisit::Status::Bad;
    sv.bad_lits = ta.per_state[i].lits;
    sv.bad_premises = full_premises;
  }
  pf.exhaust_premises = merge_rules(pf.exhaust_premises, ta.premises);

  // Classical backtrack seeded at the root's falsified clause; vars absent
  // by non-assignment contribute no node.
  std::vector<NodeId> seeds;
  for (Literal l : ta.per_state[0].lits) {
    NodeId n = pf.sub->node_of(lit_var(l));
    if (n != kNoNode) seeds.push_back(n);
  }
  if (seeds.empty()) throw InternalError("temporal conflict with no assigned falsifier");
  return handle_conflict(std::move(seeds), full_premises);
}

void Solver::void_states_above(std::size_t frame_index, std::size_t sprime_watermark) {
  for (std::size_t i = frame_index; i < frames_.size(); ++i) {
    Frame& fi = frames_[i];
    if (fi.sv >= 0) {
      StateVisit& sv = visits_[static_cast<std::uint32_t>(fi.sv)];
      sv.status = StateVisit::Status::Erased;
      visited_.erase(sv.members);
      fi.sv = -1;
    }
    if (i > frame_index) {
      frames_[frame_index].exhaust_premises =
          merge_rules(frames_[frame_index].exhaust_premises, fi.exhaust_premises);
    }
  }
  for (std::size_t k = sprime_watermark; k < sprime_.size(); ++k) {
    StateVisit& sv = visits_[sprime_[k]];
    if (sv.status != StateVisit::Status::Erased) {
      sv.status = StateVisit::Status::Erased;
      visited_.erase(sv.members);
    }
  }
  sprime_.resize(sprime_watermark);
  frames_.resize(frame_index + 1);
}

std::optional<Verdict> Solver::handle_conflict(std::vector<NodeId> seeds,
                                               std::vector<RuleIdx> extra_premises) {
  ++stats_.boolean_conflicts;
  ++stats_.steps;
  ConflictReport report = analyze_boolean(*ig_, *store_, seeds);
  report.premises = merge_rules(report.premises, extra_premises);
  if (config_.check_invariants) {
    check_invariants_now("conflict");
    for (std::size_t i = 1; i < report.limit.size(); ++i) {
      if (ig_->node(report.limit[i]).level > report.conflict_level - 1) {
        throw InternalError("limit node above conflict level minus one");
      }
    }
  }
  if (report.conflict_level == 0) return make_unsat(report);

  std::optional<Clause> sc = learn_state_clause(*ig_, report);
  if (sc) sc->premises = report.premises;
  std::int32_t reason_idx;
  if (sc && config_.learning) {
    auto idx = store_->add_learned(*sc);
    if (!idx) throw InternalError("state clause learned empty");
    ++stats_.learned_clauses;
    reason_idx = static_cast<std::int32_t>(*idx);
  } else {
    Clause rc;
    rc.premises = report.premises;
    for (NodeId n : report.limit) rc.lits.push_back(lit_negate(ig_->node(n).lit));
    std::sort(rc.lits.begin(), rc.lits.end());
    rc.lits.erase(std::unique(rc.lits.begin(), rc.lits.end()), rc.lits.end());
    reason_idx = static_cast<std::int32_t>(store_->add_reason_clause(std::move(rc)));
  }

  NodeId chosen = report.limit[0];
  const std::int32_t cl = report.conflict_level;
  std::size_t j = frames_.size();
  for (std::size_t i = frames_.size(); i-- > 0;) {
    if (frames_[i].slice == ig_->node(chosen).slice) {
      j = i;
      break;
    }
  }
  if (j == frames_.size()) throw InternalError("conflict-level decision has no live frame");
  Frame& fj = frames_[j];
  auto mark_it = fj.sprime_mark.find(cl);
  if (mark_it == fj.sprime_mark.end()) {
    throw InternalError("conflict-level decision has no S' watermark");
  }
  std::size_t watermark = mark_it->second;
  std::uint8_t branch = ig_->node(chosen).flip;

  // Erased slices stay black history: temporal fixpoints may need to walk
  // through them later.
  for (std::size_t i = j; i < frames_.size(); ++i) ig_->black_copies(frames_[i].slice);
  void_states_above(j, watermark);
  Frame& frame = frames_[j];
  frame.exhaust_premises = merge_rules(frame.exhaust_premises, report.premises);
  frame.sub->erase_from_level(cl);
  for (auto it = frame.sprime_mark.lower_bound(cl); it != frame.sprime_mark.end();) {
    it = frame.sprime_mark.erase(it);
  }

  std::vector<NodeId> limit_rest(report.limit.begin() + 1, report.limit.end());
  if (branch == 1) {
    NodeId flipped = ig_->flip(chosen, frame.slice, limit_rest, reason_idx, /*red=*/true);
    frame.sub->assign_required_node(flipped);
    mode_ = Mode::Propagate;
  } else {
    // Both systematic branches of this slot failed under the same ancestors:
    // record the dependency in black and keep walking down.
    for (NodeId p : limit_rest) {
      if (!ig_->node(p).red_dead) ig_->add_black_edge(p, chosen);
    }
    mode_ = Mode::Rollback;
  }
  if (config_.check_invariants) check_invariants_now("backtrack");
  return std::nullopt;
}

Valuation Solver::valuation_of(std::uint32_t sv) const {
  Valuation val;
  for (ClosureVarId v : visits_[sv].members) {
    FormulaId f = closure_->formula(v);
    if (arena_.kind(f) == Kind::Prop) val.push_back(arena_.prop_name(f));
  }
  std::sort(val.begin(), val.end());
  return val;
}

Verdict Solver::make_sat_terminal(std::uint32_t terminal_sv) {
  Verdict v;
  v.kind = Verdict::Kind::Sat;
  for (std::size_t i = 0; i + 1 < frames_.size(); ++i) {
    std::uint32_t sv = static_cast<std::uint32_t>(frames_[i].sv);
    v.witness.prefix.push_back(valuation_of(sv));
    v.witness_states.push_back(visits_[sv].members);
  }
  v.witness.loop.push_back(valuation_of(terminal_sv));
  v.witness_states.push_back(visits_[terminal_sv].members);
  std::vector<FormulaId> parts;
  for (const Rule& r : rules_.rules) parts.push_back(r.formula);
  if (!eval_lasso(arena_, arena_.mk_and(parts), v.witness, 0)) {
    throw InternalError("terminal witness failed oracle validation");
  }
  return v;
}

Verdict Solver::make_sat_scc(std::uint32_t root_sv, const std::vector<std::uint32_t>& segment) {
  Verdict v;
  v.kind = Verdict::Kind::Sat;
  // Prefix: every stack state strictly below the component root.
  for (std::size_t i = 0; i + 1 < frames_.size(); ++i) {
    std::uint32_t sv = static_cast<std::uint32_t>(frames_[i].sv);
    v.witness.prefix.push_back(valuation_of(sv));
    v.witness_states.push_back(visits_[sv].members);
  }
  // Loop: a closed walk through the whole component.
  std::set<std::uint32_t> members(segment.begin(), segment.end());
  auto bfs = [&](std::uint32_t from, std::uint32_t to) {
    std::map<std::uint32_t, std::int64_t> parent;
    std::vector<std::uint32_t> queue{from};
    parent[from] = -1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      for (std::uint32_t w : visits_[queue[qi]].out_edges) {
        if (!members.count(w) || parent.count(w)) continue;
        parent[w] = queue[qi];
        queue.push_back(w);
      }
    }
    std::vector<std::uint32_t> path;
    if (!parent.count(to)) return path;
    for (std::int64_t at = to; at != -1; at = parent[at]) {
      path.push_back(static_cast<std::uint32_t>(at));
    }
    std::reverse(path.begin(), path.end());
    return path;
  };
  std::vector<std::uint32_t> walk{root_sv};
  for (std::uint32_t m : segment) {
    if (m == walk.back()) continue;
    auto leg = bfs(walk.back(), m);
    if (leg.empty()) throw InternalError("SCC member unreachable inside the component");
    walk.insert(walk.end(), leg.begin() + 1, leg.end());
  }
  if (walk.back() != root_sv) {
    auto leg = bfs(walk.back(), root_sv);
    if (leg.empty()) throw InternalError("SCC root unreachable inside the component");
    walk.insert(walk.end(), leg.begin() + 1, leg.end());
  } else {
    walk.push_back(root_sv);  // single state: traverse its self-loop
  }
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    v.witness.loop.push_back(valuation_of(walk[i]));
    v.witness_states.push_back(visits_[walk[i]].members);
  }
  std::vector<FormulaId> parts;
  for (const Rule& r : rules_.rules) parts.push_back(r.formula);
  if (!eval_lasso(arena_, arena_.mk_and(parts), v.witness, 0)) {
    throw InternalError("SCC witness failed oracle validation");
  }
  return v;
}

Verdict Solver::make_unsat(const ConflictReport& report) {
  Verdict v;
  v.kind = Verdict::Kind::Unsat;
  std::set<RuleIdx> theorem;
  for (NodeId n : report.cone) {
    const IGNode& node = ig_->node(n);
    if (node.reason == ReasonKind::Clause && node.reason_clause >= 0) {
      const Clause& c = store_->clause(static_cast<ClauseIdx>(node.reason_clause));
      if (c.origin == Origin::Presence) {
        theorem.insert(c.premises.begin(), c.premises.end());
      }
    }
  }
  std::set<RuleIdx> tracked = theorem;
  tracked.insert(report.premises.begin(), report.premises.end());
  for (RuleIdx i : theorem) v.core_theorem.push_back(rules_.rules[i].name);
  for (RuleIdx i : tracked) v.core.push_back(rules_.rules[i].name);
  return v;
}

Verdict Solver::make_unknown(const std::string& reason) {
  Verdict v;
  v.kind = Verdict::Kind::Unknown;
  v.unknown_reason = reason;
  v.stats = stats_;
  return v;
}

void Solver::check_invariants_now(const char* where) const {
  if (!ig_->red_is_acyclic()) {
    throw InternalError(std::string("red DAG has a cycle after ") + where);
  }
}

}  // namespace ltlcore
