#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ltlcore/clausedb.hpp"
#include "ltlcore/closure.hpp"
#include "ltlcore/impgraph.hpp"
#include "ltlcore/stats.hpp"

namespace ltlcore {

enum class Value : std::int8_t { Unassigned = 0, True = 1, False = -1 };

struct Conflict {
  ClauseIdx clause;
  std::vector<NodeId> seeds;  // nodes falsifying the clause
};

// The three-valued assignment of one prestate's SAT subproblem, with
// counter-based clause watching. Satisfaction is strict: a clause is
// satisfied only by a true literal, never by an unassigned one; the FPI
// projection maps Unassigned to absent.
class Subproblem {
 public:
  Subproblem(const Closure& closure, ClauseStore& store, ImpGraph& ig, PrestateId ps,
             SliceId slice);

  PrestateId prestate() const { return prestate_; }
  SliceId slice() const { return slice_; }

  // Pulls any newly active clauses (learned arrivals) into the counters.
  void refresh_active();

  // Pre-assigns a prestate member: root members carry their presence clause
  // as reason; deeper members carry the derivation edge from the parent
  // state's X-member node.
  void assume_presence(ClosureVarId v, NodeId derivation_parent, std::int32_t presence_clause);

  Value value(ClosureVarId v) const { return values_[v]; }
  NodeId node_of(ClosureVarId v) const { return node_of_[v]; }

  // Unit rule to fixpoint. Returns the conflict, or nullopt when quiescent.
  std::optional<Conflict> propagate(SearchStats& stats);

  // Decision heuristic: first unsatisfied disjunctive unwinding clause in
  // clause order, promise-fulfilling literal first, then smallest var; when
  // only other clause kinds are pending, the first of those. nullopt = IS.
  std::optional<Literal> pick_decision() const;

  // Pushes a decision at the given global level. flip = 1 for a first
  // branch, 2 for the systematic second branch of a slot.
  NodeId decide(Literal l, std::int32_t level, std::uint8_t flip, SearchStats& stats);

  // Assigns a literal implied from outside the clause set (conflict flips).
  NodeId assign_required_node(NodeId node);

  // Maximal switching of true non-promise-operand vars to absent, in
  // descending var order, keeping every active clause satisfied.
  std::vector<ClosureVarId> extract_fpi() const;

  // True vars that survive in the FPI; verifies single-switch maximality
  // when check is set (debug invariant).
  bool fpi_is_maximal(const std::vector<ClosureVarId>& fpi) const;

  // Unassigns every trail entry whose node level is >= level; erased nodes
  // leave the live red DAG. Counters stay consistent.
  void erase_from_level(std::int32_t level);

  struct DecisionRec {
    ClosureVarId var;
    Literal lit;
    std::int32_t level;
    NodeId node;
    std::uint8_t flip;
  };
  const std::vector<DecisionRec>& decisions() const { return decisions_; }

  struct TrailEntry {
    Literal lit;
    NodeId node;
  };
  const std::vector<TrailEntry>& trail() const { return trail_; }

  bool all_clauses_satisfied() const;

 private:
  void activate(ClauseIdx c);
  void assign(Literal l, NodeId node);
  void unassign(const TrailEntry& e);
  bool satisfied_under(const Clause& c, const std::vector<Value>& vals) const;

  struct Watch {
    std::uint32_t active_pos;
    bool positive;
  };
  struct Count {
    std::uint16_t n_true = 0, n_false = 0;
  };

  const Closure& closure_;
  ClauseStore& store_;
  ImpGraph& ig_;
  PrestateId prestate_;
  SliceId slice_;

  std::vector<Value> values_;
  std::vector<NodeId> node_of_;
  std::vector<TrailEntry> trail_;
  std::vector<DecisionRec> decisions_;
  std::vector<ClauseIdx> active_;
  std::vector<Count> counts_;
  std::vector<std::vector<Watch>> occ_;
  std::size_t store_seen_ = 0;
};

}  // namespace ltlcore
