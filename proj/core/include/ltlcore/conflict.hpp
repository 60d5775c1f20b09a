#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ltlcore/clausedb.hpp"
#include "ltlcore/closure.hpp"
#include "ltlcore/impgraph.hpp"

namespace ltlcore {

struct ConflictReport {
  enum class Kind : std::uint8_t { Boolean, Temporal };
  Kind kind = Kind::Boolean;
  FormulaId promise = kNoFormula;       // Temporal only
  std::int32_t conflict_level = 0;
  std::vector<NodeId> cone;             // A(C): live red ancestors of the seeds
  std::vector<NodeId> limit;            // Limit(C); limit[0] = N(conflict-level)
  std::vector<NodeId> level0_ancestors; // sources of A(C) when conflict_level == 0
  std::vector<RuleIdx> premises;        // rules the conflict's derivation used
};

// Propositional conflict analysis: the cone over the falsified clause's
// nodes, the conflict level, the limit cut, and premise attribution.
ConflictReport analyze_boolean(const ImpGraph& ig, const ClauseStore& store,
                               const std::vector<NodeId>& seeds);

// The per-state conflict clause recorded while backtracking erases the flip
// state: the negated limit cut, available only when the whole cut lies in
// one slice (cross-state cuts stay edge-only).
std::optional<Clause> learn_state_clause(const ImpGraph& ig, const ConflictReport& report);

// One black slice of one SCC state, as seen by the temporal analysis.
struct SccStateView {
  std::vector<SliceId> slices;               // visit order, oldest first
  std::vector<ClosureVarId> prestate_members;
  std::vector<ClosureVarId> fpi_members;
};

struct TemporalAnalysis {
  std::vector<Clause> learned;     // one clause per SCC state, deduplicated
  std::vector<Clause> per_state;   // aligned with the input SCC views
  std::vector<NodeId> marked;      // the backward fixpoint over black edges
  std::vector<RuleIdx> premises;
  std::size_t fixpoint_rounds = 0;
};

// Alg. 5: seeds the vector with the promise operand's absence across the
// SCC's black slices, runs the inflationary backward fixpoint, and builds
// one learned clause per state from the marked prestate nodes of its most
// recent black slice plus the negated promise.
TemporalAnalysis analyze_temporal(const ImpGraph& ig, const ClauseStore& store,
                                  const Closure& closure,
                                  const std::vector<SccStateView>& scc, FormulaId promise);

}  // namespace ltlcore
