#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ltlcore/assign.hpp"
#include "ltlcore/clausedb.hpp"
#include "ltlcore/closure.hpp"
#include "ltlcore/conflict.hpp"
#include "ltlcore/impgraph.hpp"
#include "ltlcore/oracle.hpp"
#include "ltlcore/ruleset.hpp"
#include "ltlcore/stats.hpp"

namespace ltlcore {

struct SolverConfig {
  std::uint64_t max_steps = 5'000'000;
  bool learning = true;
  // Runs the structural invariant checks (red acyclicity, limit partition,
  // Tarjan bounds, FPI maximality) at every step.
  bool check_invariants = false;
};

struct Verdict {
  enum class Kind : std::uint8_t { Sat, Unsat, Unknown };
  Kind kind = Kind::Unknown;
  Lasso witness;                           // Sat: validated against eval_lasso
  // Sat: the member sets of the states behind each witness position
  // (prefix then loop), for clause-replay checks.
  std::vector<std::vector<ClosureVarId>> witness_states;
  std::vector<std::string> core;           // Unsat: premise-tracked rule names
  std::vector<std::string> core_theorem;   // Unsat: presence-ancestor rule names
  std::string unknown_reason;
  SearchStats stats;
};

// Conflict-driven depth-first search over fair prime implicants.
class Solver {
 public:
  Solver(FormulaArena& arena, const RuleSet& rules, SolverConfig config = {});
  ~Solver();

  Verdict solve();

  const Closure& closure() const { return *closure_; }
  const ClauseStore& clause_store() const { return *store_; }
  const ImpGraph& graph() const { return *ig_; }

 private:
  struct StateVisit;
  struct Frame;

  enum class Mode : std::uint8_t { Propagate, Rollback };

  Verdict run();
  std::optional<Verdict> step_propagate();
  std::optional<Verdict> step_rollback();
  std::optional<Verdict> handle_is();
  std::optional<Verdict> handle_conflict(std::vector<NodeId> seeds,
                                         std::vector<RuleIdx> extra_premises);
  std::optional<Verdict> resolve_scc_root(std::uint32_t root_sv);
  void spawn_child_frame(std::uint32_t parent_sv);
  void walk_flip(Frame& frame, std::size_t decision_index);
  void void_states_above(std::size_t frame_index, std::size_t sprime_watermark);
  Verdict make_sat_terminal(std::uint32_t terminal_sv);
  Verdict make_sat_scc(std::uint32_t root_sv, const std::vector<std::uint32_t>& segment);
  Verdict make_unsat(const ConflictReport& report);
  Verdict make_unknown(const std::string& reason);
  Valuation valuation_of(std::uint32_t sv) const;
  std::vector<Literal> bind_literals_of(std::uint32_t sv) const;
  std::vector<ClosureVarId> unrealized_promises(const std::vector<ClosureVarId>& members) const;
  void check_invariants_now(const char* where) const;
  void record_edge(std::uint32_t from_sv, std::uint32_t to_sv);

  FormulaArena& arena_;
  const RuleSet& rules_;
  SolverConfig config_;

  std::unique_ptr<Closure> closure_;
  std::unique_ptr<ClauseStore> store_;
  std::unique_ptr<ImpGraph> ig_;

  std::vector<Frame> frames_;
  std::vector<StateVisit> visits_;
  std::vector<std::uint32_t> sprime_;
  std::map<std::vector<ClosureVarId>, std::uint32_t> visited_;
  std::size_t ever_seen_fpis_ = 0;

  std::int32_t decision_counter_ = 0;
  std::int32_t nb_counter_ = 0;
  Mode mode_ = Mode::Propagate;
  SearchStats stats_;
};

// Convenience wrapper: builds a solver context over `rules` and solves.
Verdict solve(FormulaArena& arena, const RuleSet& rules, SolverConfig config = {});

}  // namespace ltlcore
