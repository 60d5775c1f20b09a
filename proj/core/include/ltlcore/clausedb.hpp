#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ltlcore/closure.hpp"
#include "ltlcore/formula.hpp"

namespace ltlcore {

// Literal over closure variables: var<<1 | sign (1 = negated).
using Literal = std::uint32_t;
inline Literal pos_lit(ClosureVarId v) { return v << 1; }
inline Literal neg_lit(ClosureVarId v) { return (v << 1) | 1u; }
inline ClosureVarId lit_var(Literal l) { return l >> 1; }
inline bool lit_negative(Literal l) { return (l & 1u) != 0; }
inline Literal lit_negate(Literal l) { return l ^ 1u; }

enum class Origin : std::uint8_t {
  Presence,
  Unwound,
  Aux,
  LearnedState,
  LearnedTemporal,
  LimitConflict,
};

const char* origin_name(Origin o);

using ClauseIdx = std::uint32_t;
using PrestateId = std::uint32_t;
using RuleIdx = std::uint32_t;

struct Clause {
  std::vector<Literal> lits;  // sorted, duplicate-free, no complementary pair
  Origin origin;
  // Presence/Unwound: the member; Aux: the positive half of the pair;
  // LearnedTemporal: the promise member.
  FormulaId origin_formula = kNoFormula;
  // Rule indices this clause's derivation depends on (empty for Unwound/Aux).
  std::vector<RuleIdx> premises;
  // Reason-only clauses back implication-graph edges but never join the
  // active sets (multi-state limit cuts).
  bool activated = true;
};

struct UnwindResult {
  std::vector<ClauseIdx> presence, ucs, aux;
};

// Permanent clause store: per-prestate unwinding clauses plus learned
// clauses. Learned clauses are never deleted.
class ClauseStore {
 public:
  ClauseStore(FormulaArena& arena, const Closure& closure);

  // Interns the prestate member set; re-registration returns the same id.
  PrestateId register_prestate(const std::vector<ClosureVarId>& members,
                               const std::vector<std::vector<RuleIdx>>& member_premises = {});
  std::optional<PrestateId> find_prestate(const std::vector<ClosureVarId>& members) const;
  const std::vector<ClosureVarId>& prestate_members(PrestateId ps) const;
  const UnwindResult& unwind(PrestateId ps) const { return prestates_[ps].clauses; }
  const std::vector<bool>& state_closure_mask(PrestateId ps) const {
    return prestates_[ps].stcl;
  }

  // Appends c to the permanent store and activates it everywhere its
  // variables fit. Returns nullopt for an empty clause (global UNSAT).
  std::optional<ClauseIdx> add_learned(Clause c);

  // Stores a reason-only clause (origin LimitConflict); never activated.
  ClauseIdx add_reason_clause(Clause c);

  // presence + ucs + aux + activated learned clauses over StCl(ps), in
  // deterministic order. Lazily extends with newly learned clauses.
  const std::vector<ClauseIdx>& clauses_for(PrestateId ps);

  const Clause& clause(ClauseIdx i) const { return clauses_[i]; }
  std::size_t num_clauses() const { return clauses_.size(); }
  std::size_t num_learned() const { return num_learned_; }
  bool empty_clause_seen() const { return empty_clause_seen_; }

  // One clause per line: origin \t literals as [-]x(<formula>).
  void dump(std::ostream& os) const;
  std::string lit_to_string(Literal l) const;

 private:
  ClauseIdx intern(Clause&& c);
  void unwind_prestate(PrestateId ps);

  struct PrestateRec {
    std::vector<ClosureVarId> members;
    std::vector<bool> stcl;
    UnwindResult clauses;
    std::vector<ClauseIdx> active;      // cached clauses_for result
    std::size_t learned_watermark = 0;  // clauses_ scanned so far
  };

  FormulaArena& arena_;
  const Closure& closure_;
  std::vector<Clause> clauses_;
  std::map<std::vector<Literal>, ClauseIdx> intern_;
  std::map<std::vector<ClosureVarId>, PrestateId> prestate_ids_;
  std::vector<PrestateRec> prestates_;
  std::size_t num_learned_ = 0;
  bool empty_clause_seen_ = false;
};

}  // namespace ltlcore
