#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ltlcore/formula.hpp"

namespace ltlcore {

// Index into Closure::members; doubles as the solver's boolean variable id.
using ClosureVarId = std::uint32_t;
constexpr ClosureVarId kNoVar = 0xffffffffu;

// The closure Cl(f): every formula reachable from f under the unwinding
// rules, in deterministic insertion order. Promise members are the Future
// and Until elements; the table maps each to its promise operand.
class Closure {
 public:
  Closure(FormulaArena& arena, FormulaId root);
  // Multi-seed form: the union closure of all seeds (constant folding can
  // drop a rule formula from the root conjunction; seeding keeps its var).
  Closure(FormulaArena& arena, const std::vector<FormulaId>& seeds);

  const std::vector<FormulaId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }

  bool contains(FormulaId f) const { return var_of_.count(f) > 0; }
  ClosureVarId var(FormulaId f) const;
  FormulaId formula(ClosureVarId v) const { return members_[v]; }

  // NNF complement var, when both halves of a (p, !p) pair are members.
  std::optional<ClosureVarId> complement(ClosureVarId v) const;

  // Promise accessors. operand(F psi) = psi, operand(psi U chi) = chi.
  bool is_promise(ClosureVarId v) const { return promise_operand_[v] != kNoVar; }
  ClosureVarId promise_operand(ClosureVarId v) const { return promise_operand_[v]; }
  const std::vector<ClosureVarId>& promise_vars() const { return promise_vars_; }
  bool is_promise_operand(ClosureVarId v) const { return is_operand_[v]; }

  const FormulaArena& arena() const { return *arena_; }

  // StCl(S): the state closure of the member set `seed` under the closure
  // rules without the X rule. Returned as a membership mask over var ids.
  std::vector<bool> state_closure(const std::vector<ClosureVarId>& seed) const;

 private:
  void insert(FormulaId f, std::vector<FormulaId>& work);

  FormulaArena* arena_;
  std::vector<FormulaId> members_;
  std::unordered_map<FormulaId, ClosureVarId> var_of_;
  std::vector<ClosureVarId> promise_operand_;  // per member, kNoVar if none
  std::vector<ClosureVarId> promise_vars_;
  std::vector<bool> is_operand_;
};

}  // namespace ltlcore
