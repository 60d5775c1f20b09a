#pragma once

#include <string>
#include <vector>

#include "ltlcore/ruleset.hpp"
#include "ltlcore/search.hpp"

namespace ltlcore {

struct Core {
  enum class Method : std::uint8_t { TheoremLiteral, PremiseTracked, Minimized };
  std::vector<std::string> rules;
  Method method = Method::PremiseTracked;
};

// Re-solves the named subset in a fresh solver context; true iff Unsat.
bool check_core(FormulaArena& arena, const RuleSet& rs, const std::vector<std::string>& names,
                SolverConfig config = {});

// Tri-state form used by minimization: Unknown candidates are kept.
Verdict::Kind solve_subset(FormulaArena& arena, const RuleSet& rs,
                           const std::vector<std::string>& names, SolverConfig config = {});

// Deletion-based minimization over the core's rules in fixed order: a rule
// is dropped iff the remainder still solves Unsat.
Core minimize_core(FormulaArena& arena, const RuleSet& rs, const Core& core,
                   SolverConfig config = {});

}  // namespace ltlcore
