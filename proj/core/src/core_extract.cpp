#include "ltlcore/core_extract.hpp"

#include <algorithm>

namespace ltlcore {

Verdict::Kind solve_subset(FormulaArena& arena, const RuleSet& rs,
                           const std::vector<std::string>& names, SolverConfig config) {
  std::vector<std::pair<std::string, FormulaId>> subset;
  for (const Rule& r : rs.rules) {
    if (std::find(names.begin(), names.end(), r.name) != names.end()) {
      subset.emplace_back(r.name, r.formula);
    }
  }
  RuleSet sub = RuleSet::from_rules(arena, std::move(subset));
  return solve(arena, sub, config).kind;
}

bool check_core(FormulaArena& arena, const RuleSet& rs, const std::vector<std::string>& names,
                SolverConfig config) {
  return solve_subset(arena, rs, names, config) == Verdict::Kind::Unsat;
}

Core minimize_core(FormulaArena& arena, const RuleSet& rs, const Core& core,
                   SolverConfig config) {
  Core out;
  out.method = Core::Method::Minimized;
  out.rules = core.rules;
  for (const std::string& name : core.rules) {
    std::vector<std::string> candidate;
    for (const std::string& r : out.rules) {
      if (r != name) candidate.push_back(r);
    }
    if (candidate.size() == out.rules.size()) continue;  // already dropped
    if (solve_subset(arena, rs, candidate, config) == Verdict::Kind::Unsat) {
      out.rules = std::move(candidate);
    }
    // Sat or Unknown: the rule stays.
  }
  return out;
}

}  // namespace ltlcore
