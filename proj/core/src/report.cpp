#include "ltlcore/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace ltlcore {

namespace {

std::vector<std::string> map_back(const RuleSet& translated,
                                  const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const std::string& n : names) {
    const Rule* r = translated.find(n);
    std::string src = r ? r->source : n;
    if (std::find(out.begin(), out.end(), src) == out.end()) out.push_back(src);
  }
  return out;
}

}  // namespace

RunOutcome run_pipeline(FormulaArena& arena, const RuleSet& rules, const RunConfig& cfg) {
  RunOutcome out;
  SolverConfig scfg;
  scfg.max_steps = cfg.max_steps;
  scfg.check_invariants = cfg.check_invariants;

  const RuleSet* target = &rules;
  RuleSet translated;
  if (cfg.fine_core) {
    translated = definitional_translate(arena, rules);
    target = &translated;
  }

  out.verdict = solve(arena, *target, scfg);
  switch (out.verdict.kind) {
    case Verdict::Kind::Sat: out.exit_code = 0; break;
    case Verdict::Kind::Unsat: out.exit_code = 1; break;
    case Verdict::Kind::Unknown: out.exit_code = 2; break;
  }

  if (out.verdict.kind == Verdict::Kind::Unsat) {
    std::vector<std::string> core = out.verdict.core;
    if (cfg.minimize) {
      Core c;
      c.rules = core;
      core = minimize_core(arena, *target, c, scfg).rules;
    }
    if (cfg.fine_core) {
      out.fine_core = core;
      out.core = map_back(translated, core);
      out.core_theorem = map_back(translated, out.verdict.core_theorem);
      // Soundness gate runs against the original rule set.
      out.core_checked = check_core(arena, rules, out.core, scfg);
      out.theorem_core_unsat = check_core(arena, rules, out.core_theorem, scfg);
    } else {
      out.core = core;
      out.core_theorem = out.verdict.core_theorem;
      out.core_checked = check_core(arena, *target, out.core, scfg);
      out.theorem_core_unsat = check_core(arena, *target, out.core_theorem, scfg);
    }
  }

  if (cfg.oracle_check && out.verdict.kind != Verdict::Kind::Unknown) {
    std::vector<FormulaId> parts;
    for (const Rule& r : rules.rules) parts.push_back(r.formula);
    FormulaId root = arena.mk_and(parts);
    OracleLimits limits;
    limits.closure_cap = cfg.oracle_closure_cap;
    std::uint64_t bound = oracle_complete_bound(arena, root);
    std::uint64_t max_len = cfg.oracle_max_len ? cfg.oracle_max_len : bound;
    std::size_t cl = oracle_closure_size(arena, root);
    if (cl > limits.closure_cap) {
      out.oracle_summary = "oracle: closure size " + std::to_string(cl) +
                           " above cap; verdict not independently confirmed";
    }
    OracleResult res = oracle_solve(arena, root, max_len, limits);
    switch (res.kind) {
      case OracleResult::Kind::Sat:
        out.oracle_agrees = out.verdict.kind == Verdict::Kind::Sat;
        out.oracle_summary = "oracle: sat";
        break;
      case OracleResult::Kind::UnsatComplete:
        out.oracle_agrees = out.verdict.kind == Verdict::Kind::Unsat;
        out.oracle_summary = "oracle: unsat (complete)";
        break;
      case OracleResult::Kind::UnsatUpTo:
        out.oracle_summary =
            "oracle: no witness up to length " + std::to_string(res.searched_len) +
            " (incomplete)";
        if (out.verdict.kind == Verdict::Kind::Sat) out.oracle_agrees = false;
        break;
    }
    if (out.oracle_agrees.has_value() && !*out.oracle_agrees) out.exit_code = 2;
  }
  return out;
}

std::string render_core_table(const FormulaArena& arena, const RuleSet& rules,
                              const std::vector<std::string>& core) {
  std::ostringstream os;
  std::size_t width = 4;
  for (const Rule& r : rules.rules) width = std::max(width, r.name.size());
  for (const Rule& r : rules.rules) {
    bool in_core = std::find(core.begin(), core.end(), r.name) != core.end();
    os << r.name << std::string(width - r.name.size() + 2, ' ')
       << (in_core ? arena.to_string(r.formula) : "TRUE") << '\n';
  }
  return os.str();
}

std::string outcome_to_json(const RunOutcome& outcome) {
  nlohmann::json j;
  switch (outcome.verdict.kind) {
    case Verdict::Kind::Sat: j["result"] = "sat"; break;
    case Verdict::Kind::Unsat: j["result"] = "unsat"; break;
    case Verdict::Kind::Unknown: j["result"] = "unknown"; break;
  }
  j["core"] = outcome.core;
  j["core_theorem"] = outcome.core_theorem;
  nlohmann::json witness;
  witness["prefix"] = outcome.verdict.witness.prefix;
  witness["loop"] = outcome.verdict.witness.loop;
  j["witness"] = witness;
  const SearchStats& s = outcome.verdict.stats;
  j["stats"] = {
      {"decisions", s.decisions},
      {"propagations", s.propagations},
      {"boolean_conflicts", s.boolean_conflicts},
      {"temporal_conflicts", s.temporal_conflicts},
      {"learned_clauses", s.learned_clauses},
      {"distinct_fpis", s.distinct_fpis},
      {"max_stack_depth", s.max_stack_depth},
      {"steps", s.steps},
  };
  return j.dump();
}

}  // namespace ltlcore
