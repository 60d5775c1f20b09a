#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ltlcore/core_extract.hpp"
#include "ltlcore/oracle.hpp"
#include "ltlcore/ruleset.hpp"
#include "ltlcore/search.hpp"

namespace ltlcore {

struct RunConfig {
  std::string input_path;
  bool show_core = true;
  bool minimize = false;
  bool fine_core = false;
  bool oracle_check = false;
  bool show_stats = false;
  bool json = false;
  std::uint64_t max_steps = 5'000'000;
  std::uint64_t oracle_max_len = 0;  // 0 = the complete bound
  std::size_t oracle_closure_cap = 16;
  std::string dump_graph_path;
  bool check_invariants = false;
};

struct RunOutcome {
  Verdict verdict;
  std::vector<std::string> core;          // reported (tracked or minimized)
  std::vector<std::string> core_theorem;  // the literal presence-ancestor core
  std::vector<std::string> fine_core;     // translated-rule names (fine mode)
  bool core_checked = false;              // check_core passed on `core`
  bool theorem_core_unsat = false;        // recorded, not enforced
  std::optional<bool> oracle_agrees;
  std::string oracle_summary;
  int exit_code = 2;
};

// Full pipeline over an already-parsed rule set: solve, extract/minimize
// cores, optional oracle cross-check.
RunOutcome run_pipeline(FormulaArena& arena, const RuleSet& rules, const RunConfig& cfg);

// Table-style listing: non-core rules rendered as TRUE.
std::string render_core_table(const FormulaArena& arena, const RuleSet& rules,
                              const std::vector<std::string>& core);

std::string outcome_to_json(const RunOutcome& outcome);

}  // namespace ltlcore
