#pragma once

#include <string>
#include <vector>

#include "ltlcore/formula.hpp"

namespace ltlcore {

struct Rule {
  std::string name;
  FormulaId formula;
  // Which input rule this one derives from (definitional translation);
  // equals `name` for untranslated rules.
  std::string source;
};

// Named top-level conjuncts plus their conjunction.
struct RuleSet {
  std::vector<Rule> rules;
  FormulaId root = kNoFormula;

  static RuleSet from_rules(FormulaArena& arena,
                            std::vector<std::pair<std::string, FormulaId>> rules);

  const Rule* find(const std::string& name) const;
  std::vector<std::string> names() const;
};

// Structure-preserving translation: each maximal boolean connective strictly
// under a temporal operator is named by a fresh proposition with defining
// rules, so coarse cores of the output match fine-grained cores of the input.
// Each output rule records the input rule it derives from.
RuleSet definitional_translate(FormulaArena& arena, const RuleSet& rs);

}  // namespace ltlcore
