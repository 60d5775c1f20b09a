#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ltlcore/ruleset.hpp"

namespace ltlcore {

class RulesFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rules file: one `name: formula` per line; `#` comments and blank lines
// ignored; order preserved. Duplicate names and malformed lines raise
// RulesFileError with the offending line number(s).
RuleSet parse_rules_text(std::string_view text, FormulaArena& arena);
RuleSet parse_rules_file(const std::string& path, FormulaArena& arena);

}  // namespace ltlcore
