#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ltlcore/formula.hpp"

namespace ltlcore {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, std::string message, std::vector<std::string> expected);

  int line() const { return line_; }
  int col() const { return col_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_, col_;
  std::vector<std::string> expected_;
};

// Parses the LTL grammar into a pre-NNF raw tree. Throws ParseError.
//
// Grammar: propositions [a-z][A-Za-z0-9_]*; literals true/false;
// unary !, X, F, G; binary U, W (right-assoc) above & above | above ->
// (right-assoc); parentheses.
std::unique_ptr<RawNode> parse_raw(std::string_view text);

// parse_raw followed by to_nnf.
FormulaId parse(std::string_view text, FormulaArena& arena);

}  // namespace ltlcore
