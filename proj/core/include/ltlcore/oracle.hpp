#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ltlcore/formula.hpp"

namespace ltlcore {

// One position of an infinite word: the set of propositions that hold.
using Valuation = std::vector<std::string>;

// Ultimately periodic word prefix . loop^omega.
struct Lasso {
  std::vector<Valuation> prefix;
  std::vector<Valuation> loop;  // nonempty

  std::size_t total_len() const { return prefix.size() + loop.size(); }
};

// Exact semantics of f at position pos of the lasso (pos < total_len).
// U/W/F/G are computed by backward fixpoint over the lasso graph.
bool eval_lasso(const FormulaArena& arena, FormulaId f, const Lasso& w, std::size_t pos);

struct OracleResult {
  enum class Kind { Sat, UnsatUpTo, UnsatComplete };
  Kind kind;
  std::optional<Lasso> witness;     // Sat only
  std::uint64_t searched_len = 0;   // UnsatUpTo: lengths fully enumerated
};

struct OracleLimits {
  // UnsatComplete is only claimed when the closure size is at most this.
  std::size_t closure_cap = 16;
  // Lasso evaluations before switching to the exhaustive tableau decider.
  std::uint64_t eval_budget = 200000;
  // Expansion-graph states before the decider gives up.
  std::size_t state_budget = 200000;
};

// Closure size per the unwinding rules, computed locally (the oracle shares
// only the Formula type with the solver).
std::size_t oracle_closure_size(const FormulaArena& arena, FormulaId f);

// 2^{closure size} + 1, saturating; the tableau state-count bound.
std::uint64_t oracle_complete_bound(const FormulaArena& arena, FormulaId f);

// Enumerates lassos with |prefix|+|loop| <= max_len over subsets of f's
// propositions in length-then-lexicographic order and returns the first
// satisfying one. With no witness: UnsatComplete when max_len reaches the
// complete bound (and the closure cap allows), else UnsatUpTo. When the
// enumeration budget runs out, an exhaustive expansion-graph decider
// supplies the same verdict (witnesses found that way may not be the
// enumeration-first lasso).
OracleResult oracle_solve(FormulaArena& arena, FormulaId f, std::uint64_t max_len,
                          const OracleLimits& limits = {});

}  // namespace ltlcore
