#pragma once

#include <cstdint>

namespace ltlcore {

struct SearchStats {
  std::uint64_t decisions = 0;
  std::uint64_t propagations = 0;
  std::uint64_t boolean_conflicts = 0;
  std::uint64_t temporal_conflicts = 0;
  std::uint64_t learned_clauses = 0;
  std::uint64_t distinct_fpis = 0;
  std::uint64_t max_stack_depth = 0;
  std::uint64_t steps = 0;
};

}  // namespace ltlcore
