#include "ltlcore/search.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ltlcore/parser.hpp"
#include "ltlcore/rules_io.hpp"
#include "support/random_formula.hpp"

using namespace ltlcore;

namespace {

RuleSet make_rules(FormulaArena& a, std::vector<std::pair<std::string, std::string>> texts) {
  std::vector<std::pair<std::string, FormulaId>> rules;
  for (auto& [name, text] : texts) rules.emplace_back(name, parse(text, a));
  return RuleSet::from_rules(a, std::move(rules));
}

const char* kRunningExample =
    "r1.a: F(o)\n"
    "r1.b: G(!c)\n"
    "r2.a: G(o -> (F(p) & F(g)))\n"
    "r2.b: (!g) W p\n"
    "r3.a: F(i)\n"
    "r3.b: (!i) W p\n"
    "r3.c: G(p -> G(!i))\n";

const char* kFigureExample =
    "r3.a: F(i)\n"
    "r3.b: (!i) W p\n"
    "r1.b: G(!c)\n"
    "r3.c: G(p -> G(!i))\n";

}  // namespace

TEST(Solve, RunningExampleUnsatWithTheContractConflict) {
  FormulaArena a;
  RuleSet rs = parse_rules_text(kRunningExample, a);
  Verdict v = solve(a, rs);
  ASSERT_EQ(v.kind, Verdict::Kind::Unsat);
  std::set<std::string> core(v.core.begin(), v.core.end());
  std::set<std::string> expected{"r3.a", "r3.b", "r3.c"};
  // Premise-tracked core: a subset of the conflicting rules, superset-safe.
  for (const auto& n : core) EXPECT_TRUE(expected.count(n)) << n;
  EXPECT_EQ(core, expected);
}

TEST(Solve, AtomicRuleIsSat) {
  FormulaArena a;
  RuleSet rs = make_rules(a, {{"r", "p"}});
  Verdict v = solve(a, rs);
  ASSERT_EQ(v.kind, Verdict::Kind::Sat);
  EXPECT_TRUE(v.witness.prefix.empty());
  ASSERT_EQ(v.witness.loop.size(), 1u);
  EXPECT_EQ(v.witness.loop[0], Valuation{"p"});
}

TEST(Solve, TerminalStateForXFreeDisjunction) {
  FormulaArena a;
  RuleSet rs = make_rules(a, {{"r", "p | q"}});
  Verdict v = solve(a, rs);
  ASSERT_EQ(v.kind, Verdict::Kind::Sat);
  EXPECT_EQ(v.stats.max_stack_depth, 1u);
}

TEST(Solve, GloballyVersusEventuallyUnsat) {
  FormulaArena a;
  RuleSet rs = make_rules(a, {{"g", "G(a)"}, {"f", "F(!a)"}});
  Verdict v = solve(a, rs);
  ASSERT_EQ(v.kind, Verdict::Kind::Unsat);
  EXPECT_EQ(v.core, (std::vector<std::string>{"g", "f"}));
  // Independent confirmation at the complete bound.
  OracleLimits limits;
  limits.closure_cap = 50;
  limits.eval_budget = 2000;
  OracleResult r = oracle_solve(a, parse("G(a) & F(!a)", a), UINT64_MAX, limits);
  EXPECT_EQ(r.kind, OracleResult::Kind::UnsatComplete);
}

TEST(Solve, FigureExamplePrunesToAFewStates) {
  FormulaArena a;
  RuleSet rs = parse_rules_text(kFigureExample, a);
  Verdict v = solve(a, rs);
  ASSERT_EQ(v.kind, Verdict::Kind::Unsat);
  EXPECT_LE(v.stats.distinct_fpis, 7u);
  EXPECT_EQ(v.core, (std::vector<std::string>{"r3.a", "r3.b", "r3.c"}));
}

TEST(Solve, FigureTemporalClauseIsLearned) {
  FormulaArena a;
  RuleSet rs = parse_rules_text(kFigureExample, a);
  Solver solver(a, rs);
  Verdict v = solver.solve();
  ASSERT_EQ(v.kind, Verdict::Kind::Unsat);
  const Closure& cl = solver.closure();
  std::vector<Literal> yellow{neg_lit(cl.var(parse("G(!i)", a))),
                              neg_lit(cl.var(parse("F(i)", a)))};
  std::sort(yellow.begin(), yellow.end());
  bool found = false;
  for (std::size_t i = 0; i < solver.clause_store().num_clauses(); ++i) {
    const Clause& c = solver.clause_store().clause(static_cast<ClauseIdx>(i));
    if (c.origin == Origin::LearnedTemporal && c.lits == yellow) found = true;
  }
  EXPECT_TRUE(found) << "expected the conflicting-pair clause to be learned";
}

TEST(Solve, SelfLoopRevisitBindsBlackPath) {
  FormulaArena a;
  RuleSet rs = parse_rules_text(kFigureExample, a);
  Solver solver(a, rs);
  Verdict v = solver.solve();
  ASSERT_EQ(v.kind, Verdict::Kind::Unsat);
  // After the G-state's self-loop revisit, a black path connects a carry
  // node x(X F(i)) to a presence node x(F(i)).
  const ImpGraph& g = solver.graph();
  const Closure& cl = solver.closure();
  Literal carry = pos_lit(cl.var(parse("X(F(i))", a)));
  Literal target = pos_lit(cl.var(parse("F(i)", a)));
  std::set<NodeId> reached;
  std::vector<NodeId> work;
  for (NodeId n = 0; n < g.num_nodes(); ++n) {
    if (g.node(n).lit == carry) {
      reached.insert(n);
      work.push_back(n);
    }
  }
  bool connected = false;
  // Walk forward over black edges: child lists are implicit, so scan.
  while (!work.empty() && !connected) {
    NodeId from = work.back();
    work.pop_back();
    for (NodeId n = 0; n < g.num_nodes(); ++n) {
      const auto& bp = g.node(n).black_parents;
      if (std::find(bp.begin(), bp.end(), from) == bp.end()) continue;
      if (g.node(n).lit == target) connected = true;
      if (reached.insert(n).second) work.push_back(n);
    }
  }
  EXPECT_TRUE(connected);
}

TEST(Solve, FairSelfLoopAfterDroppingTheThirdRule) {
  FormulaArena a;
  RuleSet rs = make_rules(a, {{"r3.a", "F(i)"}, {"r3.b", "(!i) W p"}});
  Verdict v = solve(a, rs);
  ASSERT_EQ(v.kind, Verdict::Kind::Sat);
  EXPECT_TRUE(eval_lasso(a, parse("F(i) & ((!i) W p)", a), v.witness, 0));
}

TEST(Solve, WitnessContainsPromiseAndAvoidsForbidden) {
  FormulaArena a;
  RuleSet rs = make_rules(a, {{"f", "F(i)"}, {"g", "G(!c)"}});
  Verdict v = solve(a, rs);
  ASSERT_EQ(v.kind, Verdict::Kind::Sat);
  bool i_somewhere = false;
  for (const auto& val : v.witness.prefix) {
    i_somewhere |= std::find(val.begin(), val.end(), "i") != val.end();
    EXPECT_EQ(std::find(val.begin(), val.end(), "c"), val.end());
  }
  for (const auto& val : v.witness.loop) {
    i_somewhere |= std::find(val.begin(), val.end(), "i") != val.end();
    EXPECT_EQ(std::find(val.begin(), val.end(), "c"), val.end());
  }
  EXPECT_TRUE(i_somewhere);
}

TEST(Solve, DeterministicAcrossRuns) {
  for (const char* text : {kRunningExample, kFigureExample}) {
    FormulaArena a1, a2;
    RuleSet r1 = parse_rules_text(text, a1);
    RuleSet r2 = parse_rules_text(text, a2);
    Verdict v1 = solve(a1, r1);
    Verdict v2 = solve(a2, r2);
    EXPECT_EQ(v1.kind, v2.kind);
    EXPECT_EQ(v1.core, v2.core);
    EXPECT_EQ(v1.witness.prefix, v2.witness.prefix);
    EXPECT_EQ(v1.witness.loop, v2.witness.loop);
    EXPECT_EQ(v1.stats.decisions, v2.stats.decisions);
    EXPECT_EQ(v1.stats.distinct_fpis, v2.stats.distinct_fpis);
  }
}

TEST(Solve, StepLimitYieldsUnknownNeverAWrongVerdict) {
  FormulaArena a;
  RuleSet rs = parse_rules_text(kRunningExample, a);
  SolverConfig cfg;
  cfg.max_steps = 5;
  Verdict v = solve(a, rs, cfg);
  EXPECT_EQ(v.kind, Verdict::Kind::Unknown);
  EXPECT_FALSE(v.unknown_reason.empty());
}

TEST(Solve, EmptyRuleSetIsSat) {
  FormulaArena a;
  RuleSet rs = RuleSet::from_rules(a, {});
  Verdict v = solve(a, rs);
  ASSERT_EQ(v.kind, Verdict::Kind::Sat);
  ASSERT_EQ(v.witness.loop.size(), 1u);
  EXPECT_TRUE(v.witness.loop[0].empty());
}

TEST(Solve, ConstantRules) {
  FormulaArena a;
  Verdict v1 = solve(a, make_rules(a, {{"t", "true"}}));
  EXPECT_EQ(v1.kind, Verdict::Kind::Sat);
  Verdict v2 = solve(a, make_rules(a, {{"x", "a"}, {"f", "false"}}));
  ASSERT_EQ(v2.kind, Verdict::Kind::Unsat);
  EXPECT_EQ(v2.core, std::vector<std::string>{"f"});
}

TEST(Solve, TemporalConstantOperands) {
  FormulaArena a;
  Verdict v1 = solve(a, make_rules(a, {{"r", "F(false)"}}));
  EXPECT_EQ(v1.kind, Verdict::Kind::Unsat);
  Verdict v2 = solve(a, make_rules(a, {{"r", "G(true) & F(a)"}}));
  EXPECT_EQ(v2.kind, Verdict::Kind::Sat);
  Verdict v3 = solve(a, make_rules(a, {{"r", "a U false"}}));
  EXPECT_EQ(v3.kind, Verdict::Kind::Unsat);
  Verdict v4 = solve(a, make_rules(a, {{"r", "a W false"}}));
  EXPECT_EQ(v4.kind, Verdict::Kind::Sat);
}

TEST(Solve, DistinctFpiCountBoundedByStateSpace) {
  FormulaArena a;
  RuleSet rs = parse_rules_text(kFigureExample, a);
  Solver solver(a, rs);
  Verdict v = solver.solve();
  std::size_t cl = solver.closure().size();
  ASSERT_LT(cl, 63u);
  EXPECT_LE(v.stats.distinct_fpis, 1ull << cl);
}

TEST(Solve, LearningOffMatchesLearningOn) {
  FormulaArena gen;
  std::mt19937 rng(67);
  int done = 0;
  for (int i = 0; i < 120 && done < 60; ++i) {
    FormulaId f = tsupport::random_nnf(gen, rng, 10);
    if (oracle_closure_size(gen, f) > 16) continue;
    std::string text = gen.to_string(f);
    FormulaArena a1, a2;
    RuleSet r1 = make_rules(a1, {{"r", text}});
    RuleSet r2 = make_rules(a2, {{"r", text}});
    SolverConfig on, off;
    off.learning = false;
    Verdict v1 = solve(a1, r1, on);
    Verdict v2 = solve(a2, r2, off);
    ASSERT_EQ(v1.kind, v2.kind) << text;
    ++done;
  }
  EXPECT_GE(done, 50);
}

TEST(Solve, InvariantCheckedRunsStayClean) {
  for (const char* text : {kRunningExample, kFigureExample}) {
    FormulaArena a;
    RuleSet rs = parse_rules_text(text, a);
    SolverConfig cfg;
    cfg.check_invariants = true;
    EXPECT_NO_THROW({
      Verdict v = solve(a, rs, cfg);
      EXPECT_EQ(v.kind, Verdict::Kind::Unsat);
    });
  }
}
