#include "ltlcore/closure.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ltlcore/parser.hpp"
#include "support/random_formula.hpp"

using namespace ltlcore;

TEST(Closure, FutureOfProp) {
  FormulaArena a;
  FormulaId f = parse("F(i)", a);
  Closure cl(a, f);
  std::set<FormulaId> members(cl.members().begin(), cl.members().end());
  std::set<FormulaId> expected{f, parse("i", a), a.mk_next(f)};
  EXPECT_EQ(members, expected);
  ClosureVarId fv = cl.var(f);
  ASSERT_TRUE(cl.is_promise(fv));
  EXPECT_EQ(cl.promise_operand(fv), cl.var(parse("i", a)));
  EXPECT_EQ(cl.promise_vars().size(), 1u);
}

TEST(Closure, WeakUntilCarriesNoPromise) {
  FormulaArena a;
  FormulaId f = parse("(!i) W p", a);
  Closure cl(a, f);
  // Hand-applied fixed point: {(!i)Wp, p, !i & X((!i)Wp), !i, X((!i)Wp)}.
  std::set<FormulaId> members(cl.members().begin(), cl.members().end());
  std::set<FormulaId> expected{f, parse("p", a), parse("!i & X((!i) W p)", a), parse("!i", a),
                               a.mk_next(f)};
  EXPECT_EQ(members, expected);
  EXPECT_TRUE(cl.promise_vars().empty());
}

TEST(Closure, FigureFormulaCoversAllStateLabels) {
  FormulaArena a;
  FormulaId f = parse("F(i) & ((!i) W p) & G(!c) & G(p -> G(!i))", a);
  Closure cl(a, f);
  const char* labels[] = {
      "F(i)",  "X(F(i))",      "G(!c)",          "!c",      "X(G(!c))",
      "(!i) W p", "p",         "!i & X((!i) W p)", "X((!i) W p)",
      "G(p -> G(!i))", "!p | G(!i)", "!p",        "G(!i)",   "!i",
      "X(G(!i))", "X(G(p -> G(!i)))"};
  for (const char* text : labels) {
    EXPECT_TRUE(cl.contains(parse(text, a))) << text;
  }
}

TEST(Closure, ClosedUnderItsOwnRules) {
  FormulaArena a;
  std::mt19937 rng(31);
  for (int i = 0; i < 200; ++i) {
    FormulaId f = tsupport::random_nnf(a, rng, 15);
    Closure cl(a, f);
    std::set<FormulaId> members(cl.members().begin(), cl.members().end());
    for (FormulaId m : cl.members()) {
      Closure inner(a, m);
      for (FormulaId g : inner.members()) {
        EXPECT_TRUE(members.count(g)) << a.to_string(g) << " from " << a.to_string(m);
      }
    }
  }
}

TEST(Closure, SizeLinearInSubformulaCount) {
  FormulaArena a;
  std::mt19937 rng(37);
  for (int i = 0; i < 1000; ++i) {
    FormulaId f = tsupport::random_nnf(a, rng, 40);
    Closure cl(a, f);
    EXPECT_LE(cl.size(), 4 * a.count_subformulas(f)) << a.to_string(f);
  }
}

TEST(Closure, StateClosureSkipsNextUnwrapping) {
  FormulaArena a;
  FormulaId f = parse("F(i)", a);
  Closure cl(a, f);
  // StCl({X F(i)}) keeps the X node opaque.
  auto mask = cl.state_closure({cl.var(a.mk_next(f))});
  EXPECT_TRUE(mask[cl.var(a.mk_next(f))]);
  EXPECT_FALSE(mask[cl.var(f)]);
  EXPECT_FALSE(mask[cl.var(parse("i", a))]);
  // StCl({F(i)}) unwinds the promise but not through X.
  auto mask2 = cl.state_closure({cl.var(f)});
  EXPECT_TRUE(mask2[cl.var(f)]);
  EXPECT_TRUE(mask2[cl.var(parse("i", a))]);
  EXPECT_TRUE(mask2[cl.var(a.mk_next(f))]);
}

TEST(Closure, ComplementPairsAreSurfaceLiteralsOnly) {
  FormulaArena a;
  FormulaId f = parse("(p & F(!p)) | G(q)", a);
  Closure cl(a, f);
  auto comp = cl.complement(cl.var(parse("p", a)));
  ASSERT_TRUE(comp.has_value());
  EXPECT_EQ(*comp, cl.var(parse("!p", a)));
  EXPECT_FALSE(cl.complement(cl.var(parse("G(q)", a))).has_value());
  EXPECT_FALSE(cl.complement(cl.var(parse("q", a))).has_value());  // !q not a member
}

TEST(Closure, MultiSeedKeepsFoldedRules) {
  FormulaArena a;
  FormulaId t = a.mk_true();
  FormulaId g = parse("G(a)", a);
  Closure cl(a, std::vector<FormulaId>{a.mk_and({t, g}), t, g});
  EXPECT_TRUE(cl.contains(t));
  EXPECT_TRUE(cl.contains(g));
}
