#include "ltlcore/rules_io.hpp"

#include <gtest/gtest.h>

#include "ltlcore/parser.hpp"
#include "ltlcore/search.hpp"

using namespace ltlcore;

TEST(RulesFile, SevenLinesInOrder) {
  FormulaArena a;
  RuleSet rs = parse_rules_text(
      "r1.a: F(o)\n"
      "r1.b: G(!c)\n"
      "r2.a: G(o -> (F(p) & F(g)))\n"
      "r2.b: (!g) W p\n"
      "r3.a: F(i)\n"
      "r3.b: (!i) W p\n"
      "r3.c: G(p -> G(!i))\n",
      a);
  ASSERT_EQ(rs.rules.size(), 7u);
  EXPECT_EQ(rs.rules[0].name, "r1.a");
  EXPECT_EQ(rs.rules[6].name, "r3.c");
  EXPECT_EQ(rs.rules[4].formula, parse("F(i)", a));
}

TEST(RulesFile, EmptyFileSolvesSat) {
  FormulaArena a;
  RuleSet rs = parse_rules_text("", a);
  EXPECT_TRUE(rs.rules.empty());
  EXPECT_EQ(rs.root, a.mk_true());
  EXPECT_EQ(solve(a, rs).kind, Verdict::Kind::Sat);
}

TEST(RulesFile, CommentsAndBlankLinesIgnored) {
  FormulaArena a;
  RuleSet rs = parse_rules_text("# header\n\n  \nr: p  # trailing\n", a);
  ASSERT_EQ(rs.rules.size(), 1u);
  EXPECT_EQ(rs.rules[0].formula, parse("p", a));
}

TEST(RulesFile, DuplicateNameNamesBothLines) {
  FormulaArena a;
  try {
    parse_rules_text("r: a\n# gap\nr: b\n", a);
    FAIL() << "expected RulesFileError";
  } catch (const RulesFileError& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("'r'"), std::string::npos);
    EXPECT_NE(msg.find("1"), std::string::npos);
    EXPECT_NE(msg.find("3"), std::string::npos);
  }
}

TEST(RulesFile, MalformedLineReportsNumber) {
  FormulaArena a;
  try {
    parse_rules_text("good: p\nno colon here\n", a);
    FAIL() << "expected RulesFileError";
  } catch (const RulesFileError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(RulesFile, FormulaErrorsCarryTheLine) {
  FormulaArena a;
  try {
    parse_rules_text("r: F(\n", a);
    FAIL() << "expected RulesFileError";
  } catch (const RulesFileError& e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos);
  }
}

TEST(RulesFile, MissingFile) {
  FormulaArena a;
  EXPECT_THROW(parse_rules_file("/nonexistent/path.rules", a), RulesFileError);
}
