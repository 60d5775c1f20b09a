#include "ltlcore/impgraph.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "ltlcore/parser.hpp"

using namespace ltlcore;

namespace {

Literal lit(int var, bool neg = false) {
  return neg ? neg_lit(static_cast<ClosureVarId>(var)) : pos_lit(static_cast<ClosureVarId>(var));
}

}  // namespace

TEST(Nodes, SourceNodeHasLevelZero) {
  ImpGraph g;
  SliceId s = g.new_slice();
  NodeId n = g.add_node(lit(0), s, NodeKind::Required, 0, ReasonKind::Clause, 3, {});
  EXPECT_EQ(g.node(n).level, 0);
  EXPECT_TRUE(g.node(n).red_parents.empty());
}

TEST(Nodes, RequiredLevelIsMaxOfParents) {
  ImpGraph g;
  SliceId s = g.new_slice();
  NodeId presence = g.add_node(lit(0), s, NodeKind::Required, 0, ReasonKind::Clause, 0, {});
  NodeId chosen = g.add_node(lit(1), s, NodeKind::Chosen, 4, ReasonKind::Decision, -1, {});
  NodeId implied =
      g.add_node(lit(2), s, NodeKind::Required, 0, ReasonKind::Clause, 1, {presence, chosen});
  EXPECT_EQ(g.node(implied).level, 4);
  NodeId late = g.add_node(lit(3), s, NodeKind::Required, 0, ReasonKind::Clause, 2, {presence});
  EXPECT_EQ(g.node(late).level, 0);
  g.add_red_reason(late, {implied});
  EXPECT_EQ(g.node(late).level, 4);
}

TEST(RedAncestors, SeedAloneAndUnions) {
  ImpGraph g;
  SliceId s = g.new_slice();
  NodeId a = g.add_node(lit(0), s, NodeKind::Required, 0, ReasonKind::Clause, 0, {});
  NodeId b = g.add_node(lit(1), s, NodeKind::Chosen, 1, ReasonKind::Decision, -1, {});
  NodeId c = g.add_node(lit(2), s, NodeKind::Required, 0, ReasonKind::Clause, 1, {a, b});
  NodeId d = g.add_node(lit(3), s, NodeKind::Required, 0, ReasonKind::Clause, 2, {});
  auto solo = g.red_ancestors({a});
  EXPECT_EQ(solo, std::vector<NodeId>{a});
  auto cone = g.red_ancestors({c});
  EXPECT_EQ(cone, (std::vector<NodeId>{a, b, c}));
  auto uni = g.red_ancestors({c, d});
  EXPECT_EQ(uni, (std::vector<NodeId>{a, b, c, d}));
}

TEST(Flip, FirstFlipInstallsRequiredWithRedReasons) {
  ImpGraph g;
  SliceId s = g.new_slice();
  NodeId r1 = g.add_node(lit(0), s, NodeKind::Required, 0, ReasonKind::Clause, 0, {});
  NodeId n = g.add_node(lit(1), s, NodeKind::Chosen, 2, ReasonKind::Decision, -1, {});
  NodeId implied = g.add_node(lit(2), s, NodeKind::Required, 0, ReasonKind::Clause, 1, {n});
  (void)implied;
  NodeId flipped = g.flip(n, s, {r1}, 7, /*red=*/true);
  EXPECT_TRUE(g.node(n).red_dead);
  EXPECT_EQ(g.node(flipped).lit, lit(1, true));
  EXPECT_EQ(g.node(flipped).kind, NodeKind::Required);
  EXPECT_EQ(g.node(flipped).red_parents, std::vector<NodeId>{r1});
  EXPECT_EQ(g.node(flipped).level, 0);
  EXPECT_EQ(g.node(flipped).reason_clause, 7);
}

TEST(Flip, EmptyLimitGivesLevelZero) {
  ImpGraph g;
  SliceId s = g.new_slice();
  NodeId n = g.add_node(lit(0), s, NodeKind::Chosen, 1, ReasonKind::Decision, -1, {});
  NodeId flipped = g.flip(n, s, {}, -1, true);
  EXPECT_EQ(g.node(flipped).level, 0);
}

TEST(Flip, SecondBranchEdgesAreBlack) {
  ImpGraph g;
  SliceId s = g.new_slice();
  NodeId r1 = g.add_node(lit(0), s, NodeKind::Required, 0, ReasonKind::Clause, 0, {});
  NodeId n = g.add_node(lit(1), s, NodeKind::Chosen, 3, ReasonKind::Decision, -1, {});
  NodeId flipped = g.flip(n, s, {r1}, -1, /*red=*/false);
  EXPECT_TRUE(g.node(flipped).red_parents.empty());
  EXPECT_EQ(g.node(flipped).black_parents, std::vector<NodeId>{r1});
  EXPECT_EQ(g.node(flipped).kind, NodeKind::Required);
}

TEST(BlackCopies, GrowsByRedEdgeCountAndIsIdempotent) {
  ImpGraph g;
  SliceId s = g.new_slice();
  NodeId a = g.add_node(lit(0), s, NodeKind::Required, 0, ReasonKind::Clause, 0, {});
  NodeId b = g.add_node(lit(1), s, NodeKind::Required, 0, ReasonKind::Clause, 1, {a});
  NodeId c = g.add_node(lit(2), s, NodeKind::Required, 0, ReasonKind::Clause, 2, {a, b});
  g.add_black_edge(a, c);  // pre-existing twin
  auto count_black = [&] {
    std::size_t k = 0;
    for (NodeId n = 0; n < g.num_nodes(); ++n) k += g.node(n).black_parents.size();
    return k;
  };
  std::size_t before = count_black();
  g.black_copies(s);
  EXPECT_EQ(count_black(), before + 2);  // a->b and b->c; a->c already present
  g.black_copies(s);
  EXPECT_EQ(count_black(), before + 2);
}

TEST(Bind, SameLiteralAcrossSlices) {
  ImpGraph g;
  SliceId old_slice = g.new_slice();
  SliceId cur = g.new_slice();
  NodeId old_x = g.add_node(lit(5), old_slice, NodeKind::Required, 0, ReasonKind::Clause, 0, {});
  NodeId old_other =
      g.add_node(lit(6), old_slice, NodeKind::Required, 0, ReasonKind::Clause, 0, {});
  NodeId cur_x = g.add_node(lit(5), cur, NodeKind::Required, 0, ReasonKind::Clause, 1, {});
  NodeId cur_neg = g.add_node(lit(7, true), cur, NodeKind::Required, 0, ReasonKind::Clause, 1, {});
  NodeId old_neg =
      g.add_node(lit(7, true), old_slice, NodeKind::Required, 0, ReasonKind::Clause, 0, {});
  g.bind(cur, old_slice, {lit(5), lit(7, true)});
  EXPECT_EQ(g.node(old_x).black_parents, std::vector<NodeId>{cur_x});
  EXPECT_EQ(g.node(old_neg).black_parents, std::vector<NodeId>{cur_neg});
  EXPECT_TRUE(g.node(old_other).black_parents.empty());
  // A revisit with no X-members and no promises adds nothing.
  std::size_t before = 0;
  for (NodeId n = 0; n < g.num_nodes(); ++n) before += g.node(n).black_parents.size();
  g.bind(cur, old_slice, {});
  std::size_t after = 0;
  for (NodeId n = 0; n < g.num_nodes(); ++n) after += g.node(n).black_parents.size();
  EXPECT_EQ(before, after);
}

TEST(Invariants, RedStaysAcyclic) {
  ImpGraph g;
  SliceId s = g.new_slice();
  NodeId a = g.add_node(lit(0), s, NodeKind::Required, 0, ReasonKind::Clause, 0, {});
  NodeId b = g.add_node(lit(1), s, NodeKind::Required, 0, ReasonKind::Clause, 1, {a});
  EXPECT_TRUE(g.red_is_acyclic());
  g.add_red_reason(a, {b});  // manufactured cycle
  EXPECT_FALSE(g.red_is_acyclic());
  g.mark_red_dead(b);  // dead nodes leave the live red DAG
  EXPECT_TRUE(g.red_is_acyclic());
}

TEST(Dump, EmitsColoredEdges) {
  FormulaArena arena;
  FormulaId f = parse("p", arena);
  Closure cl(arena, f);
  ClauseStore store(arena, cl);
  ImpGraph g;
  SliceId s = g.new_slice();
  NodeId a = g.add_node(pos_lit(cl.var(f)), s, NodeKind::Required, 0, ReasonKind::Clause, 0, {});
  NodeId b =
      g.add_node(neg_lit(cl.var(f)), s, NodeKind::Chosen, 1, ReasonKind::Decision, -1, {});
  g.add_red_reason(b, {a});
  g.add_black_edge(a, b);
  std::ostringstream os;
  g.dump_dot(os, store);
  std::string text = os.str();
  EXPECT_NE(text.find("digraph"), std::string::npos);
  EXPECT_NE(text.find("color=red"), std::string::npos);
  EXPECT_NE(text.find("color=black"), std::string::npos);
  EXPECT_NE(text.find("x(p)"), std::string::npos);
}
