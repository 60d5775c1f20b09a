#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ltlcore/clausedb.hpp"

namespace ltlcore {

using NodeId = std::uint32_t;
using SliceId = std::uint32_t;
constexpr NodeId kNoNode = 0xffffffffu;
constexpr SliceId kNoSlice = 0xffffffffu;

enum class NodeKind : std::uint8_t { Chosen, Required };
enum class ReasonKind : std::uint8_t { Decision, Clause, Derivation };

struct IGNode {
  Literal lit;
  SliceId slice;
  NodeKind kind;
  // Chosen: 1 = first branch, 2 = systematic second branch.
  std::uint8_t flip = 1;
  std::int32_t level = 0;
  ReasonKind reason = ReasonKind::Decision;
  std::int32_t reason_clause = -1;  // ClauseIdx when reason == Clause
  bool red_dead = false;            // erased from the live red DAG
  std::vector<NodeId> red_parents;
  std::vector<NodeId> black_parents;
};

// Bicolor implication graph: the red part is the live reason DAG for the
// DFS stack; the black part records history for temporal fixpoints and may
// contain cycles.
class ImpGraph {
 public:
  SliceId new_slice();
  NodeId add_node(Literal lit, SliceId slice, NodeKind kind, std::int32_t level,
                  ReasonKind reason, std::int32_t reason_clause,
                  std::vector<NodeId> red_parents);

  const IGNode& node(NodeId n) const { return nodes_[n]; }
  IGNode& node_mut(NodeId n) { return nodes_[n]; }
  std::size_t num_nodes() const { return nodes_.size(); }
  const std::vector<NodeId>& slice_nodes(SliceId s) const { return slices_[s]; }

  // Red edges from each antecedent to target; target level raised to the
  // antecedents' maximum (Chosen targets keep their own level).
  void add_red_reason(NodeId target, const std::vector<NodeId>& antecedents);
  void add_black_edge(NodeId from, NodeId to);  // to.black_parents += from

  void mark_red_dead(NodeId n) { nodes_[n].red_dead = true; }

  // Every red edge inside the slice (and into it) gains a black twin.
  // Idempotent.
  void black_copies(SliceId s);

  // Revisit connection: black edges from current-slice nodes carrying a
  // negated promise operand or an X-member of the FPI to the node with the
  // same literal in the old slice.
  void bind(SliceId current, SliceId old, const std::vector<Literal>& bind_literals);

  // All red-reachable live ancestors of the seeds, including the seeds.
  std::vector<NodeId> red_ancestors(const std::vector<NodeId>& seeds) const;

  // Installs ~n as Required with reason edges from the live limit nodes
  // (red on the first branch, black on the second), marks n dead, and
  // returns the new node. The caller erases the level range.
  NodeId flip(NodeId n, SliceId slice, const std::vector<NodeId>& limit_minus_n,
              std::int32_t reason_clause, bool red_edges);

  bool red_is_acyclic() const;

  // Graphviz dump with edge colors.
  void dump_dot(std::ostream& os, const ClauseStore& store) const;

 private:
  std::vector<IGNode> nodes_;
  std::vector<std::vector<NodeId>> slices_;
};

}  // namespace ltlcore
