#include "ltlcore/impgraph.hpp"

#include <algorithm>
#include <ostream>

namespace ltlcore {

SliceId ImpGraph::new_slice() {
  slices_.emplace_back();
  return static_cast<SliceId>(slices_.size() - 1);
}

NodeId ImpGraph::add_node(Literal lit, SliceId slice, NodeKind kind, std::int32_t level,
                          ReasonKind reason, std::int32_t reason_clause,
                          std::vector<NodeId> red_parents) {
  IGNode n;
  n.lit = lit;
  n.slice = slice;
  n.kind = kind;
  n.reason = reason;
  n.reason_clause = reason_clause;
  n.red_parents = std::move(red_parents);
  if (kind == NodeKind::Chosen) {
    n.level = level;
  } else {
    n.level = 0;
    for (NodeId p : n.red_parents) n.level = std::max(n.level, nodes_[p].level);
    if (n.red_parents.empty()) n.level = level;  // callers pass 0 or a frozen level
  }
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(std::move(n));
  slices_[slice].push_back(id);
  return id;
}

void ImpGraph::add_red_reason(NodeId target, const std::vector<NodeId>& antecedents) {
  IGNode& t = nodes_[target];
  for (NodeId a : antecedents) {
    if (a == kNoNode) throw InternalError("add_red_reason: missing antecedent");
    t.red_parents.push_back(a);
    if (t.kind != NodeKind::Chosen) t.level = std::max(t.level, nodes_[a].level);
  }
}

void ImpGraph::add_black_edge(NodeId from, NodeId to) {
  auto& bp = nodes_[to].black_parents;
  if (std::find(bp.begin(), bp.end(), from) == bp.end()) bp.push_back(from);
}

void ImpGraph::black_copies(SliceId s) {
  for (NodeId n : slices_[s]) {
    for (NodeId p : nodes_[n].red_parents) add_black_edge(p, n);
  }
}

void ImpGraph::bind(SliceId current, SliceId old, const std::vector<Literal>& bind_literals) {
  for (NodeId n : slices_[current]) {
    Literal l = nodes_[n].lit;
    if (std::find(bind_literals.begin(), bind_literals.end(), l) == bind_literals.end()) {
      continue;
    }
    for (NodeId o : slices_[old]) {
      if (nodes_[o].lit == l) {
        add_black_edge(n, o);
        break;
      }
    }
  }
}

std::vector<NodeId> ImpGraph::red_ancestors(const std::vector<NodeId>& seeds) const {
  std::vector<NodeId> out;
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeId> work;
  for (NodeId s : seeds) {
    if (s != kNoNode && !seen[s]) {
      seen[s] = true;
      work.push_back(s);
    }
  }
  while (!work.empty()) {
    NodeId n = work.back();
    work.pop_back();
    out.push_back(n);
    for (NodeId p : nodes_[n].red_parents) {
      if (!seen[p] && !nodes_[p].red_dead) {
        seen[p] = true;
        work.push_back(p);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

NodeId ImpGraph::flip(NodeId n, SliceId slice, const std::vector<NodeId>& limit_minus_n,
                      std::int32_t reason_clause, bool red_edges) {
  IGNode& old = nodes_[n];
  if (old.kind != NodeKind::Chosen) throw InternalError("flip: node is not Chosen");
  Literal flipped = lit_negate(old.lit);
  old.red_dead = true;
  // Level frozen over the whole limit set, dead ancestors included; every
  // such level still names a live decision below the erased range.
  std::int32_t lvl = 0;
  for (NodeId p : limit_minus_n) lvl = std::max(lvl, nodes_[p].level);
  NodeId id;
  if (red_edges) {
    std::vector<NodeId> parents;
    for (NodeId p : limit_minus_n) {
      if (!nodes_[p].red_dead) parents.push_back(p);
    }
    id = add_node(flipped, slice, NodeKind::Required, 0, ReasonKind::Clause, reason_clause,
                  std::move(parents));
  } else {
    id = add_node(flipped, slice, NodeKind::Required, 0, ReasonKind::Clause, reason_clause, {});
    for (NodeId p : limit_minus_n) add_black_edge(p, id);
  }
  nodes_[id].level = std::max(nodes_[id].level, lvl);
  return id;
}

bool ImpGraph::red_is_acyclic() const {
  // Colors: 0 unvisited, 1 on stack, 2 done.
  std::vector<std::uint8_t> color(nodes_.size(), 0);
  std::vector<std::pair<NodeId, std::size_t>> stack;
  for (NodeId start = 0; start < nodes_.size(); ++start) {
    if (color[start] != 0 || nodes_[start].red_dead) continue;
    stack.push_back({start, 0});
    color[start] = 1;
    while (!stack.empty()) {
      auto& [n, i] = stack.back();
      if (i < nodes_[n].red_parents.size()) {
        NodeId p = nodes_[n].red_parents[i++];
        if (nodes_[p].red_dead) continue;
        if (color[p] == 1) return false;
        if (color[p] == 0) {
          color[p] = 1;
          stack.push_back({p, 0});
        }
      } else {
        color[n] = 2;
        stack.pop_back();
      }
    }
  }
  return true;
}

void ImpGraph::dump_dot(std::ostream& os, const ClauseStore& store) const {
  os << "digraph implication_graph {\n";
  os << "  rankdir=TB;\n";
  for (SliceId s = 0; s < slices_.size(); ++s) {
    if (slices_[s].empty()) continue;
    os << "  subgraph cluster_slice" << s << " {\n";
    os << "    label=\"slice " << s << "\";\n";
    for (NodeId n : slices_[s]) {
      const IGNode& node = nodes_[n];
      os << "    n" << n << " [label=\"" << store.lit_to_string(node.lit) << "\\nlvl "
         << node.level << (node.kind == NodeKind::Chosen ? " chosen" : "")
         << (node.red_dead ? " dead" : "") << "\"";
      if (node.kind == NodeKind::Chosen) os << ", peripheries=2";
      os << "];\n";
    }
    os << "  }\n";
  }
  for (NodeId n = 0; n < nodes_.size(); ++n) {
    for (NodeId p : nodes_[n].red_parents) {
      os << "  n" << p << " -> n" << n << " [color=red];\n";
    }
    for (NodeId p : nodes_[n].black_parents) {
      os << "  n" << p << " -> n" << n << " [color=black, style=dashed];\n";
    }
  }
  os << "}\n";
}

}  // namespace ltlcore
