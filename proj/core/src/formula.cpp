#include "ltlcore/formula.hpp"

#include <algorithm>
#include <functional>

namespace ltlcore {

bool is_temporal(Kind k) {
  switch (k) {
    case Kind::Next:
    case Kind::Future:
    case Kind::Globally:
    case Kind::Until:
    case Kind::WeakUntil:
      return true;
    default:
      return false;
  }
}

std::size_t FormulaArena::NodeKeyHash::operator()(const NodeKey& k) const {
  std::size_t h = static_cast<std::size_t>(k.kind) * 0x9e3779b97f4a7c15ull + k.name;
  for (FormulaId c : k.children) {
    h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

FormulaArena::FormulaArena() {
  // ids 0 and 1 are pinned to the constants
  nodes_.push_back({Kind::True, 0, {}});
  table_.emplace(NodeKey{Kind::True, 0, {}}, 0);
  nodes_.push_back({Kind::False, 0, {}});
  table_.emplace(NodeKey{Kind::False, 0, {}}, 1);
}

FormulaId FormulaArena::intern(FormulaNode&& n) {
  NodeKey key{n.kind, n.name, n.children};
  auto it = table_.find(key);
  if (it != table_.end()) return it->second;
  FormulaId id = static_cast<FormulaId>(nodes_.size());
  nodes_.push_back(std::move(n));
  table_.emplace(std::move(key), id);
  return id;
}

std::uint32_t FormulaArena::intern_name(std::string_view name) {
  auto it = name_ids_.find(std::string(name));
  if (it != name_ids_.end()) return it->second;
  std::uint32_t idx = static_cast<std::uint32_t>(names_.size());
  names_.emplace_back(name);
  name_ids_.emplace(names_.back(), idx);
  return idx;
}

FormulaId FormulaArena::mk_true() { return 0; }
FormulaId FormulaArena::mk_false() { return 1; }

FormulaId FormulaArena::mk_prop(std::string_view name) {
  return intern({Kind::Prop, intern_name(name), {}});
}

FormulaId FormulaArena::mk_neg_prop(std::string_view name) {
  return intern({Kind::NegProp, intern_name(name), {}});
}

FormulaId FormulaArena::mk_literal_negation(FormulaId f) {
  const FormulaNode& n = nodes_[f];
  switch (n.kind) {
    case Kind::True: return mk_false();
    case Kind::False: return mk_true();
    case Kind::Prop: return intern({Kind::NegProp, n.name, {}});
    case Kind::NegProp: return intern({Kind::Prop, n.name, {}});
    default:
      throw InternalError("mk_literal_negation: not a literal");
  }
}

FormulaId FormulaArena::mk_and(std::vector<FormulaId> children) {
  std::vector<FormulaId> flat;
  flat.reserve(children.size());
  for (FormulaId c : children) {
    if (kind(c) == Kind::And) {
      for (FormulaId g : nodes_[c].children) flat.push_back(g);
    } else if (kind(c) == Kind::True) {
      // unit element
    } else if (kind(c) == Kind::False) {
      return mk_false();
    } else {
      flat.push_back(c);
    }
  }
  if (flat.empty()) return mk_true();
  std::sort(flat.begin(), flat.end());
  if (flat.size() == 1) return flat[0];
  return intern({Kind::And, 0, std::move(flat)});
}

FormulaId FormulaArena::mk_or(std::vector<FormulaId> children) {
  std::vector<FormulaId> flat;
  flat.reserve(children.size());
  for (FormulaId c : children) {
    if (kind(c) == Kind::Or) {
      for (FormulaId g : nodes_[c].children) flat.push_back(g);
    } else if (kind(c) == Kind::False) {
      // unit element
    } else if (kind(c) == Kind::True) {
      return mk_true();
    } else {
      flat.push_back(c);
    }
  }
  if (flat.empty()) return mk_false();
  std::sort(flat.begin(), flat.end());
  if (flat.size() == 1) return flat[0];
  return intern({Kind::Or, 0, std::move(flat)});
}

FormulaId FormulaArena::mk_next(FormulaId f) { return intern({Kind::Next, 0, {f}}); }
FormulaId FormulaArena::mk_future(FormulaId f) { return intern({Kind::Future, 0, {f}}); }
FormulaId FormulaArena::mk_globally(FormulaId f) { return intern({Kind::Globally, 0, {f}}); }
FormulaId FormulaArena::mk_until(FormulaId lhs, FormulaId rhs) {
  return intern({Kind::Until, 0, {lhs, rhs}});
}
FormulaId FormulaArena::mk_weak_until(FormulaId lhs, FormulaId rhs) {
  return intern({Kind::WeakUntil, 0, {lhs, rhs}});
}

const std::string& FormulaArena::prop_name(FormulaId id) const {
  const FormulaNode& n = nodes_[id];
  if (n.kind != Kind::Prop && n.kind != Kind::NegProp) {
    throw InternalError("prop_name: not a proposition");
  }
  return names_[n.name];
}

bool FormulaArena::has_prop(std::string_view name) const {
  return name_ids_.count(std::string(name)) > 0;
}

std::size_t FormulaArena::count_subformulas(FormulaId f) const {
  std::vector<FormulaId> stack{f};
  std::vector<bool> seen(nodes_.size(), false);
  std::size_t count = 0;
  while (!stack.empty()) {
    FormulaId g = stack.back();
    stack.pop_back();
    if (seen[g]) continue;
    seen[g] = true;
    ++count;
    for (FormulaId c : nodes_[g].children) stack.push_back(c);
  }
  return count;
}

std::vector<std::string> FormulaArena::props_of(FormulaId f) const {
  std::vector<FormulaId> stack{f};
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<std::string> out;
  while (!stack.empty()) {
    FormulaId g = stack.back();
    stack.pop_back();
    if (seen[g]) continue;
    seen[g] = true;
    const FormulaNode& n = nodes_[g];
    if (n.kind == Kind::Prop || n.kind == Kind::NegProp) {
      out.push_back(names_[n.name]);
    }
    for (FormulaId c : n.children) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {
// Printer precedence levels; higher binds tighter.
constexpr int kPrecImplies = 1;
constexpr int kPrecOr = 2;
constexpr int kPrecAnd = 3;
constexpr int kPrecUntil = 4;
constexpr int kPrecUnary = 5;
}  // namespace

void FormulaArena::print(FormulaId f, int parent_prec, std::string& out) const {
  const FormulaNode& n = nodes_[f];
  auto wrap = [&](int prec, auto&& body) {
    bool parens = prec < parent_prec;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (n.kind) {
    case Kind::True: out += "true"; return;
    case Kind::False: out += "false"; return;
    case Kind::Prop: out += names_[n.name]; return;
    case Kind::NegProp:
      out += '!';
      out += names_[n.name];
      return;
    case Kind::And:
      wrap(kPrecAnd, [&] {
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          if (i) out += " & ";
          print(n.children[i], kPrecAnd + 1, out);
        }
      });
      return;
    case Kind::Or:
      wrap(kPrecOr, [&] {
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          if (i) out += " | ";
          print(n.children[i], kPrecOr + 1, out);
        }
      });
      return;
    case Kind::Next:
    case Kind::Future:
    case Kind::Globally:
      wrap(kPrecUnary, [&] {
        out += n.kind == Kind::Next ? 'X' : n.kind == Kind::Future ? 'F' : 'G';
        out += ' ';
        print(n.children[0], kPrecUnary, out);
      });
      return;
    case Kind::Until:
    case Kind::WeakUntil:
      wrap(kPrecUntil, [&] {
        // right-associative: left operand needs one level more
        print(n.children[0], kPrecUntil + 1, out);
        out += n.kind == Kind::Until ? " U " : " W ";
        print(n.children[1], kPrecUntil, out);
      });
      return;
  }
}

std::string FormulaArena::to_string(FormulaId f) const {
  std::string out;
  print(f, 0, out);
  return out;
}

FormulaId FormulaArena::import(const FormulaArena& other, FormulaId f) {
  const FormulaNode& n = other.nodes_[f];
  switch (n.kind) {
    case Kind::True: return mk_true();
    case Kind::False: return mk_false();
    case Kind::Prop: return mk_prop(other.names_[n.name]);
    case Kind::NegProp: return mk_neg_prop(other.names_[n.name]);
    default: {
      std::vector<FormulaId> kids;
      kids.reserve(n.children.size());
      for (FormulaId c : n.children) kids.push_back(import(other, c));
      switch (n.kind) {
        case Kind::And: return mk_and(std::move(kids));
        case Kind::Or: return mk_or(std::move(kids));
        case Kind::Next: return mk_next(kids[0]);
        case Kind::Future: return mk_future(kids[0]);
        case Kind::Globally: return mk_globally(kids[0]);
        case Kind::Until: return mk_until(kids[0], kids[1]);
        case Kind::WeakUntil: return mk_weak_until(kids[0], kids[1]);
        default: throw InternalError("import: unreachable");
      }
    }
  }
}

std::unique_ptr<RawNode> RawNode::make(Op op) {
  auto n = std::make_unique<RawNode>();
  n->op = op;
  return n;
}

namespace {

// NNF rewrite, with `neg` tracking whether we are under an odd number of
// negations. Rules: !true->false, !false->true, !!A->A, A->B ~> !A|B,
// !(A&B) ~> !A|!B, !(A|B) ~> !A&!B, !XA ~> X!A, !FA ~> G!A, !GA ~> F!A,
// !(A U B) ~> (!B) W (!A & !B), !(A W B) ~> (!B) U (!A & !B).
FormulaId nnf(const RawNode& r, bool neg, FormulaArena& a) {
  using Op = RawNode::Op;
  switch (r.op) {
    case Op::True: return neg ? a.mk_false() : a.mk_true();
    case Op::False: return neg ? a.mk_true() : a.mk_false();
    case Op::Prop: return neg ? a.mk_neg_prop(r.name) : a.mk_prop(r.name);
    case Op::Not: return nnf(*r.children[0], !neg, a);
    case Op::Implies: {
      FormulaId lhs = nnf(*r.children[0], !neg, a);
      FormulaId rhs = nnf(*r.children[1], neg, a);
      return neg ? a.mk_and({lhs, rhs}) : a.mk_or({lhs, rhs});
    }
    case Op::And: {
      std::vector<FormulaId> kids;
      kids.reserve(r.children.size());
      for (const auto& c : r.children) kids.push_back(nnf(*c, neg, a));
      return neg ? a.mk_or(std::move(kids)) : a.mk_and(std::move(kids));
    }
    case Op::Or: {
      std::vector<FormulaId> kids;
      kids.reserve(r.children.size());
      for (const auto& c : r.children) kids.push_back(nnf(*c, neg, a));
      return neg ? a.mk_and(std::move(kids)) : a.mk_or(std::move(kids));
    }
    case Op::Next: return a.mk_next(nnf(*r.children[0], neg, a));
    case Op::Future: {
      FormulaId c = nnf(*r.children[0], neg, a);
      return neg ? a.mk_globally(c) : a.mk_future(c);
    }
    case Op::Globally: {
      FormulaId c = nnf(*r.children[0], neg, a);
      return neg ? a.mk_future(c) : a.mk_globally(c);
    }
    case Op::Until: {
      FormulaId lhs = nnf(*r.children[0], neg, a);
      FormulaId rhs = nnf(*r.children[1], neg, a);
      if (!neg) return a.mk_until(lhs, rhs);
      return a.mk_weak_until(rhs, a.mk_and({lhs, rhs}));
    }
    case Op::WeakUntil: {
      FormulaId lhs = nnf(*r.children[0], neg, a);
      FormulaId rhs = nnf(*r.children[1], neg, a);
      if (!neg) return a.mk_weak_until(lhs, rhs);
      return a.mk_until(rhs, a.mk_and({lhs, rhs}));
    }
  }
  throw InternalError("nnf: unreachable");
}

}  // namespace

FormulaId to_nnf(const RawNode& raw, FormulaArena& arena) {
  return nnf(raw, false, arena);
}

std::vector<FormulaId> conjuncts(const FormulaArena& arena, FormulaId f) {
  if (arena.kind(f) == Kind::And) return arena.node(f).children;
  return {f};
}

}  // namespace ltlcore
