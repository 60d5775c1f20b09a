#include "ltlcore/closure.hpp"

namespace ltlcore {

void Closure::insert(FormulaId f, std::vector<FormulaId>& work) {
  if (var_of_.count(f)) return;
  var_of_.emplace(f, static_cast<ClosureVarId>(members_.size()));
  members_.push_back(f);
  work.push_back(f);
}

Closure::Closure(FormulaArena& arena, FormulaId root)
    : Closure(arena, std::vector<FormulaId>{root}) {}

Closure::Closure(FormulaArena& arena, const std::vector<FormulaId>& seeds) : arena_(&arena) {
  std::vector<FormulaId> work;
  for (FormulaId seed : seeds) insert(seed, work);
  // Fixed point of the unwinding rules; children visited left to right.
  for (std::size_t i = 0; i < work.size(); ++i) {
    FormulaId f = work[i];
    const FormulaNode& n = arena.node(f);
    switch (n.kind) {
      case Kind::And:
      case Kind::Or:
        for (FormulaId c : n.children) insert(c, work);
        break;
      case Kind::Future:
      case Kind::Globally:
        insert(n.children[0], work);
        insert(arena.mk_next(f), work);
        break;
      case Kind::Until:
      case Kind::WeakUntil: {
        insert(n.children[1], work);
        auto& a = arena;
        insert(a.mk_and({n.children[0], a.mk_next(f)}), work);
        break;
      }
      case Kind::Next:
        insert(n.children[0], work);
        break;
      default:
        break;
    }
  }

  promise_operand_.assign(members_.size(), kNoVar);
  is_operand_.assign(members_.size(), false);
  for (ClosureVarId v = 0; v < members_.size(); ++v) {
    const FormulaNode& n = arena.node(members_[v]);
    FormulaId op = kNoFormula;
    if (n.kind == Kind::Future) op = n.children[0];
    if (n.kind == Kind::Until) op = n.children[1];
    if (op != kNoFormula) {
      promise_operand_[v] = var(op);
      promise_vars_.push_back(v);
      is_operand_[var(op)] = true;
    }
  }
}

ClosureVarId Closure::var(FormulaId f) const {
  auto it = var_of_.find(f);
  if (it == var_of_.end()) throw InternalError("Closure::var: formula not in closure");
  return it->second;
}

std::optional<ClosureVarId> Closure::complement(ClosureVarId v) const {
  const FormulaNode& n = arena_->node(members_[v]);
  if (n.kind != Kind::Prop && n.kind != Kind::NegProp) return std::nullopt;
  FormulaId neg = arena_->mk_literal_negation(members_[v]);
  auto it = var_of_.find(neg);
  if (it == var_of_.end()) return std::nullopt;
  return it->second;
}

std::vector<bool> Closure::state_closure(const std::vector<ClosureVarId>& seed) const {
  std::vector<bool> in(members_.size(), false);
  std::vector<ClosureVarId> work;
  auto add = [&](FormulaId f) {
    ClosureVarId v = var(f);
    if (!in[v]) {
      in[v] = true;
      work.push_back(v);
    }
  };
  for (ClosureVarId v : seed) {
    if (!in[v]) {
      in[v] = true;
      work.push_back(v);
    }
  }
  for (std::size_t i = 0; i < work.size(); ++i) {
    const FormulaNode& n = arena_->node(members_[work[i]]);
    switch (n.kind) {
      case Kind::And:
      case Kind::Or:
        for (FormulaId c : n.children) add(c);
        break;
      case Kind::Future:
      case Kind::Globally:
        add(n.children[0]);
        add(arena_->mk_next(members_[work[i]]));
        break;
      case Kind::Until:
      case Kind::WeakUntil: {
        add(n.children[1]);
        auto* a = arena_;
        add(a->mk_and({n.children[0], a->mk_next(members_[work[i]])}));
        break;
      }
      default:
        // no X rule in the state closure
        break;
    }
  }
  return in;
}

}  // namespace ltlcore
