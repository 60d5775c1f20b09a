#pragma once

// Second, deliberately naive lasso evaluator: every temporal operator at
// position i scans the unrolled word up to one full loop beyond
// max(i, |prefix|), where the suffix starts repeating residues. Nested
// operators scan further as needed, so a formula of nesting depth d reads
// at most |prefix| + (d+1)*|loop| positions. Cross-checks the fixpoint
// evaluator in the core library.

#include <algorithm>
#include <string>
#include <vector>

#include "ltlcore/formula.hpp"
#include "ltlcore/oracle.hpp"

namespace ltlcore::tsupport {

class NaiveEval {
 public:
  NaiveEval(const FormulaArena& arena, const Lasso& w) : arena_(arena), w_(w) {}

  bool eval(FormulaId f, std::size_t i) const {
    const FormulaNode& n = arena_.node(f);
    switch (n.kind) {
      case Kind::True: return true;
      case Kind::False: return false;
      case Kind::Prop: return holds(arena_.prop_name(f), i);
      case Kind::NegProp: return !holds(arena_.prop_name(f), i);
      case Kind::And:
        for (FormulaId c : n.children) {
          if (!eval(c, i)) return false;
        }
        return true;
      case Kind::Or:
        for (FormulaId c : n.children) {
          if (eval(c, i)) return true;
        }
        return false;
      case Kind::Next: return eval(n.children[0], i + 1);
      case Kind::Future:
        for (std::size_t j = i; j < scan_end(i); ++j) {
          if (eval(n.children[0], j)) return true;
        }
        return false;
      case Kind::Globally:
        for (std::size_t j = i; j < scan_end(i); ++j) {
          if (!eval(n.children[0], j)) return false;
        }
        return true;
      case Kind::Until:
        for (std::size_t j = i; j < scan_end(i); ++j) {
          if (eval(n.children[1], j)) return true;
          if (!eval(n.children[0], j)) return false;
        }
        return false;
      case Kind::WeakUntil:
        for (std::size_t j = i; j < scan_end(i); ++j) {
          if (eval(n.children[1], j)) return true;
          if (!eval(n.children[0], j)) return false;
        }
        return true;  // lhs held over a full period: it holds forever
    }
    return false;
  }

 private:
  std::size_t scan_end(std::size_t i) const {
    return std::max(i, w_.prefix.size()) + w_.loop.size();
  }

  bool holds(const std::string& name, std::size_t i) const {
    const Valuation& val = i < w_.prefix.size()
                               ? w_.prefix[i]
                               : w_.loop[(i - w_.prefix.size()) % w_.loop.size()];
    return std::find(val.begin(), val.end(), name) != val.end();
  }

  const FormulaArena& arena_;
  const Lasso& w_;
};

inline bool naive_eval(const FormulaArena& arena, FormulaId f, const Lasso& w, std::size_t i) {
  return NaiveEval(arena, w).eval(f, i);
}

// Direct bounded-scan evaluation of a raw (pre-NNF) tree, negation and
// implication included; independent of the NNF rewrite under test.
inline bool raw_eval(const RawNode& r, const Lasso& w, std::size_t i) {
  using Op = RawNode::Op;
  auto holds = [&](const std::string& name, std::size_t j) {
    const Valuation& val =
        j < w.prefix.size() ? w.prefix[j] : w.loop[(j - w.prefix.size()) % w.loop.size()];
    return std::find(val.begin(), val.end(), name) != val.end();
  };
  auto scan_end = [&](std::size_t j) { return std::max(j, w.prefix.size()) + w.loop.size(); };
  switch (r.op) {
    case Op::True: return true;
    case Op::False: return false;
    case Op::Prop: return holds(r.name, i);
    case Op::Not: return !raw_eval(*r.children[0], w, i);
    case Op::Implies:
      return !raw_eval(*r.children[0], w, i) || raw_eval(*r.children[1], w, i);
    case Op::And:
      for (const auto& c : r.children) {
        if (!raw_eval(*c, w, i)) return false;
      }
      return true;
    case Op::Or:
      for (const auto& c : r.children) {
        if (raw_eval(*c, w, i)) return true;
      }
      return false;
    case Op::Next: return raw_eval(*r.children[0], w, i + 1);
    case Op::Future:
      for (std::size_t j = i; j < scan_end(i); ++j) {
        if (raw_eval(*r.children[0], w, j)) return true;
      }
      return false;
    case Op::Globally:
      for (std::size_t j = i; j < scan_end(i); ++j) {
        if (!raw_eval(*r.children[0], w, j)) return false;
      }
      return true;
    case Op::Until:
      for (std::size_t j = i; j < scan_end(i); ++j) {
        if (raw_eval(*r.children[1], w, j)) return true;
        if (!raw_eval(*r.children[0], w, j)) return false;
      }
      return false;
    case Op::WeakUntil:
      for (std::size_t j = i; j < scan_end(i); ++j) {
        if (raw_eval(*r.children[1], w, j)) return true;
        if (!raw_eval(*r.children[0], w, j)) return false;
      }
      return true;
  }
  return false;
}

}  // namespace ltlcore::tsupport
