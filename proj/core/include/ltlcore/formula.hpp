#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ltlcore {

// Dense handle into a FormulaArena. Structurally equal formulas always
// share one id (hash-consing is total).
using FormulaId = std::uint32_t;
constexpr FormulaId kNoFormula = 0xffffffffu;

enum class Kind : std::uint8_t {
  True,
  False,
  Prop,
  NegProp,
  And,
  Or,
  Next,
  Future,
  Globally,
  Until,
  WeakUntil,
};

bool is_temporal(Kind k);

struct FormulaNode {
  Kind kind;
  std::uint32_t name = 0;              // Prop/NegProp: index into name table
  std::vector<FormulaId> children;     // And/Or: flattened, sorted by id
};

class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Interning store for NNF formulas. Formulas are immutable after creation;
// the table itself is confined to one solver context.
class FormulaArena {
 public:
  FormulaArena();

  FormulaId mk_true();
  FormulaId mk_false();
  FormulaId mk_prop(std::string_view name);
  FormulaId mk_neg_prop(std::string_view name);
  // Negation of a literal-or-constant node (True/False/Prop/NegProp only).
  FormulaId mk_literal_negation(FormulaId f);

  // And/Or flatten nested same-kind children, fold constants, sort children
  // by id and keep duplicates. A list collapsing to fewer than two children
  // returns the unit element or the single child.
  FormulaId mk_and(std::vector<FormulaId> children);
  FormulaId mk_or(std::vector<FormulaId> children);
  FormulaId mk_next(FormulaId f);
  FormulaId mk_future(FormulaId f);
  FormulaId mk_globally(FormulaId f);
  FormulaId mk_until(FormulaId lhs, FormulaId rhs);
  FormulaId mk_weak_until(FormulaId lhs, FormulaId rhs);

  const FormulaNode& node(FormulaId id) const { return nodes_[id]; }
  Kind kind(FormulaId id) const { return nodes_[id].kind; }
  const std::string& prop_name(FormulaId id) const;
  const std::string& name_text(std::uint32_t name_idx) const { return names_[name_idx]; }
  std::size_t size() const { return nodes_.size(); }

  bool has_prop(std::string_view name) const;

  // Number of distinct subformulas reachable from f (including f).
  std::size_t count_subformulas(FormulaId f) const;
  // Distinct proposition names occurring under f, sorted.
  std::vector<std::string> props_of(FormulaId f) const;

  // Canonical printer; its output reparses to the same id.
  std::string to_string(FormulaId f) const;

  // Re-intern a formula from another arena into this one.
  FormulaId import(const FormulaArena& other, FormulaId f);

 private:
  FormulaId intern(FormulaNode&& n);
  std::uint32_t intern_name(std::string_view name);
  void print(FormulaId f, int parent_prec, std::string& out) const;

  struct NodeKey {
    Kind kind;
    std::uint32_t name;
    std::vector<FormulaId> children;
    bool operator==(const NodeKey&) const = default;
  };
  struct NodeKeyHash {
    std::size_t operator()(const NodeKey& k) const;
  };

  std::vector<FormulaNode> nodes_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> name_ids_;
  std::unordered_map<NodeKey, FormulaId, NodeKeyHash> table_;
};

// Pre-NNF syntax tree as produced by the parser. Negation and implication
// are still allowed here; to_nnf consumes it.
struct RawNode {
  enum class Op : std::uint8_t {
    True, False, Prop, Not, Implies, And, Or, Next, Future, Globally, Until, WeakUntil,
  };
  Op op;
  std::string name;  // Prop only
  std::vector<std::unique_ptr<RawNode>> children;
  int line = 0, col = 0;

  static std::unique_ptr<RawNode> make(Op op);
};

// Rewrites raw into NNF using the fixed dualities and interns the result.
FormulaId to_nnf(const RawNode& raw, FormulaArena& arena);

// Top-level And children, or the singleton {f} when f is not a conjunction.
std::vector<FormulaId> conjuncts(const FormulaArena& arena, FormulaId f);

}  // namespace ltlcore
