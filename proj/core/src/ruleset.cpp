#include "ltlcore/ruleset.hpp"

#include <algorithm>

namespace ltlcore {

RuleSet RuleSet::from_rules(FormulaArena& arena,
                            std::vector<std::pair<std::string, FormulaId>> rules) {
  RuleSet rs;
  std::vector<FormulaId> parts;
  for (auto& [name, f] : rules) {
    rs.rules.push_back({name, f, name});
    parts.push_back(f);
  }
  rs.root = arena.mk_and(std::move(parts));
  return rs;
}

const Rule* RuleSet::find(const std::string& name) const {
  for (const Rule& r : rules) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

std::vector<std::string> RuleSet::names() const {
  std::vector<std::string> out;
  out.reserve(rules.size());
  for (const Rule& r : rules) out.push_back(r.name);
  return out;
}

namespace {

struct Translator {
  FormulaArena& arena;
  std::vector<Rule> out;
  int fresh_counter = 0;

  std::string fresh_name() {
    for (;;) {
      std::string candidate = "d" + std::to_string(fresh_counter++) + "_";
      if (!arena.has_prop(candidate)) return candidate;
    }
  }

  // Rewrites f, where `under_temporal` says whether f sits strictly below a
  // temporal operator. Boolean connectives in that position get named; the
  // defining rules land in `out` attributed to `source`.
  FormulaId walk(FormulaId f, bool under_temporal, const std::string& source,
                 const std::string& rule_name, int& def_counter) {
    const FormulaNode& n = arena.node(f);
    switch (n.kind) {
      case Kind::True:
      case Kind::False:
      case Kind::Prop:
      case Kind::NegProp:
        return f;
      case Kind::And:
      case Kind::Or: {
        if (!under_temporal) {
          std::vector<FormulaId> kids;
          for (FormulaId c : n.children) {
            kids.push_back(walk(c, false, source, rule_name, def_counter));
          }
          return n.kind == Kind::And ? arena.mk_and(std::move(kids))
                                     : arena.mk_or(std::move(kids));
        }
        // Name the maximal boolean skeleton: temporal leaves stay intact
        // (each recursively translated on its own).
        FormulaId fresh = arena.mk_prop(fresh_name());
        FormulaId body = skeleton(f, source, rule_name, def_counter);
        if (arena.kind(f) == Kind::And) {
          // G(x => c_j) per conjunct, mirroring the worked form.
          for (FormulaId c : arena.node(body).children) {
            add_def(fresh, c, source, rule_name, def_counter);
          }
        } else {
          add_def(fresh, body, source, rule_name, def_counter);
        }
        return fresh;
      }
      case Kind::Next:
        return arena.mk_next(walk(n.children[0], true, source, rule_name, def_counter));
      case Kind::Future:
        return arena.mk_future(walk(n.children[0], true, source, rule_name, def_counter));
      case Kind::Globally:
        return arena.mk_globally(walk(n.children[0], true, source, rule_name, def_counter));
      case Kind::Until:
        return arena.mk_until(walk(n.children[0], true, source, rule_name, def_counter),
                              walk(n.children[1], true, source, rule_name, def_counter));
      case Kind::WeakUntil:
        return arena.mk_weak_until(walk(n.children[0], true, source, rule_name, def_counter),
                                   walk(n.children[1], true, source, rule_name, def_counter));
    }
    throw InternalError("definitional_translate: unreachable");
  }

  // The boolean skeleton of f with temporal leaves translated in place.
  FormulaId skeleton(FormulaId f, const std::string& source, const std::string& rule_name,
                     int& def_counter) {
    const FormulaNode& n = arena.node(f);
    if (n.kind == Kind::And || n.kind == Kind::Or) {
      std::vector<FormulaId> kids;
      for (FormulaId c : n.children) {
        kids.push_back(skeleton(c, source, rule_name, def_counter));
      }
      return n.kind == Kind::And ? arena.mk_and(std::move(kids)) : arena.mk_or(std::move(kids));
    }
    return walk(f, true, source, rule_name, def_counter);
  }

  // Defining rule G(x => body), in NNF: G(!x | body).
  void add_def(FormulaId fresh, FormulaId body, const std::string& source,
               const std::string& rule_name, int& def_counter) {
    FormulaId neg = arena.mk_neg_prop(arena.prop_name(fresh));
    FormulaId def = arena.mk_globally(arena.mk_or({neg, body}));
    out.push_back({rule_name + ".def" + std::to_string(++def_counter), def, source});
  }
};

}  // namespace

RuleSet definitional_translate(FormulaArena& arena, const RuleSet& rs) {
  Translator tr{arena, {}, 0};
  for (const Rule& r : rs.rules) {
    int def_counter = 0;
    FormulaId rewritten = tr.walk(r.formula, false, r.source, r.name, def_counter);
    tr.out.push_back({r.name, rewritten, r.source});
  }
  // Keep main rules in input order ahead of their defining rules: stable sort
  // is unnecessary since defs were appended during the walk; reorder so the
  // rewritten rule comes first for readability of cores.
  std::vector<Rule> ordered;
  for (const Rule& r : rs.rules) {
    for (const Rule& o : tr.out) {
      if (o.name == r.name) ordered.push_back(o);
    }
    for (const Rule& o : tr.out) {
      if (o.name != r.name && o.name.rfind(r.name + ".def", 0) == 0) {
        ordered.push_back(o);
      }
    }
  }
  std::vector<std::pair<std::string, FormulaId>> pairs;
  pairs.reserve(ordered.size());
  for (const Rule& r : ordered) pairs.emplace_back(r.name, r.formula);
  RuleSet result = RuleSet::from_rules(arena, std::move(pairs));
  for (std::size_t i = 0; i < ordered.size(); ++i) result.rules[i].source = ordered[i].source;
  return result;
}

}  // namespace ltlcore
