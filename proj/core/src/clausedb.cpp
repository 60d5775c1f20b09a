#include "ltlcore/clausedb.hpp"

#include <algorithm>
#include <ostream>

namespace ltlcore {

const char* origin_name(Origin o) {
  switch (o) {
    case Origin::Presence: return "presence";
    case Origin::Unwound: return "unwound";
    case Origin::Aux: return "aux";
    case Origin::LearnedState: return "learned-state";
    case Origin::LearnedTemporal: return "learned-temporal";
    case Origin::LimitConflict: return "limit-conflict";
  }
  return "?";
}

ClauseStore::ClauseStore(FormulaArena& arena, const Closure& closure)
    : arena_(arena), closure_(closure) {}

ClauseIdx ClauseStore::intern(Clause&& c) {
  std::sort(c.lits.begin(), c.lits.end());
  c.lits.erase(std::unique(c.lits.begin(), c.lits.end()), c.lits.end());
  std::sort(c.premises.begin(), c.premises.end());
  c.premises.erase(std::unique(c.premises.begin(), c.premises.end()), c.premises.end());
  auto it = intern_.find(c.lits);
  if (it != intern_.end()) {
    // Same literal set: merge premise attribution, keep the first origin.
    Clause& existing = clauses_[it->second];
    std::vector<RuleIdx> merged;
    std::set_union(existing.premises.begin(), existing.premises.end(), c.premises.begin(),
                   c.premises.end(), std::back_inserter(merged));
    existing.premises = std::move(merged);
    return it->second;
  }
  ClauseIdx idx = static_cast<ClauseIdx>(clauses_.size());
  intern_.emplace(c.lits, idx);
  clauses_.push_back(std::move(c));
  return idx;
}

PrestateId ClauseStore::register_prestate(const std::vector<ClosureVarId>& members,
                                          const std::vector<std::vector<RuleIdx>>& premises) {
  std::vector<ClosureVarId> key = members;
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  auto it = prestate_ids_.find(key);
  if (it != prestate_ids_.end()) return it->second;
  PrestateId id = static_cast<PrestateId>(prestates_.size());
  prestate_ids_.emplace(key, id);
  PrestateRec rec;
  rec.members = members;  // caller order preserved for clause generation
  rec.stcl = closure_.state_closure(members);
  prestates_.push_back(std::move(rec));
  // Presence units first, in member order, carrying rule attribution.
  for (std::size_t i = 0; i < members.size(); ++i) {
    Clause c;
    c.lits = {pos_lit(members[i])};
    c.origin = Origin::Presence;
    c.origin_formula = closure_.formula(members[i]);
    if (i < premises.size()) c.premises = premises[i];
    prestates_[id].clauses.presence.push_back(intern(std::move(c)));
  }
  unwind_prestate(id);
  return id;
}

std::optional<PrestateId> ClauseStore::find_prestate(
    const std::vector<ClosureVarId>& members) const {
  std::vector<ClosureVarId> key = members;
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  auto it = prestate_ids_.find(key);
  if (it == prestate_ids_.end()) return std::nullopt;
  return it->second;
}

const std::vector<ClosureVarId>& ClauseStore::prestate_members(PrestateId ps) const {
  return prestates_[ps].members;
}

void ClauseStore::unwind_prestate(PrestateId ps) {
  PrestateRec& rec = prestates_[ps];
  // Fixed point over the state closure of the prestate, members first.
  std::vector<ClosureVarId> work = rec.members;
  std::vector<bool> seen(closure_.size(), false);
  for (ClosureVarId v : work) seen[v] = true;
  auto push = [&](FormulaId f) {
    ClosureVarId v = closure_.var(f);
    if (!seen[v]) {
      seen[v] = true;
      work.push_back(v);
    }
    return v;
  };
  for (std::size_t i = 0; i < work.size(); ++i) {
    ClosureVarId v = work[i];
    FormulaId f = closure_.formula(v);
    const FormulaNode& n = arena_.node(f);
    auto emit = [&](std::vector<Literal> lits) {
      Clause c;
      c.lits = std::move(lits);
      c.origin = Origin::Unwound;
      c.origin_formula = f;
      ClauseIdx idx = intern(std::move(c));
      if (std::find(rec.clauses.ucs.begin(), rec.clauses.ucs.end(), idx) ==
          rec.clauses.ucs.end()) {
        rec.clauses.ucs.push_back(idx);
      }
    };
    switch (n.kind) {
      case Kind::And:
        for (FormulaId c : n.children) emit({neg_lit(v), pos_lit(push(c))});
        break;
      case Kind::Or: {
        std::vector<Literal> lits{neg_lit(v)};
        for (FormulaId c : n.children) lits.push_back(pos_lit(push(c)));
        emit(std::move(lits));
        break;
      }
      case Kind::Future: {
        ClosureVarId operand = push(n.children[0]);
        ClosureVarId carry = push(arena_.mk_next(f));
        emit({neg_lit(v), pos_lit(operand), pos_lit(carry)});
        break;
      }
      case Kind::Globally: {
        ClosureVarId operand = push(n.children[0]);
        ClosureVarId carry = push(arena_.mk_next(f));
        emit({neg_lit(v), pos_lit(operand)});
        emit({neg_lit(v), pos_lit(carry)});
        break;
      }
      case Kind::Until:
      case Kind::WeakUntil: {
        ClosureVarId rhs = push(n.children[1]);
        ClosureVarId conj = push(arena_.mk_and({n.children[0], arena_.mk_next(f)}));
        emit({neg_lit(v), pos_lit(rhs), pos_lit(conj)});
        break;
      }
      case Kind::False: {
        // A state containing false is conflicting.
        Clause c;
        c.lits = {neg_lit(v)};
        c.origin = Origin::Aux;
        c.origin_formula = f;
        ClauseIdx idx = intern(std::move(c));
        if (std::find(rec.clauses.aux.begin(), rec.clauses.aux.end(), idx) ==
            rec.clauses.aux.end()) {
          rec.clauses.aux.push_back(idx);
        }
        break;
      }
      default:
        break;
    }
  }
  // Complementary-pair exclusions for every prop literal reached whose NNF
  // complement exists anywhere in the closure.
  for (ClosureVarId v : work) {
    auto comp = closure_.complement(v);
    if (!comp) continue;
    if (arena_.kind(closure_.formula(v)) != Kind::Prop) continue;  // one per pair
    Clause c;
    c.lits = {neg_lit(v), neg_lit(*comp)};
    c.origin = Origin::Aux;
    c.origin_formula = closure_.formula(v);
    ClauseIdx idx = intern(std::move(c));
    if (std::find(rec.clauses.aux.begin(), rec.clauses.aux.end(), idx) ==
        rec.clauses.aux.end()) {
      rec.clauses.aux.push_back(idx);
    }
  }
}

std::optional<ClauseIdx> ClauseStore::add_learned(Clause c) {
  if (c.origin != Origin::LearnedState && c.origin != Origin::LearnedTemporal &&
      c.origin != Origin::LimitConflict) {
    throw InternalError("add_learned: origin must be a learned kind");
  }
  if (c.lits.empty()) {
    empty_clause_seen_ = true;
    return std::nullopt;
  }
  c.activated = true;
  ClauseIdx idx = intern(std::move(c));
  ++num_learned_;
  return idx;
}

ClauseIdx ClauseStore::add_reason_clause(Clause c) {
  c.activated = false;
  c.origin = Origin::LimitConflict;
  // Reason-only clauses bypass interning so they never collide with an
  // activated clause carrying the same literal set.
  ClauseIdx idx = static_cast<ClauseIdx>(clauses_.size());
  clauses_.push_back(std::move(c));
  return idx;
}

const std::vector<ClauseIdx>& ClauseStore::clauses_for(PrestateId ps) {
  PrestateRec& rec = prestates_[ps];
  if (rec.active.empty()) {
    rec.active.insert(rec.active.end(), rec.clauses.presence.begin(),
                      rec.clauses.presence.end());
    rec.active.insert(rec.active.end(), rec.clauses.ucs.begin(), rec.clauses.ucs.end());
    rec.active.insert(rec.active.end(), rec.clauses.aux.begin(), rec.clauses.aux.end());
  }
  // Newly learned clauses whose variables all lie in StCl(ps).
  for (; rec.learned_watermark < clauses_.size(); ++rec.learned_watermark) {
    const Clause& c = clauses_[rec.learned_watermark];
    if (!c.activated) continue;
    if (c.origin != Origin::LearnedState && c.origin != Origin::LearnedTemporal &&
        c.origin != Origin::LimitConflict) {
      continue;
    }
    bool fits = true;
    for (Literal l : c.lits) {
      if (!rec.stcl[lit_var(l)]) {
        fits = false;
        break;
      }
    }
    if (fits) rec.active.push_back(static_cast<ClauseIdx>(rec.learned_watermark));
  }
  return rec.active;
}

std::string ClauseStore::lit_to_string(Literal l) const {
  std::string out = lit_negative(l) ? "-x(" : "x(";
  out += arena_.to_string(closure_.formula(lit_var(l)));
  out += ')';
  return out;
}

void ClauseStore::dump(std::ostream& os) const {
  for (const Clause& c : clauses_) {
    os << origin_name(c.origin) << '\t';
    for (std::size_t i = 0; i < c.lits.size(); ++i) {
      if (i) os << ' ';
      os << lit_to_string(c.lits[i]);
    }
    os << '\n';
  }
}

}  // namespace ltlcore
