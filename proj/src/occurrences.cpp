#include "qfs/occurrences.hpp"

namespace qfs {

namespace {

void classify_rec(const Formula& f, bool negative, std::vector<int>& path,
                  std::vector<std::pair<std::string, bool>>& scope,  // (var, is_weak)
                  std::vector<Occurrence>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      path.push_back(0);
      classify_rec(f.lhs(), negative, path, scope, out);
      path.back() = 1;
      classify_rec(f.rhs(), negative, path, scope, out);
      path.pop_back();
      return;
    case FormulaKind::Implies:
      path.push_back(0);
      classify_rec(f.lhs(), !negative, path, scope, out);
      path.back() = 1;
      classify_rec(f.rhs(), negative, path, scope, out);
      path.pop_back();
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool is_forall = f.kind() == FormulaKind::Forall;
      // Strong iff positive universal or negative existential.
      bool strong = is_forall ? !negative : negative;
      Occurrence o;
      o.path = path;
      o.polarity = negative ? Polarity::Negative : Polarity::Positive;
      o.strength = strong ? Strength::Strong : Strength::Weak;
      o.quantifier = f.kind();
      o.bound_var = f.var();
      for (const auto& [v, weak] : scope)
        if (weak) o.dominating_weak_vars.push_back(v);
      out.push_back(std::move(o));
      scope.emplace_back(f.var(), !strong);
      path.push_back(0);
      classify_rec(f.body(), negative, path, scope, out);
      path.pop_back();
      scope.pop_back();
      return;
    }
  }
}

}  // namespace

std::vector<Occurrence> classify_quantifiers(const Formula& f, bool flip) {
  std::vector<Occurrence> out;
  std::vector<int> path;
  std::vector<std::pair<std::string, bool>> scope;
  classify_rec(f, flip, path, scope, out);
  return out;
}

Formula subformula_at(const Formula& f, const std::vector<int>& path) {
  Formula cur = f;
  for (int step : path) {
    switch (cur.kind()) {
      case FormulaKind::And:
      case FormulaKind::Or:
      case FormulaKind::Implies:
        cur = step == 0 ? cur.lhs() : cur.rhs();
        break;
      case FormulaKind::Forall:
      case FormulaKind::Exists:
        cur = cur.body();
        break;
      default:
        throw Error("subformula_at: path leads below an atomic formula");
    }
  }
  return cur;
}

Formula shift_axiom(ShiftKind kind, const Formula& a, const Formula& b, const std::string& x) {
  if (free_vars(b).count(x))
    throw Error("shift_axiom: variable " + x + " occurs free in B");
  switch (kind) {
    case ShiftKind::CD:
      return Formula::implies(Formula::forall(x, Formula::disj(a, b)),
                              Formula::disj(Formula::forall(x, a), b));
    case ShiftKind::ED:
      return Formula::implies(Formula::implies(b, Formula::exists(x, a)),
                              Formula::exists(x, Formula::implies(b, a)));
    case ShiftKind::SW:
      return Formula::implies(Formula::implies(Formula::forall(x, a), b),
                              Formula::exists(x, Formula::implies(a, b)));
  }
  throw Error("shift_axiom: bad kind");
}

namespace {

// Both quantified parts of a shift instance carry the same scheme formula A;
// the bound names may differ, so compare them as one-variable abstractions.
bool same_abstraction(const std::string& xa, const Formula& a, const std::string& xb,
                      const Formula& b) {
  return alpha_equal(Formula::forall(xa, a), Formula::forall(xb, b));
}

bool match_one(const Formula& f, ShiftKind kind) {
  if (!f.is(FormulaKind::Implies)) return false;
  const Formula& l = f.lhs();
  const Formula& r = f.rhs();
  switch (kind) {
    case ShiftKind::CD: {
      // forall x (A | B) -> (forall y A' | B)
      if (!l.is(FormulaKind::Forall) || !l.body().is(FormulaKind::Or)) return false;
      if (!r.is(FormulaKind::Or) || !r.lhs().is(FormulaKind::Forall)) return false;
      const Formula& b = l.body().rhs();
      if (r.rhs() != b || free_vars(b).count(l.var())) return false;
      return same_abstraction(l.var(), l.body().lhs(), r.lhs().var(), r.lhs().body());
    }
    case ShiftKind::ED: {
      // (B -> exists x A) -> exists y (B -> A')
      if (!l.is(FormulaKind::Implies) || !l.rhs().is(FormulaKind::Exists)) return false;
      if (!r.is(FormulaKind::Exists) || !r.body().is(FormulaKind::Implies)) return false;
      const Formula& b = l.lhs();
      if (r.body().lhs() != b || free_vars(b).count(l.rhs().var())) return false;
      if (free_vars(b).count(r.var())) return false;
      return same_abstraction(l.rhs().var(), l.rhs().body(), r.var(), r.body().rhs());
    }
    case ShiftKind::SW: {
      // (forall x A -> B) -> exists y (A' -> B)
      if (!l.is(FormulaKind::Implies) || !l.lhs().is(FormulaKind::Forall)) return false;
      if (!r.is(FormulaKind::Exists) || !r.body().is(FormulaKind::Implies)) return false;
      const Formula& b = l.rhs();
      if (r.body().rhs() != b || free_vars(b).count(l.lhs().var())) return false;
      if (free_vars(b).count(r.var())) return false;
      return same_abstraction(l.lhs().var(), l.lhs().body(), r.var(), r.body().lhs());
    }
  }
  return false;
}

}  // namespace

std::optional<ShiftKind> match_shift_instance(const Formula& f) {
  Formula g = f;
  while (g.is(FormulaKind::Forall)) g = g.body();  // universal closures allowed
  for (ShiftKind k : {ShiftKind::CD, ShiftKind::ED, ShiftKind::SW})
    if (match_one(g, k)) return k;
  return std::nullopt;
}

const char* shift_name(ShiftKind k) {
  switch (k) {
    case ShiftKind::CD: return "CD";
    case ShiftKind::ED: return "ED";
    case ShiftKind::SW: return "SW";
  }
  return "?";
}

}  // namespace qfs
