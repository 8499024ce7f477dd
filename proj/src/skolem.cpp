#include "qfs/skolem.hpp"

#include <algorithm>
#include <sstream>

#include "qfs/occurrences.hpp"

namespace qfs {

bool SkolemSignature::is_skolem_symbol(const std::string& name) const {
  for (const auto& e : entries)
    if (e.symbol == name) return true;
  return false;
}

std::string SkolemSignature::table() const {
  std::ostringstream os;
  os << "symbol  arity  deps                variant\n";
  for (const auto& e : entries) {
    std::string deps;
    for (size_t i = 0; i < e.deps.size(); ++i) {
      if (i) deps += ",";
      deps += e.deps[i];
    }
    if (deps.empty()) deps = "-";
    std::string variant = e.variant == SkolemVariant::Structural ? "structural"
                          : e.variant == SkolemVariant::Andrews  ? "andrews"
                                                                 : "parallel";
    if (e.variant == SkolemVariant::Parallel)
      variant += "(" + std::to_string(e.parallel_index) + ")";
    os << e.symbol;
    for (size_t i = e.symbol.size(); i < 8; ++i) os << ' ';
    std::string ar = std::to_string(e.arity);
    os << ar;
    for (size_t i = ar.size(); i < 7; ++i) os << ' ';
    os << deps;
    for (size_t i = deps.size(); i < 20; ++i) os << ' ';
    os << variant << '\n';
  }
  return os.str();
}

namespace {

struct Skolemizer {
  SkolemVariant variant;
  int degree;
  std::set<std::string> used;  // every name in play; fresh symbols avoid it
  SkolemSignature sig;
  int counter = 0;

  std::string fresh_base() {
    while (true) {
      std::string cand = "sk" + std::to_string(counter++);
      if (!used.count(cand)) return cand;
    }
  }

  Term make_term(const std::string& symbol, const std::vector<std::string>& deps) {
    if (deps.empty()) return Term::var(symbol);
    std::vector<Term> args;
    args.reserve(deps.size());
    for (const auto& d : deps) args.push_back(Term::var(d));
    return Term::app(symbol, args);
  }

  // Replaces the quantifier node at `path` by its body with var mapped via
  // `build` (which receives the body and returns the replacement subformula).
  template <typename Fn>
  Formula rewrite_at(const Formula& f, const std::vector<int>& path, size_t depth, Fn&& build) {
    if (depth == path.size()) {
      if (!f.is_quantifier()) throw Error("skolemize: path does not reach a quantifier");
      return build(f);
    }
    int step = path[depth];
    switch (f.kind()) {
      case FormulaKind::And:
        return step == 0
                   ? Formula::conj(rewrite_at(f.lhs(), path, depth + 1, build), f.rhs())
                   : Formula::conj(f.lhs(), rewrite_at(f.rhs(), path, depth + 1, build));
      case FormulaKind::Or:
        return step == 0
                   ? Formula::disj(rewrite_at(f.lhs(), path, depth + 1, build), f.rhs())
                   : Formula::disj(f.lhs(), rewrite_at(f.rhs(), path, depth + 1, build));
      case FormulaKind::Implies:
        return step == 0
                   ? Formula::implies(rewrite_at(f.lhs(), path, depth + 1, build), f.rhs())
                   : Formula::implies(f.lhs(), rewrite_at(f.rhs(), path, depth + 1, build));
      case FormulaKind::Forall:
        return Formula::forall(f.var(), rewrite_at(f.body(), path, depth + 1, build));
      case FormulaKind::Exists:
        return Formula::exists(f.var(), rewrite_at(f.body(), path, depth + 1, build));
      default:
        throw Error("skolemize: bad occurrence path");
    }
  }

  // One round: eliminate the first strong quantifier; false once none is left.
  bool step(Formula& f, bool flip) {
    auto occs = classify_quantifiers(f, flip);
    const Occurrence* first = nullptr;
    for (const auto& o : occs)
      if (o.strength == Strength::Strong) {
        first = &o;
        break;
      }
    if (!first) return false;

    std::vector<std::string> deps = first->dominating_weak_vars;
    if (variant == SkolemVariant::Andrews) {
      Formula dominated = subformula_at(f, first->path);
      std::set<std::string> fv = free_vars(dominated);
      std::vector<std::string> filtered;
      for (const auto& d : deps)
        if (fv.count(d)) filtered.push_back(d);
      deps = std::move(filtered);
    }

    std::string base = fresh_base();
    int n = variant == SkolemVariant::Parallel ? degree : 1;
    std::vector<Term> terms;
    for (int i = 1; i <= n; ++i) {
      std::string symbol = variant == SkolemVariant::Parallel
                               ? base + "_" + std::to_string(i)
                               : base;
      used.insert(symbol);
      SkolemEntry e;
      e.symbol = symbol;
      e.arity = static_cast<int>(deps.size());
      e.source_path = first->path;
      e.deps = deps;
      e.variant = variant;
      e.parallel_index = variant == SkolemVariant::Parallel ? i : 0;
      sig.entries.push_back(std::move(e));
      terms.push_back(make_term(symbol, deps));
    }

    bool conj = first->quantifier == FormulaKind::Forall;  // strong forall -> conjunction
    std::string bound = first->bound_var;
    f = rewrite_at(f, first->path, 0, [&](const Formula& q) {
      std::vector<Formula> parts;
      parts.reserve(terms.size());
      for (const auto& t : terms) parts.push_back(substitute(q.body(), bound, t));
      Formula acc = parts[0];
      for (size_t i = 1; i < parts.size(); ++i)
        acc = conj ? Formula::conj(std::move(acc), parts[i])
                   : Formula::disj(std::move(acc), parts[i]);
      return acc;
    });
    return true;
  }

  Formula run(Formula f, bool flip) {
    while (step(f, flip)) {
    }
    return f;
  }
};

std::pair<Formula, SkolemSignature> skolemize(const Formula& f, SkolemVariant variant,
                                              int degree, bool flip) {
  if (variant == SkolemVariant::Parallel && degree < 1)
    throw Error("parallel Skolemization needs degree >= 1");
  auto fv = free_vars(f);
  if (!fv.empty()) throw Error("skolemize: formula is not closed (free variable '" +
                               *fv.begin() + "')");
  Skolemizer sk;
  sk.variant = variant;
  sk.degree = degree;
  sk.used = all_names(f);
  Formula out = sk.run(f, flip);
  return {out, std::move(sk.sig)};
}

}  // namespace

std::pair<Formula, SkolemSignature> skolemize_structural(const Formula& f) {
  return skolemize(f, SkolemVariant::Structural, 1, false);
}

std::pair<Formula, SkolemSignature> skolemize_andrews(const Formula& f) {
  return skolemize(f, SkolemVariant::Andrews, 1, false);
}

std::pair<Formula, SkolemSignature> skolemize_parallel(const Formula& f, int degree) {
  return skolemize(f, SkolemVariant::Parallel, degree, false);
}

std::pair<Sequent, SkolemSignature> skolemize_sequent(const Sequent& s, SkolemVariant variant,
                                                      int degree) {
  if (variant == SkolemVariant::Parallel && degree < 1)
    throw Error("parallel Skolemization needs degree >= 1");
  for (const auto& f : s.antecedent) {
    auto fv = free_vars(f);
    if (!fv.empty())
      throw Error("skolemize_sequent: open antecedent formula (free variable '" + *fv.begin() +
                  "')");
  }
  for (const auto& f : s.succedent) {
    auto fv = free_vars(f);
    if (!fv.empty())
      throw Error("skolemize_sequent: open succedent formula (free variable '" + *fv.begin() +
                  "')");
  }
  // Fresh symbols must avoid names anywhere in the sequent, and each formula
  // keeps its own disjoint set (the shared counter takes care of that).
  std::set<std::string> used = all_names(s);
  SkolemSignature sig;
  int counter = 0;
  Sequent out;
  auto do_side = [&](const std::vector<Formula>& side, bool flip) {
    std::vector<Formula> res;
    for (const auto& f : side) {
      Skolemizer sk;
      sk.variant = variant;
      sk.degree = degree;
      sk.used = used;
      sk.counter = counter;
      res.push_back(sk.run(f, flip));
      counter = sk.counter;
      for (const auto& e : sk.sig.entries) used.insert(e.symbol);
      for (auto& e : sk.sig.entries) sig.entries.push_back(std::move(e));
    }
    return res;
  };
  // Antecedent formulas sit negatively in /\Gamma -> \/Delta: flip polarity.
  out.antecedent = do_side(s.antecedent, true);
  out.succedent = do_side(s.succedent, false);
  return {out, std::move(sig)};
}

}  // namespace qfs
