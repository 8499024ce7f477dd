#include "qfs/syntax.hpp"

#include <algorithm>

namespace qfs {

Term Term::var(std::string name) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->head = std::move(name);
  return Term(std::move(n));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->is_var = false;
  n->head = std::move(symbol);
  n->args = std::move(args);
  return Term(std::move(n));
}

bool Term::contains_var(const std::string& v) const {
  if (is_var()) return head() == v;
  for (const auto& a : args())
    if (a.contains_var(v)) return true;
  return false;
}

void Term::collect_vars(std::set<std::string>& out) const {
  if (is_var()) {
    out.insert(head());
    return;
  }
  for (const auto& a : args()) a.collect_vars(out);
}

std::set<std::string> Term::vars() const {
  std::set<std::string> out;
  collect_vars(out);
  return out;
}

void Term::collect_symbols(std::set<std::string>& out) const {
  if (!is_var()) out.insert(head());
  for (const auto& a : args()) a.collect_symbols(out);
}

Term Term::substitute(const std::map<std::string, Term>& sub) const {
  if (is_var()) {
    auto it = sub.find(head());
    return it == sub.end() ? *this : it->second;
  }
  std::vector<Term> as;
  as.reserve(args().size());
  for (const auto& a : args()) as.push_back(a.substitute(sub));
  return app(head(), std::move(as));
}

int Term::compare(const Term& other) const {
  if (node_ == other.node_) return 0;
  if (is_var() != other.is_var()) return is_var() ? -1 : 1;
  if (int c = head().compare(other.head()); c != 0) return c < 0 ? -1 : 1;
  size_t n = std::min(args().size(), other.args().size());
  for (size_t i = 0; i < n; ++i)
    if (int c = args()[i].compare(other.args()[i]); c != 0) return c;
  if (args().size() != other.args().size()) return args().size() < other.args().size() ? -1 : 1;
  return 0;
}

Formula Formula::atom(std::string pred, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Atom;
  n->name = std::move(pred);
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::bottom() {
  static const Formula b = [] {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Bottom;
    return Formula(std::move(n));
  }();
  return b;
}

Formula Formula::top() {
  static const Formula t = [] {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::Top;
    return Formula(std::move(n));
  }();
  return t;
}

Formula Formula::conj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::And;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::disj(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Or;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::implies(Formula l, Formula r) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Implies;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return Formula(std::move(n));
}

Formula Formula::forall(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Forall;
  n->name = std::move(var);
  n->lhs = std::move(body);
  return Formula(std::move(n));
}

Formula Formula::exists(std::string var, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = FormulaKind::Exists;
  n->name = std::move(var);
  n->lhs = std::move(body);
  return Formula(std::move(n));
}

int Formula::compare(const Formula& other) const {
  if (node_ == other.node_) return 0;
  if (kind() != other.kind())
    return static_cast<int>(kind()) < static_cast<int>(other.kind()) ? -1 : 1;
  switch (kind()) {
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return 0;
    case FormulaKind::Atom: {
      if (int c = pred().compare(other.pred()); c != 0) return c < 0 ? -1 : 1;
      size_t n = std::min(args().size(), other.args().size());
      for (size_t i = 0; i < n; ++i)
        if (int c = args()[i].compare(other.args()[i]); c != 0) return c;
      if (args().size() != other.args().size())
        return args().size() < other.args().size() ? -1 : 1;
      return 0;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
      if (int c = lhs().compare(other.lhs()); c != 0) return c;
      return rhs().compare(other.rhs());
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      if (int c = var().compare(other.var()); c != 0) return c < 0 ? -1 : 1;
      return body().compare(other.body());
    }
  }
  return 0;
}

bool multiset_equal(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  if (a.size() != b.size()) return false;
  std::vector<Formula> sa = a, sb = b;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  return std::equal(sa.begin(), sa.end(), sb.begin());
}

bool sequent_equal(const Sequent& a, const Sequent& b) {
  return multiset_equal(a.antecedent, b.antecedent) && multiset_equal(a.succedent, b.succedent);
}

static void free_vars_rec(const Formula& f, std::set<std::string>& bound,
                          std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      std::set<std::string> vs;
      for (const auto& t : f.args()) t.collect_vars(vs);
      for (const auto& v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      free_vars_rec(f.lhs(), bound, out);
      free_vars_rec(f.rhs(), bound, out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool fresh = bound.insert(f.var()).second;
      free_vars_rec(f.body(), bound, out);
      if (fresh) bound.erase(f.var());
      return;
    }
  }
}

void collect_free_vars(const Formula& f, std::set<std::string>& out) {
  std::set<std::string> bound;
  free_vars_rec(f, bound, out);
}

std::set<std::string> free_vars(const Formula& f) {
  std::set<std::string> out;
  collect_free_vars(f, out);
  return out;
}

std::set<std::string> free_vars(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& f : s.antecedent) collect_free_vars(f, out);
  for (const auto& f : s.succedent) collect_free_vars(f, out);
  return out;
}

bool closed(const Formula& f) { return free_vars(f).empty(); }

static void bound_vars_rec(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      bound_vars_rec(f.lhs(), out);
      bound_vars_rec(f.rhs(), out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out.insert(f.var());
      bound_vars_rec(f.body(), out);
      return;
    default:
      return;
  }
}

std::set<std::string> bound_vars(const Formula& f) {
  std::set<std::string> out;
  bound_vars_rec(f, out);
  return out;
}

static void all_names_rec(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom:
      out.insert(f.pred());
      for (const auto& t : f.args()) {
        t.collect_vars(out);
        t.collect_symbols(out);
      }
      return;
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      all_names_rec(f.lhs(), out);
      all_names_rec(f.rhs(), out);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      out.insert(f.var());
      all_names_rec(f.body(), out);
      return;
  }
}

std::set<std::string> all_names(const Formula& f) {
  std::set<std::string> out;
  all_names_rec(f, out);
  return out;
}

std::set<std::string> all_names(const Sequent& s) {
  std::set<std::string> out;
  for (const auto& f : s.antecedent) all_names_rec(f, out);
  for (const auto& f : s.succedent) all_names_rec(f, out);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& used) {
  for (int k = 1;; ++k) {
    std::string cand = base + "_" + std::to_string(k);
    if (!used.count(cand)) return cand;
  }
}

static Formula subst_rec(const Formula& f, const std::string& v, const Term& t,
                         const std::set<std::string>& tvars, std::set<std::string>& used) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      std::map<std::string, Term> sub{{v, t}};
      std::vector<Term> as;
      as.reserve(f.args().size());
      for (const auto& a : f.args()) as.push_back(a.substitute(sub));
      return Formula::atom(f.pred(), std::move(as));
    }
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return f;
    case FormulaKind::And:
      return Formula::conj(subst_rec(f.lhs(), v, t, tvars, used),
                           subst_rec(f.rhs(), v, t, tvars, used));
    case FormulaKind::Or:
      return Formula::disj(subst_rec(f.lhs(), v, t, tvars, used),
                           subst_rec(f.rhs(), v, t, tvars, used));
    case FormulaKind::Implies:
      return Formula::implies(subst_rec(f.lhs(), v, t, tvars, used),
                              subst_rec(f.rhs(), v, t, tvars, used));
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      if (f.var() == v) return f;  // v is shadowed; no free occurrences below
      std::string x = f.var();
      Formula body = f.body();
      if (tvars.count(x) && free_vars(f.body()).count(v)) {
        // Capture: rename this binder before substituting.
        std::string x2 = fresh_name(x, used);
        used.insert(x2);
        body = substitute(body, x, Term::var(x2));
        x = x2;
      }
      Formula nb = subst_rec(body, v, t, tvars, used);
      return f.kind() == FormulaKind::Forall ? Formula::forall(x, std::move(nb))
                                             : Formula::exists(x, std::move(nb));
    }
  }
  return f;
}

Formula substitute(const Formula& f, const std::string& v, const Term& t) {
  std::set<std::string> tvars = t.vars();
  std::set<std::string> used = all_names(f);
  for (const auto& x : tvars) used.insert(x);
  t.collect_symbols(used);
  return subst_rec(f, v, t, tvars, used);
}

static bool subst_plain_rec(const Formula& f, const std::string& v, const Term& t,
                            const std::set<std::string>& tvars, Formula& out) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      std::map<std::string, Term> sub{{v, t}};
      std::vector<Term> as;
      as.reserve(f.args().size());
      for (const auto& a : f.args()) as.push_back(a.substitute(sub));
      out = Formula::atom(f.pred(), std::move(as));
      return true;
    }
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      out = f;
      return true;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
      Formula l, r;
      if (!subst_plain_rec(f.lhs(), v, t, tvars, l)) return false;
      if (!subst_plain_rec(f.rhs(), v, t, tvars, r)) return false;
      out = f.kind() == FormulaKind::And ? Formula::conj(l, r)
            : f.kind() == FormulaKind::Or ? Formula::disj(l, r)
                                          : Formula::implies(l, r);
      return true;
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      if (f.var() == v) {
        out = f;
        return true;
      }
      if (tvars.count(f.var()) && free_vars(f.body()).count(v)) return false;  // capture
      Formula nb;
      if (!subst_plain_rec(f.body(), v, t, tvars, nb)) return false;
      out = f.kind() == FormulaKind::Forall ? Formula::forall(f.var(), std::move(nb))
                                            : Formula::exists(f.var(), std::move(nb));
      return true;
    }
  }
  return false;
}

bool substitute_plain(const Formula& f, const std::string& v, const Term& t, Formula& out) {
  return subst_plain_rec(f, v, t, t.vars(), out);
}

namespace {

// de Bruijn style comparison environments for alpha equivalence.
bool alpha_term(const Term& a, const Term& b, const std::vector<std::string>& ea,
                const std::vector<std::string>& eb) {
  if (a.is_var() != b.is_var()) return false;
  if (a.is_var()) {
    for (size_t i = ea.size(); i-- > 0;) {
      bool ba = ea[i] == a.head(), bb = eb[i] == b.head();
      if (ba || bb) return ba && bb;
    }
    return a.head() == b.head();
  }
  if (a.head() != b.head() || a.args().size() != b.args().size()) return false;
  for (size_t i = 0; i < a.args().size(); ++i)
    if (!alpha_term(a.args()[i], b.args()[i], ea, eb)) return false;
  return true;
}

bool alpha_rec(const Formula& a, const Formula& b, std::vector<std::string>& ea,
               std::vector<std::string>& eb) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::Bottom:
    case FormulaKind::Top:
      return true;
    case FormulaKind::Atom: {
      if (a.pred() != b.pred() || a.args().size() != b.args().size()) return false;
      for (size_t i = 0; i < a.args().size(); ++i)
        if (!alpha_term(a.args()[i], b.args()[i], ea, eb)) return false;
      return true;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      return alpha_rec(a.lhs(), b.lhs(), ea, eb) && alpha_rec(a.rhs(), b.rhs(), ea, eb);
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      ea.push_back(a.var());
      eb.push_back(b.var());
      bool ok = alpha_rec(a.body(), b.body(), ea, eb);
      ea.pop_back();
      eb.pop_back();
      return ok;
    }
  }
  return false;
}

}  // namespace

bool alpha_equal(const Formula& a, const Formula& b) {
  std::vector<std::string> ea, eb;
  return alpha_rec(a, b, ea, eb);
}

}  // namespace qfs
