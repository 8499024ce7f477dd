#include "qfs/checker.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "qfs/occurrences.hpp"
#include "qfs/printer.hpp"

namespace qfs {

const char* system_name(System s) {
  switch (s) {
    case System::LK: return "lk";
    case System::LJ: return "lj";
    case System::LKpp: return "lkpp";
    case System::LJpp: return "ljpp";
  }
  return "?";
}

const char* condition_name(Condition c) {
  switch (c) {
    case Condition::RuleShape: return "rule-shape";
    case Condition::SingleConclusion: return "single-conclusion";
    case Condition::Eigenvariable: return "eigenvariable";
    case Condition::WeakTermBoundVariable: return "weak-term-bound-variable";
    case Condition::Substitutability: return "substitutability";
    case Condition::SideVariableCycle: return "side-variable-cycle";
    case Condition::VeryWeakRegularity: return "very-weak-regularity";
    case Condition::NonAtomicAxiom: return "non-atomic-axiom";
    case Condition::CutPresent: return "cut-present";
  }
  return "?";
}

std::string CheckReport::summary() const {
  if (accepted()) return "accepted";
  std::ostringstream os;
  os << "rejected";
  for (const auto& v : violations)
    os << "\n  [" << path_string(v.path) << "] " << condition_name(v.condition) << ": "
       << v.message;
  return os.str();
}

bool CheckReport::has(Condition c) const {
  for (const auto& v : violations)
    if (v.condition == c) return true;
  return false;
}

bool SideVariableGraph::acyclic() const { return !topological_order().empty() || nodes.empty(); }

std::vector<std::string> SideVariableGraph::topological_order() const {
  std::map<std::string, int> indeg;
  for (const auto& n : nodes) indeg[n] = 0;
  for (const auto& [a, b] : edges) {
    (void)a;
    if (indeg.count(b)) ++indeg[b];
  }
  std::vector<std::string> ready, order;
  for (const auto& [n, d] : indeg)
    if (d == 0) ready.push_back(n);
  while (!ready.empty()) {
    std::string n = ready.front();
    ready.erase(ready.begin());
    order.push_back(n);
    for (const auto& [a, b] : edges)
      if (a == n && indeg.count(b) && --indeg[b] == 0) ready.push_back(b);
  }
  if (order.size() != nodes.size()) return {};
  return order;
}

namespace {

struct StrongInference {
  std::vector<int> path;
  std::string char_var;
  Formula principal;
};

void collect_strong(const Proof& p, std::vector<int>& path, std::vector<StrongInference>& out) {
  if (is_strong_rule(p.rule) && p.term && p.term->is_var() && p.principal >= 0) {
    const auto& side =
        principal_on_left(p.rule) ? p.conclusion.antecedent : p.conclusion.succedent;
    if (static_cast<size_t>(p.principal) < side.size())
      out.push_back({path, p.term->head(), side[p.principal]});
  }
  for (size_t i = 0; i < p.premises.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect_strong(p.premises[i], path, out);
    path.pop_back();
  }
}

std::vector<Formula> erase_at(const std::vector<Formula>& v, int i) {
  std::vector<Formula> out = v;
  out.erase(out.begin() + i);
  return out;
}

std::vector<Formula> replace_at(const std::vector<Formula>& v, int i, const Formula& f) {
  std::vector<Formula> out = v;
  out[i] = f;
  return out;
}

std::vector<Formula> with_front(const Formula& f, const std::vector<Formula>& v) {
  std::vector<Formula> out;
  out.reserve(v.size() + 1);
  out.push_back(f);
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::vector<Formula> with_back(const std::vector<Formula>& v, const Formula& f) {
  std::vector<Formula> out = v;
  out.push_back(f);
  return out;
}

struct Checker {
  System system;
  bool lj_mode;  // single-conclusion shapes
  bool pp_mode;  // suitability instead of eigenvariable conditions
  CheckReport report;

  void violate(const std::vector<int>& path, Condition c, std::string msg) {
    report.violations.push_back({path, c, std::move(msg)});
  }

  bool premise_matches(const Proof& p, size_t idx, const Sequent& expected,
                       const std::vector<int>& path) {
    const Sequent& got = p.premises[idx].conclusion;
    if (sequent_equal(got, expected)) return true;
    violate(path, Condition::RuleShape,
            std::string("premise ") + std::to_string(idx + 1) + " of " + rule_name(p.rule) +
                " should be \"" + print(expected) + "\", found \"" + print(got) + "\"");
    return false;
  }

  // Instantiates a quantified principal with term t, reporting capture and
  // bound-variable violations. True on success.
  bool instantiate(const Proof& p, const Formula& quant, const Term& t,
                   const std::vector<int>& path, Formula& out) {
    std::set<std::string> tv = t.vars();
    std::set<std::string> bv = bound_vars(quant);
    for (const auto& v : tv)
      if (bv.count(v)) {
        violate(path, Condition::WeakTermBoundVariable,
                "term " + print(t) + " contains variable '" + v +
                    "' bound in the principal formula " + print(quant));
        return false;
      }
    if (!substitute_plain(quant.body(), quant.var(), t, out)) {
      violate(path, Condition::WeakTermBoundVariable,
              "substituting " + print(t) + " into " + print(quant) + " captures a variable");
      return false;
    }
    return true;
  }

  void check_node(const Proof& p, std::vector<int>& path) {
    const Sequent& c = p.conclusion;
    if (lj_mode && c.succedent.size() > 1)
      violate(path, Condition::SingleConclusion,
              "succedent has " + std::to_string(c.succedent.size()) + " formulas");

    if (p.premises.size() != static_cast<size_t>(rule_arity(p.rule))) {
      violate(path, Condition::RuleShape,
              std::string(rule_name(p.rule)) + " takes " + std::to_string(rule_arity(p.rule)) +
                  " premise(s), found " + std::to_string(p.premises.size()));
      // Recurse anyway so deeper problems still surface.
      for (size_t i = 0; i < p.premises.size(); ++i) {
        path.push_back(static_cast<int>(i));
        check_node(p.premises[i], path);
        path.pop_back();
      }
      return;
    }

    // Principal index sanity.
    const std::vector<Formula>* pside = nullptr;
    if (has_principal(p.rule)) {
      pside = principal_on_left(p.rule) ? &c.antecedent : &c.succedent;
      if (p.principal < 0 || static_cast<size_t>(p.principal) >= pside->size()) {
        violate(path, Condition::RuleShape,
                std::string("principal index ") + std::to_string(p.principal) +
                    " out of range for " + rule_name(p.rule));
        pside = nullptr;
      }
    }

    auto principal = [&]() -> const Formula& { return (*pside)[p.principal]; };

    if (pside || !has_principal(p.rule)) switch (p.rule) {
        case Rule::Ax: {
          bool ok = c.antecedent.size() == 1 && c.succedent.size() == 1 &&
                    c.antecedent[0] == c.succedent[0];
          if (!ok) {
            violate(path, Condition::RuleShape, "axiom must be of the form p => p");
          } else if (!c.antecedent[0].is_atomic()) {
            violate(path, Condition::NonAtomicAxiom,
                    "axiom principal " + print(c.antecedent[0]) + " is not atomic");
          }
          break;
        }
        case Rule::BotL: {
          if (!(c.antecedent.size() == 1 && c.antecedent[0].is(FormulaKind::Bottom) &&
                c.succedent.empty()))
            violate(path, Condition::RuleShape, "bottom axiom must be exactly \"_|_ =>\"");
          break;
        }
        case Rule::Lw:
          premise_matches(p, 0, Sequent{erase_at(c.antecedent, p.principal), c.succedent}, path);
          break;
        case Rule::Rw:
          premise_matches(p, 0, Sequent{c.antecedent, erase_at(c.succedent, p.principal)}, path);
          break;
        case Rule::Lc:
          premise_matches(
              p, 0, Sequent{with_back(c.antecedent, principal()), c.succedent}, path);
          break;
        case Rule::Rc:
          premise_matches(
              p, 0, Sequent{c.antecedent, with_back(c.succedent, principal())}, path);
          break;
        case Rule::LAnd1:
        case Rule::LAnd2: {
          if (!principal().is(FormulaKind::And)) {
            violate(path, Condition::RuleShape,
                    "principal of " + std::string(rule_name(p.rule)) + " must be a conjunction");
            break;
          }
          const Formula& aux = p.rule == Rule::LAnd1 ? principal().lhs() : principal().rhs();
          premise_matches(p, 0, Sequent{replace_at(c.antecedent, p.principal, aux), c.succedent},
                          path);
          break;
        }
        case Rule::RAnd: {
          if (!principal().is(FormulaKind::And)) {
            violate(path, Condition::RuleShape, "principal of RAnd must be a conjunction");
            break;
          }
          premise_matches(
              p, 0, Sequent{c.antecedent, replace_at(c.succedent, p.principal, principal().lhs())},
              path);
          premise_matches(
              p, 1, Sequent{c.antecedent, replace_at(c.succedent, p.principal, principal().rhs())},
              path);
          break;
        }
        case Rule::ROr1:
        case Rule::ROr2: {
          if (!principal().is(FormulaKind::Or)) {
            violate(path, Condition::RuleShape,
                    "principal of " + std::string(rule_name(p.rule)) + " must be a disjunction");
            break;
          }
          const Formula& aux = p.rule == Rule::ROr1 ? principal().lhs() : principal().rhs();
          premise_matches(p, 0, Sequent{c.antecedent, replace_at(c.succedent, p.principal, aux)},
                          path);
          break;
        }
        case Rule::LOr: {
          if (!principal().is(FormulaKind::Or)) {
            violate(path, Condition::RuleShape, "principal of LOr must be a disjunction");
            break;
          }
          premise_matches(
              p, 0, Sequent{replace_at(c.antecedent, p.principal, principal().lhs()), c.succedent},
              path);
          premise_matches(
              p, 1, Sequent{replace_at(c.antecedent, p.principal, principal().rhs()), c.succedent},
              path);
          break;
        }
        case Rule::LImp: {
          if (!principal().is(FormulaKind::Implies)) {
            violate(path, Condition::RuleShape, "principal of LImp must be an implication");
            break;
          }
          std::vector<Formula> gamma = erase_at(c.antecedent, p.principal);
          Sequent prem1;
          prem1.antecedent = gamma;
          // LJ drops the succedent context in the left premise.
          prem1.succedent =
              lj_mode ? std::vector<Formula>{principal().lhs()}
                      : with_front(principal().lhs(), c.succedent);
          premise_matches(p, 0, prem1, path);
          premise_matches(
              p, 1, Sequent{replace_at(c.antecedent, p.principal, principal().rhs()), c.succedent},
              path);
          break;
        }
        case Rule::RImp: {
          if (!principal().is(FormulaKind::Implies)) {
            violate(path, Condition::RuleShape, "principal of RImp must be an implication");
            break;
          }
          premise_matches(p, 0,
                          Sequent{with_front(principal().lhs(), c.antecedent),
                                  replace_at(c.succedent, p.principal, principal().rhs())},
                          path);
          break;
        }
        case Rule::AllL:
        case Rule::ExR: {
          FormulaKind want = p.rule == Rule::AllL ? FormulaKind::Forall : FormulaKind::Exists;
          if (!principal().is(want)) {
            violate(path, Condition::RuleShape,
                    std::string("principal of ") + rule_name(p.rule) + " must be a " +
                        (want == FormulaKind::Forall ? "universal" : "existential") +
                        " quantification");
            break;
          }
          if (!p.term) {
            violate(path, Condition::RuleShape, "missing instantiating term");
            break;
          }
          Formula inst;
          if (!instantiate(p, principal(), *p.term, path, inst)) break;
          Sequent prem = p.rule == Rule::AllL
                             ? Sequent{replace_at(c.antecedent, p.principal, inst), c.succedent}
                             : Sequent{c.antecedent, replace_at(c.succedent, p.principal, inst)};
          premise_matches(p, 0, prem, path);
          break;
        }
        case Rule::AllR:
        case Rule::ExL: {
          FormulaKind want = p.rule == Rule::AllR ? FormulaKind::Forall : FormulaKind::Exists;
          if (!principal().is(want)) {
            violate(path, Condition::RuleShape,
                    std::string("principal of ") + rule_name(p.rule) + " must be a " +
                        (want == FormulaKind::Forall ? "universal" : "existential") +
                        " quantification");
            break;
          }
          if (!p.term || !p.term->is_var()) {
            violate(path, Condition::RuleShape,
                    "characteristic variable annotation missing or not a variable");
            break;
          }
          Formula inst;
          if (!instantiate(p, principal(), *p.term, path, inst)) break;
          Sequent prem = p.rule == Rule::ExL
                             ? Sequent{replace_at(c.antecedent, p.principal, inst), c.succedent}
                             : Sequent{c.antecedent, replace_at(c.succedent, p.principal, inst)};
          premise_matches(p, 0, prem, path);
          if (!pp_mode) {
            // Usual eigenvariable condition: y not free in the conclusion.
            if (free_vars(c).count(p.term->head()))
              violate(path, Condition::Eigenvariable,
                      "characteristic variable '" + p.term->head() +
                          "' is free in the conclusion \"" + print(c) + "\"");
          }
          break;
        }
        case Rule::Cut: {
          if (!p.cut_formula) {
            violate(path, Condition::RuleShape, "cut needs its cut formula annotation");
            break;
          }
          Sequent prem1;
          prem1.antecedent = c.antecedent;
          prem1.succedent = lj_mode ? std::vector<Formula>{*p.cut_formula}
                                    : with_back(c.succedent, *p.cut_formula);
          premise_matches(p, 0, prem1, path);
          premise_matches(p, 1, Sequent{with_front(*p.cut_formula, c.antecedent), c.succedent},
                          path);
          break;
        }
      }

    for (size_t i = 0; i < p.premises.size(); ++i) {
      path.push_back(static_cast<int>(i));
      check_node(p.premises[i], path);
      path.pop_back();
    }
  }
};

}  // namespace

SideVariableGraph side_variable_graph(const Proof& p) {
  std::vector<StrongInference> strong;
  std::vector<int> path;
  collect_strong(p, path, strong);
  SideVariableGraph g;
  for (const auto& s : strong) {
    g.nodes.insert(s.char_var);
    for (const auto& b : free_vars(s.principal)) g.edges.insert({s.char_var, b});
  }
  // Edges to variables that are not characteristic anywhere cannot close a
  // cycle but are part of the relation; keep the node set closed over edges.
  for (const auto& [a, b] : g.edges) {
    g.nodes.insert(a);
    g.nodes.insert(b);
  }
  return g;
}

CheckReport check(const Proof& p, System system) {
  Checker ck;
  ck.system = system;
  ck.lj_mode = system == System::LJ || system == System::LJpp;
  ck.pp_mode = system == System::LKpp || system == System::LJpp;
  std::vector<int> path;
  ck.check_node(p, path);

  if (ck.pp_mode) {
    std::vector<StrongInference> strong;
    std::vector<int> spath;
    collect_strong(p, spath, strong);

    // 1) substitutability: no characteristic variable free in the end-sequent.
    std::set<std::string> end_free = free_vars(p.conclusion);
    for (const auto& s : strong)
      if (end_free.count(s.char_var))
        ck.violate(s.path, Condition::Substitutability,
                   "characteristic variable '" + s.char_var +
                       "' appears free in the end-sequent");

    // 2) the side-variable relation must be acyclic.
    SideVariableGraph g = side_variable_graph(p);
    if (!g.acyclic()) {
      std::string cyc;
      for (const auto& [a, b] : g.edges) cyc += " " + a + "<" + b;
      ck.violate({}, Condition::SideVariableCycle, "side-variable relation is cyclic:" + cyc);
    }

    // 3) very weak regularity: same characteristic variable, same principal.
    std::map<std::string, const StrongInference*> seen;
    for (const auto& s : strong) {
      auto [it, fresh] = seen.emplace(s.char_var, &s);
      if (!fresh && it->second->principal != s.principal)
        ck.violate(s.path, Condition::VeryWeakRegularity,
                   "characteristic variable '" + s.char_var +
                       "' generalizes two distinct principal formulas: " +
                       print(it->second->principal) + " and " + print(s.principal));
    }
  }
  return ck.report;
}

CheckReport check_qfs(const Proof& p, const std::vector<Formula>& declared_hypotheses) {
  CheckReport report = check(p, System::LJ);
  // Each declared hypothesis must occur in the antecedent (with multiplicity)
  // and be a shift instance.
  std::vector<Formula> ant = p.conclusion.antecedent;
  for (const auto& h : declared_hypotheses) {
    auto it = std::find(ant.begin(), ant.end(), h);
    if (it == ant.end()) {
      report.violations.push_back({{},
                                   Condition::RuleShape,
                                   "declared hypothesis " + print(h) +
                                       " does not occur in the end-sequent antecedent"});
    } else {
      ant.erase(it);
    }
    if (!match_shift_instance(h))
      report.violations.push_back({{},
                                   Condition::RuleShape,
                                   "declared hypothesis " + print(h) +
                                       " is not an instance of CD, ED or SW"});
  }
  return report;
}

Proof expand_axiom(const Formula& f) {
  if (f.is_atomic()) {
    Proof ax;
    ax.rule = Rule::Ax;
    ax.conclusion = Sequent{{f}, {f}};
    return ax;
  }
  auto make = [&](Rule r, int principal, std::optional<Term> term, Sequent concl,
                  std::vector<Proof> prems) {
    Proof n;
    n.rule = r;
    n.principal = principal;
    n.term = std::move(term);
    n.conclusion = std::move(concl);
    n.premises = std::move(prems);
    return n;
  };
  switch (f.kind()) {
    case FormulaKind::And: {
      // f => A via LAnd1, f => B via LAnd2, then RAnd.
      Proof a = expand_axiom(f.lhs());
      Proof b = expand_axiom(f.rhs());
      Proof l = make(Rule::LAnd1, 0, std::nullopt, Sequent{{f}, {f.lhs()}}, {std::move(a)});
      Proof r = make(Rule::LAnd2, 0, std::nullopt, Sequent{{f}, {f.rhs()}}, {std::move(b)});
      return make(Rule::RAnd, 0, std::nullopt, Sequent{{f}, {f}}, {std::move(l), std::move(r)});
    }
    case FormulaKind::Or: {
      Proof a = expand_axiom(f.lhs());
      Proof b = expand_axiom(f.rhs());
      Proof l = make(Rule::ROr1, 0, std::nullopt, Sequent{{f.lhs()}, {f}}, {std::move(a)});
      Proof r = make(Rule::ROr2, 0, std::nullopt, Sequent{{f.rhs()}, {f}}, {std::move(b)});
      return make(Rule::LOr, 0, std::nullopt, Sequent{{f}, {f}}, {std::move(l), std::move(r)});
    }
    case FormulaKind::Implies: {
      // A => A and [B => B weakened to B, A => B], then LImp and RImp.
      Proof a = expand_axiom(f.lhs());
      Proof b = expand_axiom(f.rhs());
      Proof bw = make(Rule::Lw, 1, std::nullopt, Sequent{{f.rhs(), f.lhs()}, {f.rhs()}},
                      {std::move(b)});
      Proof li = make(Rule::LImp, 0, std::nullopt, Sequent{{f, f.lhs()}, {f.rhs()}},
                      {std::move(a), std::move(bw)});
      return make(Rule::RImp, 0, std::nullopt, Sequent{{f}, {f}}, {std::move(li)});
    }
    case FormulaKind::Forall: {
      std::set<std::string> used = all_names(f);
      std::string v = fresh_name(f.var(), used);
      Formula inst = substitute(f.body(), f.var(), Term::var(v));
      Proof core = expand_axiom(inst);
      Proof all_l =
          make(Rule::AllL, 0, Term::var(v), Sequent{{f}, {inst}}, {std::move(core)});
      return make(Rule::AllR, 0, Term::var(v), Sequent{{f}, {f}}, {std::move(all_l)});
    }
    case FormulaKind::Exists: {
      std::set<std::string> used = all_names(f);
      std::string v = fresh_name(f.var(), used);
      Formula inst = substitute(f.body(), f.var(), Term::var(v));
      Proof core = expand_axiom(inst);
      Proof ex_r = make(Rule::ExR, 0, Term::var(v), Sequent{{inst}, {f}}, {std::move(core)});
      return make(Rule::ExL, 0, Term::var(v), Sequent{{f}, {f}}, {std::move(ex_r)});
    }
    default:
      throw Error("expand_axiom: unreachable");
  }
}

}  // namespace qfs
