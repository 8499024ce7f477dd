// First-order syntax trees: terms, formulas, sequents.
//
// All values are immutable after construction and share structure through
// shared_ptr nodes; they are safe to copy, compare and send across threads.

#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfs {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Term {
public:
  Term() = default;

  static Term var(std::string name);
  static Term app(std::string symbol, std::vector<Term> args);

  bool is_var() const { return node_->is_var; }
  // Variable name, or function symbol for applications.
  const std::string& head() const { return node_->head; }
  const std::vector<Term>& args() const { return node_->args; }

  bool contains_var(const std::string& v) const;
  void collect_vars(std::set<std::string>& out) const;
  std::set<std::string> vars() const;
  void collect_symbols(std::set<std::string>& out) const;

  // Simultaneous replacement of variables. Terms have no binders, so this is
  // plain substitution.
  Term substitute(const std::map<std::string, Term>& sub) const;

  int compare(const Term& other) const;
  friend bool operator==(const Term& a, const Term& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Term& a, const Term& b) { return a.compare(b) != 0; }
  friend bool operator<(const Term& a, const Term& b) { return a.compare(b) < 0; }

private:
  struct Node {
    bool is_var;
    std::string head;
    std::vector<Term> args;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

enum class FormulaKind { Atom, Bottom, Top, And, Or, Implies, Forall, Exists };

class Formula {
public:
  Formula() = default;

  static Formula atom(std::string pred, std::vector<Term> args = {});
  static Formula bottom();
  static Formula top();
  static Formula conj(Formula l, Formula r);
  static Formula disj(Formula l, Formula r);
  static Formula implies(Formula l, Formula r);
  static Formula forall(std::string var, Formula body);
  static Formula exists(std::string var, Formula body);
  // ~A is sugar for A -> _|_ and never a distinct node.
  static Formula neg(Formula f) { return implies(std::move(f), bottom()); }

  FormulaKind kind() const { return node_->kind; }
  bool is(FormulaKind k) const { return node_->kind == k; }
  bool is_quantifier() const {
    return node_->kind == FormulaKind::Forall || node_->kind == FormulaKind::Exists;
  }
  // An atomic formula: an atom, bottom or top.
  bool is_atomic() const {
    return node_->kind == FormulaKind::Atom || node_->kind == FormulaKind::Bottom ||
           node_->kind == FormulaKind::Top;
  }
  bool is_negation() const {
    return node_->kind == FormulaKind::Implies && node_->rhs.is(FormulaKind::Bottom);
  }

  const std::string& pred() const { return node_->name; }        // Atom
  const std::vector<Term>& args() const { return node_->args; }  // Atom
  const Formula& lhs() const { return node_->lhs; }              // And/Or/Implies
  const Formula& rhs() const { return node_->rhs; }
  const std::string& var() const { return node_->name; }         // Forall/Exists
  const Formula& body() const { return node_->lhs; }

  int compare(const Formula& other) const;
  friend bool operator==(const Formula& a, const Formula& b) { return a.compare(b) == 0; }
  friend bool operator!=(const Formula& a, const Formula& b) { return a.compare(b) != 0; }
  friend bool operator<(const Formula& a, const Formula& b) { return a.compare(b) < 0; }

private:
  struct Node {
    FormulaKind kind;
    std::string name;        // predicate or bound variable
    std::vector<Term> args;  // Atom
    Formula lhs, rhs;        // binary; lhs doubles as quantifier body
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Antecedent and succedent are multisets; the vectors keep source order for
// printing, equality is order-insensitive and multiplicity-sensitive.
struct Sequent {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;
};

bool multiset_equal(const std::vector<Formula>& a, const std::vector<Formula>& b);
bool sequent_equal(const Sequent& a, const Sequent& b);

std::set<std::string> free_vars(const Formula& f);
void collect_free_vars(const Formula& f, std::set<std::string>& out);
std::set<std::string> free_vars(const Sequent& s);
bool closed(const Formula& f);
std::set<std::string> bound_vars(const Formula& f);
// Every identifier used anywhere in f: variables (free and bound), function
// symbols and predicate symbols.
std::set<std::string> all_names(const Formula& f);
std::set<std::string> all_names(const Sequent& s);

// Smallest k >= 1 such that base_k is not in `used`; returns that name.
std::string fresh_name(const std::string& base, const std::set<std::string>& used);

// Capture-avoiding substitution of every free occurrence of `v` by `t`;
// bound variables are renamed with the deterministic _k suffix scheme when a
// variable of `t` would be captured.
Formula substitute(const Formula& f, const std::string& v, const Term& t);

// Plain (capture-ignoring) substitution; returns nothing if some variable of
// `t` would be captured. Used by rule checkers that must reject capture.
bool substitute_plain(const Formula& f, const std::string& v, const Term& t, Formula& out);

bool alpha_equal(const Formula& a, const Formula& b);

}  // namespace qfs
