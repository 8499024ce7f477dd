// Rule-by-rule proof checking for LK, LJ, LK++ and LJ++, the suitability
// conditions, QFS-as-LJ-with-hypotheses checking, and compound axiom
// expansion.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "qfs/proof.hpp"
#include "qfs/syntax.hpp"

namespace qfs {

enum class System { LK, LJ, LKpp, LJpp };
const char* system_name(System s);

enum class Condition {
  RuleShape,
  SingleConclusion,
  Eigenvariable,
  WeakTermBoundVariable,
  Substitutability,
  SideVariableCycle,
  VeryWeakRegularity,
  NonAtomicAxiom,
  CutPresent,
};
const char* condition_name(Condition c);

struct Violation {
  std::vector<int> path;
  Condition condition;
  std::string message;
};

struct CheckReport {
  std::vector<Violation> violations;
  bool accepted() const { return violations.empty(); }
  std::string summary() const;
  bool has(Condition c) const;
};

// Characteristic-variable dependency graph: edge a -> b whenever a strong
// inference with characteristic variable a leaves b free in its principal
// formula (b is a side variable of a).
struct SideVariableGraph {
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> edges;

  bool acyclic() const;
  // A topological order (sources first); empty when cyclic.
  std::vector<std::string> topological_order() const;
  bool has_edge(const std::string& a, const std::string& b) const {
    return edges.count({a, b}) > 0;
  }
};

SideVariableGraph side_variable_graph(const Proof& p);

CheckReport check(const Proof& p, System system);

// Accepted iff p checks under LJ, every declared hypothesis occurs in the
// end-sequent antecedent, and each is an instance of CD, ED or SW (universal
// closures allowed).
CheckReport check_qfs(const Proof& p, const std::vector<Formula>& declared_hypotheses);

// An LJ proof of f => f using atomic axioms only.
Proof expand_axiom(const Formula& f);

}  // namespace qfs
