// Sequent-calculus proof trees (Table-1 rule set plus cut).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfs/syntax.hpp"

namespace qfs {

enum class Rule {
  Ax,     // p => p, p atomic
  BotL,   // _|_ =>
  Lw, Rw, Lc, Rc,
  LAnd1, LAnd2, RAnd,
  ROr1, ROr2, LOr,
  LImp, RImp,
  AllL, AllR, ExL, ExR,
  Cut,
};

const char* rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);
int rule_arity(Rule r);
bool is_quantifier_rule(Rule r);
// AllR / ExL: the rules that introduce a quantifier strong in the sequent.
bool is_strong_rule(Rule r);
// Principal formula sits in the antecedent (true) or succedent (false).
bool principal_on_left(Rule r);
bool has_principal(Rule r);

struct ProofNode {
  Rule rule = Rule::Ax;
  Sequent conclusion;
  // Index of the principal formula in the antecedent (L-rules) or succedent
  // (R-rules); -1 where the rule has none.
  int principal = -1;
  // AllL/ExR: instantiating term. AllR/ExL: characteristic variable.
  std::optional<Term> term;
  std::optional<Formula> cut_formula;  // Cut only
  std::vector<ProofNode> premises;
};

using Proof = ProofNode;

bool is_cut_free(const Proof& p);
// True iff every leaf is (Ax) on an atomic formula or the (BotL) axiom.
bool has_atomic_axioms(const Proof& p);

// Nested rule-tag skeleton with quantifier inferences spliced out; two proofs
// share their propositional structure iff the strings are equal.
std::string propositional_skeleton(const Proof& p);

const ProofNode* node_at(const Proof& p, const std::vector<int>& path);
std::string path_string(const std::vector<int>& path);

}  // namespace qfs
