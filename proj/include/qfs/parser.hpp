// Concrete text syntax for terms, formulas, sequents, proofs, Kripke models
// and CD5 interpretations.
//
// Formula grammar (ASCII; ~ binds tightest, then &, |, -> right-assoc):
//   formula := disj ('->' formula)?
//   disj    := conj ('|' conj)*
//   conj    := unary ('&' unary)*
//   unary   := '~' unary | 'forall' var '.' unary | 'exists' var '.' unary | primary
//   primary := '_|_' | 'T' | Pred ['(' term {',' term} ')'] | '(' formula ')'
//   term    := lower ['(' term {',' term} ')']
// Lowercase identifiers are variables / function symbols, uppercase are
// predicates; a bare lowercase identifier is always a variable.

#pragma once

#include <set>
#include <string>
#include <vector>

#include "qfs/cd5.hpp"
#include "qfs/kripke.hpp"
#include "qfs/proof.hpp"
#include "qfs/syntax.hpp"

namespace qfs {

struct SourceSpan {
  size_t start = 0;
  size_t end = 0;
};

struct ParseError : Error {
  ParseError(std::string msg, SourceSpan sp, std::set<std::string> exp = {})
      : Error(std::move(msg)), span(sp), expected(std::move(exp)) {}
  SourceSpan span;
  std::set<std::string> expected;
};

Term parse_term(const std::string& text);
Formula parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);

struct ProofFile {
  Proof proof;
  std::vector<Formula> hypotheses;     // `hyp <formula>` header lines
  std::vector<std::string> expectations;  // `# expect: ...` header lines
};

ProofFile parse_proof(const std::string& text);

Model parse_kripke_model(const std::string& text);
CD5Interpretation parse_cd5_interpretation(const std::string& text);

// `# expect: ...` headers of any fixture file.
std::vector<std::string> parse_expectations(const std::string& text);

}  // namespace qfs
