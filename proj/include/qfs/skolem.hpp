// Structural, Andrews and parallel Skolemization of closed formulas and of
// sequents, with the symbol bookkeeping deSkolemization needs later.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qfs/syntax.hpp"

namespace qfs {

enum class SkolemVariant { Structural, Andrews, Parallel };

struct SkolemEntry {
  std::string symbol;  // arity 0 entries name a fresh free variable
  int arity = 0;
  std::vector<int> source_path;       // occurrence path of the removed quantifier
  std::vector<std::string> deps;      // dependency variables, outermost first
  SkolemVariant variant = SkolemVariant::Structural;
  int parallel_index = 0;             // i of n for the parallel variant
};

struct SkolemSignature {
  std::vector<SkolemEntry> entries;

  bool is_skolem_symbol(const std::string& name) const;
  std::string table() const;  // printable signature table
};

// Removes the first strong quantifier (reading left to right), replacing its
// variable by a fresh constant or sk(x1,...,xn) over the dominating weak
// variables, and recurses until no strong quantifier remains. Rejects open
// formulas naming the offending free variable.
std::pair<Formula, SkolemSignature> skolemize_structural(const Formula& f);
// As structural, but the Skolem function depends only on the dominating weak
// variables free in the subformula the strong quantifier dominates.
std::pair<Formula, SkolemSignature> skolemize_andrews(const Formula& f);
// Each strong exists becomes an n-fold disjunction, each strong forall an
// n-fold conjunction, over n fresh symbols; n >= 1.
std::pair<Formula, SkolemSignature> skolemize_parallel(const Formula& f, int degree);

// Quantifiers strong in the sequent (strong in succedent formulas, weak in
// antecedent formulas) are eliminated; every formula gets its own disjoint
// fresh symbols.
std::pair<Sequent, SkolemSignature> skolemize_sequent(const Sequent& s, SkolemVariant variant,
                                                      int degree = 1);

}  // namespace qfs
