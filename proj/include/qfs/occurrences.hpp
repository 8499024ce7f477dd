// Quantifier occurrence classification (polarity, strength, dominating weak
// variables) and builders/matchers for the quantifier-shift axiom instances.

#pragma once

#include <optional>
#include <vector>

#include "qfs/syntax.hpp"

namespace qfs {

enum class Polarity { Positive, Negative };
enum class Strength { Strong, Weak };

struct Occurrence {
  std::vector<int> path;  // child indices from the root (0 = left/body, 1 = right)
  Polarity polarity;
  Strength strength;
  FormulaKind quantifier;  // Forall or Exists
  std::string bound_var;
  // Weak-quantifier variables whose scope contains this occurrence,
  // outermost first.
  std::vector<std::string> dominating_weak_vars;
};

// Every quantifier occurrence of f in textual (left-to-right) order.
// `flip` starts the polarity negative, which classifies a formula as it sits
// in a sequent antecedent.
std::vector<Occurrence> classify_quantifiers(const Formula& f, bool flip = false);

// Subformula of f at the given occurrence path.
Formula subformula_at(const Formula& f, const std::vector<int>& path);

enum class ShiftKind { CD, ED, SW };

// Instance of a quantifier-shift principle:
//   CD: forall x (A(x) | B) -> (forall x A(x) | B)
//   ED: (B -> exists x A(x)) -> exists x (B -> A(x))
//   SW: (forall x A(x) -> B) -> exists x (A(x) -> B)
// `a` is the scheme formula A with `x` marking the hole; x must not be free
// in b.
Formula shift_axiom(ShiftKind kind, const Formula& a, const Formula& b, const std::string& x);

// Does f match one of the shift patterns (universal closures allowed)?
std::optional<ShiftKind> match_shift_instance(const Formula& f);

const char* shift_name(ShiftKind k);

}  // namespace qfs
