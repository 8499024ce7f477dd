#include "qfs/printer.hpp"

namespace qfs {

std::string print(const Term& t) {
  if (t.is_var()) return t.head();
  std::string s = t.head();
  s += '(';
  for (size_t i = 0; i < t.args().size(); ++i) {
    if (i) s += ',';
    s += print(t.args()[i]);
  }
  s += ')';
  return s;
}

namespace {

// Precedence: -> (1, right assoc) < | (2) < & (3) < unary (4). Quantifiers and
// ~ take a unary-level argument, so their bodies parenthesize anything looser.
constexpr int kImp = 1, kOr = 2, kAnd = 3, kUnary = 4;

void print_rec(const Formula& f, int min_prec, std::string& out) {
  auto wrap = [&](int prec, auto&& inner) {
    bool paren = prec < min_prec;
    if (paren) out += '(';
    inner();
    if (paren) out += ')';
  };
  if (f.is_negation()) {
    wrap(kUnary, [&] {
      out += '~';
      print_rec(f.lhs(), kUnary, out);
    });
    return;
  }
  switch (f.kind()) {
    case FormulaKind::Bottom:
      out += "_|_";
      return;
    case FormulaKind::Top:
      out += 'T';
      return;
    case FormulaKind::Atom:
      out += f.pred();
      if (!f.args().empty()) {
        out += '(';
        for (size_t i = 0; i < f.args().size(); ++i) {
          if (i) out += ',';
          out += print(f.args()[i]);
        }
        out += ')';
      }
      return;
    case FormulaKind::And:
      wrap(kAnd, [&] {
        print_rec(f.lhs(), kAnd, out);
        out += " & ";
        print_rec(f.rhs(), kAnd + 1, out);
      });
      return;
    case FormulaKind::Or:
      wrap(kOr, [&] {
        print_rec(f.lhs(), kOr, out);
        out += " | ";
        print_rec(f.rhs(), kOr + 1, out);
      });
      return;
    case FormulaKind::Implies:
      wrap(kImp, [&] {
        print_rec(f.lhs(), kImp + 1, out);
        out += " -> ";
        print_rec(f.rhs(), kImp, out);
      });
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      wrap(kUnary, [&] {
        out += f.kind() == FormulaKind::Forall ? "forall " : "exists ";
        out += f.var();
        out += ". ";
        print_rec(f.body(), kUnary, out);
      });
      return;
  }
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_rec(f, 0, out);
  return out;
}

std::string print(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.antecedent.size(); ++i) {
    if (i) out += ", ";
    out += print(s.antecedent[i]);
  }
  if (!s.antecedent.empty()) out += ' ';
  out += "=>";
  for (size_t i = 0; i < s.succedent.size(); ++i) {
    out += i ? ", " : " ";
    out += print(s.succedent[i]);
  }
  return out;
}

namespace {
void print_proof_rec(const Proof& p, int depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += rule_name(p.rule);
  if (p.principal >= 0) {
    out += " [";
    out += std::to_string(p.principal);
    out += ']';
  }
  if (p.term) {
    out += " [";
    out += print(*p.term);
    out += ']';
  }
  if (p.cut_formula) {
    out += " [";
    out += print(*p.cut_formula);
    out += ']';
  }
  out += " ; ";
  out += print(p.conclusion);
  out += '\n';
  for (const auto& q : p.premises) print_proof_rec(q, depth + 1, out);
}
}  // namespace

std::string print(const Proof& p) {
  std::string out;
  print_proof_rec(p, 0, out);
  return out;
}

}  // namespace qfs
