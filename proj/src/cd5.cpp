#include "qfs/cd5.hpp"

#include <algorithm>
#include <sstream>

#include "qfs/printer.hpp"
#include "qfs/skolem.hpp"

namespace qfs {

namespace {
// Enumeration order 000 < 100, 010 < 110 < 111 (lattice layers bottom-up).
constexpr int kA[5] = {0, 1, 0, 1, 1};
constexpr int kB[5] = {0, 0, 1, 1, 1};
constexpr int kC[5] = {0, 0, 0, 0, 1};
}  // namespace

CD5Value CD5Value::make(int a, int b, int c) {
  for (int i = 0; i < 5; ++i)
    if (kA[i] == a && kB[i] == b && kC[i] == c) return CD5Value(i);
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ") is not one of the five lattice points";
  throw Error(os.str());
}

const std::vector<CD5Value>& CD5Value::all() {
  static const std::vector<CD5Value> v = {CD5Value(0), CD5Value(1), CD5Value(2), CD5Value(3),
                                          CD5Value(4)};
  return v;
}

int CD5Value::a() const { return kA[idx_]; }
int CD5Value::b() const { return kB[idx_]; }
int CD5Value::c() const { return kC[idx_]; }

bool CD5Value::leq(CD5Value o) const { return a() <= o.a() && b() <= o.b() && c() <= o.c(); }

CD5Value CD5Value::sup(CD5Value o) const {
  return make(std::max(a(), o.a()), std::max(b(), o.b()), std::max(c(), o.c()));
}

CD5Value CD5Value::inf(CD5Value o) const {
  return make(std::min(a(), o.a()), std::min(b(), o.b()), std::min(c(), o.c()));
}

CD5Value CD5Value::imp(CD5Value o) const {
  CD5Value best = bottom();
  for (CD5Value z : all())
    if (z.inf(*this).leq(o) && best.leq(z)) best = z;
  return best;
}

std::string CD5Value::str() const {
  std::string s;
  s += char('0' + a());
  s += char('0' + b());
  s += char('0' + c());
  return s;
}

std::string CD5Interpretation::describe() const {
  std::ostringstream os;
  os << "domain";
  for (const auto& d : domain) os << ' ' << d;
  os << '\n';
  for (const auto& [pred, table] : atoms)
    for (const auto& [tup, val] : table) {
      os << "atom " << pred;
      if (!tup.empty()) {
        os << '(';
        for (size_t i = 0; i < tup.size(); ++i) os << (i ? "," : "") << tup[i];
        os << ')';
      }
      os << ' ' << val.str() << '\n';
    }
  for (const auto& [fn, table] : funcs)
    for (const auto& [tup, out] : table) {
      os << "fun " << fn << '(';
      for (size_t i = 0; i < tup.size(); ++i) os << (i ? "," : "") << tup[i];
      os << ") " << out << '\n';
    }
  return os.str();
}

namespace {

std::string eval_term(const CD5Interpretation& in, const Term& t,
                      const std::map<std::string, std::string>& env) {
  if (t.is_var()) {
    auto it = env.find(t.head());
    if (it != env.end()) return it->second;
    // A free variable doubles as a domain constant if it names an element.
    if (std::find(in.domain.begin(), in.domain.end(), t.head()) != in.domain.end())
      return t.head();
    throw Error("unbound variable '" + t.head() + "' in CD5 evaluation");
  }
  auto fit = in.funcs.find(t.head());
  if (fit == in.funcs.end())
    throw Error("function symbol '" + t.head() + "' has no interpretation");
  std::vector<std::string> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(eval_term(in, a, env));
  auto vit = fit->second.find(args);
  if (vit == fit->second.end())
    throw Error("function '" + t.head() + "' undefined on an argument tuple");
  return vit->second;
}

CD5Value eval_rec(const CD5Interpretation& in, const Formula& f,
                  std::map<std::string, std::string>& env) {
  switch (f.kind()) {
    case FormulaKind::Bottom:
      return CD5Value::bottom();
    case FormulaKind::Top:
      return CD5Value::designated();
    case FormulaKind::Atom: {
      auto pit = in.atoms.find(f.pred());
      bool known = pit != in.atoms.end() || in.pred_arity.count(f.pred());
      if (!known) throw Error("predicate '" + f.pred() + "' has no interpretation");
      std::vector<std::string> tup;
      tup.reserve(f.args().size());
      for (const auto& t : f.args()) tup.push_back(eval_term(in, t, env));
      if (pit == in.atoms.end()) return CD5Value::bottom();
      auto vit = pit->second.find(tup);
      return vit == pit->second.end() ? CD5Value::bottom() : vit->second;
    }
    case FormulaKind::And:
      return eval_rec(in, f.lhs(), env).inf(eval_rec(in, f.rhs(), env));
    case FormulaKind::Or:
      return eval_rec(in, f.lhs(), env).sup(eval_rec(in, f.rhs(), env));
    case FormulaKind::Implies:
      return eval_rec(in, f.lhs(), env).imp(eval_rec(in, f.rhs(), env));
    case FormulaKind::Forall: {
      CD5Value acc = CD5Value::designated();
      for (const auto& d : in.domain) {
        auto saved = env.find(f.var()) != env.end()
                         ? std::optional<std::string>(env[f.var()])
                         : std::nullopt;
        env[f.var()] = d;
        acc = acc.inf(eval_rec(in, f.body(), env));
        if (saved) env[f.var()] = *saved; else env.erase(f.var());
      }
      return acc;
    }
    case FormulaKind::Exists: {
      CD5Value acc = CD5Value::bottom();
      for (const auto& d : in.domain) {
        auto saved = env.find(f.var()) != env.end()
                         ? std::optional<std::string>(env[f.var()])
                         : std::nullopt;
        env[f.var()] = d;
        acc = acc.sup(eval_rec(in, f.body(), env));
        if (saved) env[f.var()] = *saved; else env.erase(f.var());
      }
      return acc;
    }
  }
  throw Error("cd5_eval: unreachable");
}

struct Signature {
  std::map<std::string, int> preds;
  std::map<std::string, int> funcs;  // includes Skolem symbols when present
  std::set<std::string> consts;      // free variables, read as constants
};

void scan(const Formula& f, std::set<std::string>& bound, Signature& sig) {
  switch (f.kind()) {
    case FormulaKind::Atom: {
      sig.preds.emplace(f.pred(), static_cast<int>(f.args().size()));
      std::vector<const Term*> stack;
      for (const auto& t : f.args()) stack.push_back(&t);
      while (!stack.empty()) {
        const Term* t = stack.back();
        stack.pop_back();
        if (t->is_var()) {
          if (!bound.count(t->head())) sig.consts.insert(t->head());
        } else {
          sig.funcs.emplace(t->head(), static_cast<int>(t->args().size()));
          for (const auto& a : t->args()) stack.push_back(&a);
        }
      }
      return;
    }
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      scan(f.lhs(), bound, sig);
      scan(f.rhs(), bound, sig);
      return;
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      bool fresh = bound.insert(f.var()).second;
      scan(f.body(), bound, sig);
      if (fresh) bound.erase(f.var());
      return;
    }
    default:
      return;
  }
}

// Odometer over all interpretations of the signature with the given domain.
// Returns false when exhausted.
struct InterpEnum {
  std::vector<std::string> domain;
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> pred_slots;
  std::vector<std::pair<std::string, std::vector<std::vector<std::string>>>> func_slots;
  std::vector<int> pred_digits;  // base 5
  std::vector<int> func_digits;  // base |domain|
  uint64_t total = 1;

  static std::vector<std::vector<std::string>> tuples(const std::vector<std::string>& dom,
                                                      int arity) {
    std::vector<std::vector<std::string>> out{{}};
    for (int i = 0; i < arity; ++i) {
      std::vector<std::vector<std::string>> next;
      for (const auto& t : out)
        for (const auto& d : dom) {
          auto u = t;
          u.push_back(d);
          next.push_back(std::move(u));
        }
      out = std::move(next);
    }
    return out;
  }

  InterpEnum(const Signature& sig, std::vector<std::string> dom) : domain(std::move(dom)) {
    auto mul = [this](uint64_t k) {
      total = total > (uint64_t(1) << 62) / k ? (uint64_t(1) << 62) : total * k;
    };
    for (const auto& [p, ar] : sig.preds) {
      pred_slots.emplace_back(p, tuples(domain, ar));
      for (size_t i = 0; i < pred_slots.back().second.size(); ++i) mul(5);
    }
    for (const auto& [fn, ar] : sig.funcs) {
      func_slots.emplace_back(fn, tuples(domain, ar));
      for (size_t i = 0; i < func_slots.back().second.size(); ++i) mul(domain.size());
    }
    for (const auto& [p, tups] : pred_slots) pred_digits.resize(pred_digits.size() + tups.size(), 0);
    for (const auto& [f, tups] : func_slots) func_digits.resize(func_digits.size() + tups.size(), 0);
  }

  CD5Interpretation build(const Signature& sig) const {
    CD5Interpretation in;
    in.domain = domain;
    for (const auto& [p, ar] : sig.preds) in.pred_arity[p] = ar;
    size_t k = 0;
    for (const auto& [p, tups] : pred_slots)
      for (const auto& t : tups) in.atoms[p].emplace(t, CD5Value::all()[pred_digits[k++]]);
    k = 0;
    for (const auto& [fn, tups] : func_slots)
      for (const auto& t : tups) in.funcs[fn][t] = domain[func_digits[k++]];
    return in;
  }

  bool advance() {
    for (size_t i = 0; i < pred_digits.size(); ++i) {
      if (++pred_digits[i] < 5) return true;
      pred_digits[i] = 0;
    }
    for (size_t i = 0; i < func_digits.size(); ++i) {
      if (++func_digits[i] < static_cast<int>(domain.size())) return true;
      func_digits[i] = 0;
    }
    return false;
  }
};

}  // namespace

CD5Value cd5_eval(const CD5Interpretation& interp, const Formula& f) {
  std::map<std::string, std::string> env;
  return eval_rec(interp, f, env);
}

CD5Verdict cd5_valid_bounded(const Formula& f, int max_domain, uint64_t budget) {
  if (max_domain < 1) throw Error("cd5_valid_bounded: max_domain must be >= 1");
  Signature sig;
  std::set<std::string> bound;
  scan(f, bound, sig);
  if (!sig.consts.empty())
    throw Error("cd5_valid_bounded: formula is not closed (free '" + *sig.consts.begin() +
                "')");
  CD5Verdict verdict;
  for (int m = 1; m <= max_domain; ++m) {
    std::vector<std::string> dom;
    for (int i = 1; i <= m; ++i) dom.push_back("d" + std::to_string(i));
    InterpEnum en(sig, dom);
    if (verdict.interpretations_tried + en.total > budget)
      throw ResourceError("cd5_valid_bounded: enumeration budget exceeded (" +
                          std::to_string(en.total) + " interpretations at domain size " +
                          std::to_string(m) + ")");
    while (true) {
      CD5Interpretation in = en.build(sig);
      ++verdict.interpretations_tried;
      if (!cd5_eval(in, f).is_designated()) {
        verdict.valid = false;
        verdict.countermodel = std::move(in);
        return verdict;
      }
      if (!en.advance()) break;
    }
  }
  return verdict;
}

CD5CrosscheckReport cd5_crosscheck_parallel(const Formula& f, int degree, int max_domain,
                                            uint64_t budget) {
  CD5CrosscheckReport rep;
  auto [skolemized, sig] = skolemize_parallel(f, degree);
  rep.skolemized = skolemized;

  CD5Verdict orig = cd5_valid_bounded(f, max_domain, budget);
  rep.original_valid = orig.valid;
  rep.original_witness = orig.countermodel;

  // Skolem constants come out as fresh free variables. Their values range
  // over the domain like the Skolem function tables, so validity of A^SP is
  // validity of its universal closure over them (inf over all values is
  // designated iff every value designates).
  Formula closed_sk = skolemized;
  for (const auto& e : sig.entries)
    if (e.arity == 0) closed_sk = Formula::forall(e.symbol, closed_sk);

  CD5Verdict sk = cd5_valid_bounded(closed_sk, max_domain, budget);
  rep.skolemized_valid = sk.valid;
  rep.skolemized_witness = sk.countermodel;
  rep.agree = rep.original_valid == rep.skolemized_valid;
  return rep;
}

}  // namespace qfs
