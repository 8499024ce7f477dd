#include "qfs/kripke.hpp"

#include <algorithm>
#include <sstream>

#include "qfs/printer.hpp"

namespace qfs {

int Frame::world_index(const std::string& name) const {
  for (size_t i = 0; i < worlds.size(); ++i)
    if (worlds[i] == name) return static_cast<int>(i);
  return -1;
}

void Frame::validate() const {
  size_t n = worlds.size();
  if (n == 0) throw Error("frame has no worlds");
  if (leq.size() != n || domains.size() != n) throw Error("frame tables out of shape");
  for (size_t i = 0; i < n; ++i) {
    if (!leq[i][i]) throw Error("order not reflexive at " + worlds[i]);
    if (domains[i].empty()) throw Error("world " + worlds[i] + " has an empty domain");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (i != j && leq[i][j] && leq[j][i])
        throw Error("order not antisymmetric between " + worlds[i] + " and " + worlds[j]);
      if (leq[i][j]) {
        for (size_t k = 0; k < n; ++k)
          if (leq[j][k] && !leq[i][k]) throw Error("order not transitive");
        for (const auto& d : domains[i])
          if (!domains[j].count(d))
            throw Error("domain not monotone: element '" + d + "' of " + worlds[i] +
                        " missing at " + worlds[j]);
      }
    }
}

bool Model::atom_forced(const std::string& pred, int world,
                        const std::vector<std::string>& tup) const {
  auto pit = atoms.find(pred);
  if (pit == atoms.end()) return false;
  auto wit = pit->second.find(world);
  return wit != pit->second.end() && wit->second.count(tup) > 0;
}

void Model::validate() const {
  size_t n = frame.worlds.size();
  for (const auto& [pred, perworld] : atoms) {
    for (const auto& [w, tups] : perworld) {
      for (const auto& tup : tups) {
        for (const auto& e : tup)
          if (!frame.domains[w].count(e))
            throw Error("atom " + pred + " at " + frame.worlds[w] + " uses element '" + e +
                        "' outside the world's domain");
        // persistence
        for (size_t v = 0; v < n; ++v)
          if (frame.leq[w][v] && !atom_forced(pred, static_cast<int>(v), tup))
            throw Error("valuation not persistent: " + pred + " forced at " + frame.worlds[w] +
                        " but not at " + frame.worlds[v]);
      }
    }
  }
}

namespace {

bool forces_rec(const Model& m, int w, const Formula& f) {
  const Frame& fr = m.frame;
  switch (f.kind()) {
    case FormulaKind::Bottom:
      return false;
    case FormulaKind::Top:
      return true;
    case FormulaKind::Atom: {
      std::vector<std::string> tup;
      tup.reserve(f.args().size());
      for (const auto& t : f.args()) {
        if (!t.is_var())
          throw Error("forces: function symbols are not supported (term " + print(t) + ")");
        tup.push_back(t.head());
      }
      return m.atom_forced(f.pred(), w, tup);
    }
    case FormulaKind::And:
      return forces_rec(m, w, f.lhs()) && forces_rec(m, w, f.rhs());
    case FormulaKind::Or:
      return forces_rec(m, w, f.lhs()) || forces_rec(m, w, f.rhs());
    case FormulaKind::Implies: {
      for (size_t v = 0; v < fr.worlds.size(); ++v)
        if (fr.leq[w][v] && forces_rec(m, static_cast<int>(v), f.lhs()) &&
            !forces_rec(m, static_cast<int>(v), f.rhs()))
          return false;
      return true;
    }
    case FormulaKind::Exists: {
      for (const auto& d : fr.domains[w])
        if (forces_rec(m, w, substitute(f.body(), f.var(), Term::var(d)))) return true;
      return false;
    }
    case FormulaKind::Forall: {
      for (size_t v = 0; v < fr.worlds.size(); ++v) {
        if (!fr.leq[w][v]) continue;
        for (const auto& d : fr.domains[v])
          if (!forces_rec(m, static_cast<int>(v),
                          substitute(f.body(), f.var(), Term::var(d))))
            return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

bool forces(const Model& m, int world, const Formula& f) {
  // Free variables are read as domain constants and must live in D_w.
  for (const auto& v : free_vars(f))
    if (!m.frame.domains[world].count(v))
      throw Error("constant '" + v + "' is not in the domain of world " +
                  m.frame.worlds[world]);
  return forces_rec(m, world, f);
}

bool forces(const Model& m, const std::string& world, const Formula& f) {
  int w = m.frame.world_index(world);
  if (w < 0) throw Error("unknown world '" + world + "'");
  return forces(m, w, f);
}

namespace {

std::vector<std::vector<int>> components(const Frame& fr) {
  size_t n = fr.worlds.size();
  std::vector<int> comp(n, -1);
  int next = 0;
  for (size_t i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = next;
    std::vector<size_t> stack{i};
    while (!stack.empty()) {
      size_t u = stack.back();
      stack.pop_back();
      for (size_t v = 0; v < n; ++v)
        if ((fr.leq[u][v] || fr.leq[v][u]) && comp[v] < 0) {
          comp[v] = next;
          stack.push_back(v);
        }
    }
    ++next;
  }
  std::vector<std::vector<int>> out(next);
  for (size_t i = 0; i < n; ++i) out[comp[i]].push_back(static_cast<int>(i));
  return out;
}

}  // namespace

FrameReport frame_properties(const Frame& fr) {
  FrameReport r;
  size_t n = fr.worlds.size();

  r.constant_domain = true;
  for (size_t v = 0; v < n && r.constant_domain; ++v)
    for (size_t u = 0; u < n; ++u)
      if (fr.leq[v][u] && fr.domains[v] != fr.domains[u]) {
        r.constant_domain = false;
        r.witnesses.push_back("constant_domain fails: D(" + fr.worlds[v] + ") != D(" +
                              fr.worlds[u] + ")");
        break;
      }

  r.linear = true;
  for (size_t w = 0; w < n && r.linear; ++w)
    for (size_t u = 0; u < n && r.linear; ++u)
      for (size_t v = 0; v < n; ++v)
        if (fr.leq[w][u] && fr.leq[w][v] && !fr.leq[u][v] && !fr.leq[v][u]) {
          r.linear = false;
          r.witnesses.push_back("linear fails: fork " + fr.worlds[u] + ", " + fr.worlds[v] +
                                " above " + fr.worlds[w]);
          break;
        }

  r.fds = true;
  for (size_t w = 0; w < n && r.fds; ++w)
    for (size_t u = 0; u < n && r.fds; ++u)
      for (size_t v = 0; v < n; ++v) {
        if (u == v || !fr.leq[w][u] || !fr.leq[w][v]) continue;
        if (fr.domains[u] != fr.domains[v] || fr.domains[u] != fr.domains[w] ||
            fr.domains[w].size() != 1) {
          r.fds = false;
          r.witnesses.push_back("FDS fails at fork " + fr.worlds[u] + ", " + fr.worlds[v] +
                                " above " + fr.worlds[w]);
          break;
        }
      }

  // Finite posets are well-founded in both directions.
  r.wf = true;
  r.cwf = true;

  r.classification = classify_frame(fr);
  return r;
}

FrameClass classify_frame(const Frame& fr) {
  // Class F is closed under disjoint union, so each order-component must be
  // constant domain and either singleton-domain or linear.
  for (const auto& comp : components(fr)) {
    bool constant = true, linear = true, singleton = true;
    for (int v : comp) {
      if (fr.domains[v].size() != 1) singleton = false;
      for (int u : comp) {
        if (fr.leq[v][u] && fr.domains[v] != fr.domains[u]) constant = false;
        for (int w : comp)
          if (fr.leq[w][u] && fr.leq[w][v] && !fr.leq[u][v] && !fr.leq[v][u]) linear = false;
      }
    }
    if (!constant || !(singleton || linear)) return FrameClass::Outside;
  }
  return FrameClass::InF;
}

const char* frame_class_name(FrameClass c) {
  switch (c) {
    case FrameClass::InF: return "in_F";
    case FrameClass::InF_ED_only: return "in_F_ED_only";
    case FrameClass::InF_SW_only: return "in_F_SW_only";
    case FrameClass::Outside: return "outside";
  }
  return "?";
}

namespace {

// Enumerates persistent valuations of {P/1, Q/0} on the frame: up-closed
// subsets of the world poset for Q and of the (world, element) poset for P.
struct ValuationSpace {
  const Frame& fr;
  std::vector<std::pair<int, std::string>> ppoints;  // (world, element)
  std::vector<uint32_t> pup;  // for each P point, bitmask of worlds >= its world
  size_t n;

  explicit ValuationSpace(const Frame& f) : fr(f), n(f.worlds.size()) {
    for (size_t w = 0; w < n; ++w)
      for (const auto& d : f.domains[w]) ppoints.emplace_back(static_cast<int>(w), d);
  }

  bool q_upclosed(uint32_t qmask) const {
    for (size_t v = 0; v < n; ++v)
      if (qmask & (1u << v))
        for (size_t u = 0; u < n; ++u)
          if (fr.leq[v][u] && !(qmask & (1u << u))) return false;
    return true;
  }

  bool p_upclosed(uint64_t pmask) const {
    for (size_t i = 0; i < ppoints.size(); ++i) {
      if (!(pmask & (1ull << i))) continue;
      auto [w, d] = ppoints[i];
      for (size_t j = 0; j < ppoints.size(); ++j) {
        auto [v, e] = ppoints[j];
        if (e == d && fr.leq[w][v] && !(pmask & (1ull << j))) return false;
      }
    }
    return true;
  }

  Model build(uint64_t pmask, uint32_t qmask) const {
    Model m;
    m.frame = fr;
    for (size_t v = 0; v < n; ++v)
      if (qmask & (1u << v)) m.atoms["Q"][static_cast<int>(v)].insert({});
    for (size_t i = 0; i < ppoints.size(); ++i)
      if (pmask & (1ull << i)) m.atoms["P"][ppoints[i].first].insert({ppoints[i].second});
    return m;
  }
};

}  // namespace

std::pair<bool, std::optional<Model>> axiom_valid_on_frame(const Frame& fr, ShiftKind kind,
                                                           std::string* world_out) {
  fr.validate();
  if (fr.worlds.size() > 30) throw Error("axiom_valid_on_frame: too many worlds");
  ValuationSpace vs(fr);
  if (vs.ppoints.size() > 24)
    throw Error("axiom_valid_on_frame: valuation space too large (cap exceeded)");

  Formula ax = shift_axiom(kind, Formula::atom("P", {Term::var("x")}), Formula::atom("Q"), "x");

  for (uint64_t pmask = 0; pmask < (1ull << vs.ppoints.size()); ++pmask) {
    if (!vs.p_upclosed(pmask)) continue;
    for (uint32_t qmask = 0; qmask < (1u << fr.worlds.size()); ++qmask) {
      if (!vs.q_upclosed(qmask)) continue;
      Model m = vs.build(pmask, qmask);
      for (size_t w = 0; w < fr.worlds.size(); ++w) {
        if (!forces(m, static_cast<int>(w), ax)) {
          if (world_out) *world_out = fr.worlds[w];
          return {false, std::move(m)};
        }
      }
    }
  }
  return {true, std::nullopt};
}

Model incompleteness_model() {
  Model m;
  m.frame.worlds = {"w1", "w2", "w3"};
  m.frame.leq = {{true, true, true}, {false, true, false}, {false, false, true}};
  m.frame.domains = {{"a", "b"}, {"a", "b"}, {"a", "b"}};
  m.atoms["R"][0].insert({"a"});
  m.atoms["R"][1].insert({"a"});
  m.atoms["R"][1].insert({"b"});
  m.atoms["R"][2].insert({"a"});
  m.atoms["R"][2].insert({"b"});
  m.atoms["P"][1].insert({});
  m.atoms["Q"][2].insert({});
  m.frame.validate();
  m.validate();
  return m;
}

namespace {

// Forcing profiles over the incompleteness model for formulas with free
// variables among {x, y}: one bit per (world, x-element, y-element).
// Composition of profiles is exact for the Kripke clauses, so enumerating
// profiles instead of formulas loses nothing and collapses duplicates.
struct Profile {
  // idx = ((w * 2) + xi) * 2 + yi
  uint16_t bits = 0;
  Formula repr;  // one representative formula with this profile
};

constexpr int kWorlds = 3, kElems = 2;

int pidx(int w, int xi, int yi) { return (w * kElems + xi) * kElems + yi; }

bool pget(uint16_t bits, int w, int xi, int yi) { return bits >> pidx(w, xi, yi) & 1; }

void pset(uint16_t& bits, int w, int xi, int yi, bool v) {
  if (v) bits |= uint16_t(1u << pidx(w, xi, yi));
}

}  // namespace

IncompletenessReport check_incompleteness_witness(int claim_depth) {
  IncompletenessReport rep;
  rep.claim_depth = claim_depth;
  Model m = incompleteness_model();

  // (i) the Lin v OEP instance fails at w1.
  Formula p = Formula::atom("P"), q = Formula::atom("Q");
  Formula rx = Formula::atom("R", {Term::var("x")});
  Formula lin = Formula::disj(Formula::implies(p, q), Formula::implies(q, p));
  Formula oep = Formula::implies(Formula::exists("x", rx), Formula::forall("x", rx));
  Formula inst = Formula::disj(lin, oep);
  rep.lin_oep_fails = !forces(m, "w1", inst);
  if (!rep.lin_oep_fails) rep.failures.push_back("Lin v OEP instance is forced at w1");

  // (ii) atomic CD/ED/SW instances over {P, Q nullary; R unary} hold everywhere.
  std::vector<std::pair<std::string, Formula>> a_slot = {
      {"R(x)", rx},
      {"P", p},
      {"Q", q},
      {"R(a)", Formula::atom("R", {Term::var("a")})},
      {"R(b)", Formula::atom("R", {Term::var("b")})},
  };
  std::vector<Formula> b_slot = {p, q, Formula::atom("R", {Term::var("a")}),
                                 Formula::atom("R", {Term::var("b")})};
  for (ShiftKind kind : {ShiftKind::CD, ShiftKind::ED, ShiftKind::SW})
    for (const auto& [aname, a] : a_slot)
      for (const auto& b : b_slot) {
        Formula ax = shift_axiom(kind, a, b, "x");
        for (const auto& w : m.frame.worlds)
          if (!forces(m, w, ax)) {
            rep.shift_instances_hold = false;
            rep.failures.push_back(std::string(shift_name(kind)) + " instance with A=" + aname +
                                   ", B=" + print(b) + " fails at " + w);
          }
      }

  // (iii) the homogeneity claim at w2/w3, over all forcing profiles of
  // formulas up to the given operator depth.
  std::map<uint16_t, Formula> seen;
  std::vector<Profile> frontier;
  auto add = [&](uint16_t bits, const Formula& f) {
    if (seen.emplace(bits, f).second) frontier.push_back({bits, f});
  };

  auto atom_profile = [&](const Formula& f) {
    uint16_t bits = 0;
    const std::string elems[kElems] = {"a", "b"};
    for (int w = 0; w < kWorlds; ++w)
      for (int xi = 0; xi < kElems; ++xi)
        for (int yi = 0; yi < kElems; ++yi) {
          Formula g = substitute(f, "x", Term::var(elems[xi]));
          g = substitute(g, "y", Term::var(elems[yi]));
          pset(bits, w, xi, yi, forces(m, w, g));
        }
    return bits;
  };

  for (const auto& f : {Formula::bottom(), Formula::top(), p, q, rx,
                        Formula::atom("R", {Term::var("y")})})
    add(atom_profile(f), f);

  // leq over the fork: w1 <= w2, w1 <= w3.
  auto world_leq = [](int v, int w) { return v == w || v == 0; };

  std::vector<Profile> all(frontier);
  for (int depth = 1; depth <= claim_depth; ++depth) {
    std::vector<Profile> next;
    auto emit = [&](uint16_t bits, Formula f) {
      if (seen.emplace(bits, f).second) next.push_back({bits, std::move(f)});
    };
    // Binary combinations: one operand from the frontier (depth-1 exact), the
    // other from anything seen so far; both orders for ->.
    std::vector<Profile> pool(all);
    for (const auto& fa : (depth == 1 ? all : frontier))
      for (const auto& fb : pool) {
        emit(fa.bits & fb.bits, Formula::conj(fa.repr, fb.repr));
        emit(fa.bits | fb.bits, Formula::disj(fa.repr, fb.repr));
        for (const auto* lhs : {&fa, &fb}) {
          const auto* rhs = lhs == &fa ? &fb : &fa;
          uint16_t bits = 0;
          for (int w = 0; w < kWorlds; ++w)
            for (int xi = 0; xi < kElems; ++xi)
              for (int yi = 0; yi < kElems; ++yi) {
                bool ok = true;
                for (int v = 0; v < kWorlds && ok; ++v)
                  if (world_leq(w, v) && pget(lhs->bits, v, xi, yi) &&
                      !pget(rhs->bits, v, xi, yi))
                    ok = false;
                pset(bits, w, xi, yi, ok);
              }
          emit(bits, Formula::implies(lhs->repr, rhs->repr));
        }
      }
    // Quantifiers over x and y.
    for (const auto& fa : (depth == 1 ? all : frontier)) {
      for (int var = 0; var < 2; ++var) {
        const char* vn = var == 0 ? "x" : "y";
        uint16_t abits = 0, ebits = 0;
        for (int w = 0; w < kWorlds; ++w)
          for (int xi = 0; xi < kElems; ++xi)
            for (int yi = 0; yi < kElems; ++yi) {
              bool all_ok = true, some = false;
              for (int v = 0; v < kWorlds; ++v) {
                if (!world_leq(w, v)) continue;
                for (int d = 0; d < kElems; ++d) {
                  bool val = var == 0 ? pget(fa.bits, v, d, yi) : pget(fa.bits, v, xi, d);
                  if (!val) all_ok = false;
                }
              }
              for (int d = 0; d < kElems; ++d) {
                bool val = var == 0 ? pget(fa.bits, w, d, yi) : pget(fa.bits, w, xi, d);
                if (val) some = true;
              }
              pset(abits, w, xi, yi, all_ok);
              pset(ebits, w, xi, yi, some);
            }
        emit(abits, Formula::forall(vn, fa.repr));
        emit(ebits, Formula::exists(vn, fa.repr));
      }
    }
    frontier = std::move(next);
    for (const auto& f : frontier) all.push_back(f);
  }

  rep.claim_formulas_checked = seen.size();
  for (const auto& [bits, repr] : seen) {
    // psi(x): at the final worlds w2 and w3, psi(a) and psi(b) are forced
    // together or refuted together. A free y is sliced to a and to b, which
    // checks psi(x, a) and psi(x, b) as well.
    for (int w : {1, 2})
      for (int yi = 0; yi < kElems; ++yi) {
        bool fa = pget(bits, w, 0, yi), fb = pget(bits, w, 1, yi);
        if (fa != fb) {
          rep.claim_holds = false;
          rep.failures.push_back("claim fails at " + m.frame.worlds[w] + " for psi(x) = " +
                                 print(repr));
        }
      }
  }
  return rep;
}

}  // namespace qfs
