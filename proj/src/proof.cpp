#include "qfs/proof.hpp"

namespace qfs {

namespace {
struct RuleInfo {
  Rule rule;
  const char* name;
  int arity;
};
constexpr RuleInfo kRules[] = {
    {Rule::Ax, "Ax", 0},       {Rule::BotL, "BotL", 0},   {Rule::Lw, "Lw", 1},
    {Rule::Rw, "Rw", 1},       {Rule::Lc, "Lc", 1},       {Rule::Rc, "Rc", 1},
    {Rule::LAnd1, "LAnd1", 1}, {Rule::LAnd2, "LAnd2", 1}, {Rule::RAnd, "RAnd", 2},
    {Rule::ROr1, "ROr1", 1},   {Rule::ROr2, "ROr2", 1},   {Rule::LOr, "LOr", 2},
    {Rule::LImp, "LImp", 2},   {Rule::RImp, "RImp", 1},   {Rule::AllL, "AllL", 1},
    {Rule::AllR, "AllR", 1},   {Rule::ExL, "ExL", 1},     {Rule::ExR, "ExR", 1},
    {Rule::Cut, "Cut", 2},
};
}  // namespace

const char* rule_name(Rule r) {
  for (const auto& ri : kRules)
    if (ri.rule == r) return ri.name;
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
  for (const auto& ri : kRules)
    if (name == ri.name) return ri.rule;
  return std::nullopt;
}

int rule_arity(Rule r) {
  for (const auto& ri : kRules)
    if (ri.rule == r) return ri.arity;
  return 0;
}

bool is_quantifier_rule(Rule r) {
  return r == Rule::AllL || r == Rule::AllR || r == Rule::ExL || r == Rule::ExR;
}

bool is_strong_rule(Rule r) { return r == Rule::AllR || r == Rule::ExL; }

bool principal_on_left(Rule r) {
  switch (r) {
    case Rule::Lw:
    case Rule::Lc:
    case Rule::LAnd1:
    case Rule::LAnd2:
    case Rule::LOr:
    case Rule::LImp:
    case Rule::AllL:
    case Rule::ExL:
      return true;
    default:
      return false;
  }
}

bool has_principal(Rule r) { return r != Rule::Ax && r != Rule::BotL && r != Rule::Cut; }

bool is_cut_free(const Proof& p) {
  if (p.rule == Rule::Cut) return false;
  for (const auto& q : p.premises)
    if (!is_cut_free(q)) return false;
  return true;
}

bool has_atomic_axioms(const Proof& p) {
  if (p.premises.empty()) {
    if (p.rule == Rule::BotL) return true;
    if (p.rule != Rule::Ax) return false;
    return p.conclusion.antecedent.size() == 1 && p.conclusion.antecedent[0].is_atomic();
  }
  for (const auto& q : p.premises)
    if (!has_atomic_axioms(q)) return false;
  return true;
}

namespace {
void skeleton_rec(const Proof& p, std::string& out) {
  if (is_quantifier_rule(p.rule)) {
    // Quantifier inferences are unary; splice them out.
    skeleton_rec(p.premises[0], out);
    return;
  }
  out += rule_name(p.rule);
  if (!p.premises.empty()) {
    out += '(';
    for (size_t i = 0; i < p.premises.size(); ++i) {
      if (i) out += ' ';
      skeleton_rec(p.premises[i], out);
    }
    out += ')';
  }
}
}  // namespace

std::string propositional_skeleton(const Proof& p) {
  std::string out;
  skeleton_rec(p, out);
  return out;
}

const ProofNode* node_at(const Proof& p, const std::vector<int>& path) {
  const ProofNode* cur = &p;
  for (int i : path) {
    if (i < 0 || static_cast<size_t>(i) >= cur->premises.size()) return nullptr;
    cur = &cur->premises[i];
  }
  return cur;
}

std::string path_string(const std::vector<int>& path) {
  if (path.empty()) return "root";
  std::string s;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(path[i]);
  }
  return s;
}

}  // namespace qfs
