#include "qfs/parser.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qfs {

namespace {

bool lower_start(const std::string& s) { return !s.empty() && std::islower((unsigned char)s[0]); }
bool upper_start(const std::string& s) { return !s.empty() && std::isupper((unsigned char)s[0]); }

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace((unsigned char)text[pos])) ++pos;
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  [[noreturn]] void fail(const std::string& what, std::set<std::string> expected,
                         size_t start) const {
    std::ostringstream os;
    os << "syntax error at offset " << start << ": " << what;
    if (!expected.empty()) {
      os << " (expected";
      for (const auto& e : expected) os << ' ' << e;
      os << ')';
    }
    throw ParseError(os.str(), SourceSpan{start, std::min(start + 1, text.size())},
                     std::move(expected));
  }

  bool peek_sym(const std::string& s) {
    skip_ws();
    return text.compare(pos, s.size(), s) == 0;
  }

  bool eat_sym(const std::string& s) {
    if (!peek_sym(s)) return false;
    pos += s.size();
    return true;
  }

  void expect_sym(const std::string& s) {
    skip_ws();
    if (!eat_sym(s)) fail("unexpected input", {"'" + s + "'"}, pos);
  }

  // Identifier: letter then letters/digits/underscore. Empty if none.
  std::string peek_ident() {
    skip_ws();
    size_t p = pos;
    if (p >= text.size() || !std::isalpha((unsigned char)text[p])) return {};
    size_t q = p;
    while (q < text.size() &&
           (std::isalnum((unsigned char)text[q]) || text[q] == '_'))
      ++q;
    return text.substr(p, q - p);
  }

  std::string eat_ident() {
    std::string id = peek_ident();
    pos += id.size();
    return id;
  }
};

bool reserved(const std::string& id) { return id == "forall" || id == "exists" || id == "T"; }

Term parse_term_rec(Lexer& lx) {
  lx.skip_ws();
  size_t start = lx.pos;
  std::string id = lx.eat_ident();
  if (id.empty() || !lower_start(id) || reserved(id))
    lx.fail("expected term", {"variable", "function"}, start);
  if (!lx.eat_sym("(")) return Term::var(id);
  std::vector<Term> args;
  if (!lx.peek_sym(")")) {
    args.push_back(parse_term_rec(lx));
    while (lx.eat_sym(",")) args.push_back(parse_term_rec(lx));
  }
  lx.expect_sym(")");
  if (args.empty())
    lx.fail("nullary application '" + id + "()'; write a bare variable instead", {}, start);
  return Term::app(id, std::move(args));
}

Formula parse_formula_rec(Lexer& lx);

Formula parse_unary(Lexer& lx) {
  lx.skip_ws();
  size_t start = lx.pos;
  if (lx.eat_sym("~")) return Formula::neg(parse_unary(lx));
  if (lx.eat_sym("_|_")) return Formula::bottom();
  if (lx.eat_sym("(")) {
    Formula f = parse_formula_rec(lx);
    lx.expect_sym(")");
    return f;
  }
  std::string id = lx.peek_ident();
  if (id == "forall" || id == "exists") {
    lx.eat_ident();
    lx.skip_ws();
    size_t vstart = lx.pos;
    std::string v = lx.eat_ident();
    if (v.empty() || !lower_start(v) || reserved(v))
      lx.fail("expected bound variable", {"variable"}, vstart);
    lx.expect_sym(".");
    Formula body = parse_unary(lx);
    return id == "forall" ? Formula::forall(v, std::move(body))
                          : Formula::exists(v, std::move(body));
  }
  if (id == "T") {
    lx.eat_ident();
    return Formula::top();
  }
  if (upper_start(id)) {
    lx.eat_ident();
    std::vector<Term> args;
    if (lx.eat_sym("(")) {
      args.push_back(parse_term_rec(lx));
      while (lx.eat_sym(",")) args.push_back(parse_term_rec(lx));
      lx.expect_sym(")");
    }
    return Formula::atom(id, std::move(args));
  }
  lx.fail("expected formula", {"atom", "'~'", "'('", "forall", "exists", "'_|_'", "'T'"}, start);
}

Formula parse_conj(Lexer& lx) {
  Formula f = parse_unary(lx);
  while (true) {
    lx.skip_ws();
    if (lx.peek_sym("&")) {
      lx.eat_sym("&");
      f = Formula::conj(std::move(f), parse_unary(lx));
    } else {
      return f;
    }
  }
}

Formula parse_disj(Lexer& lx) {
  Formula f = parse_conj(lx);
  while (true) {
    lx.skip_ws();
    // careful: '|' must not swallow the '_|_' token (can't start here anyway)
    if (lx.peek_sym("|")) {
      lx.eat_sym("|");
      f = Formula::disj(std::move(f), parse_conj(lx));
    } else {
      return f;
    }
  }
}

Formula parse_formula_rec(Lexer& lx) {
  Formula f = parse_disj(lx);
  lx.skip_ws();
  if (lx.peek_sym("->")) {
    lx.eat_sym("->");
    return Formula::implies(std::move(f), parse_formula_rec(lx));  // right assoc
  }
  return f;
}

Sequent parse_sequent_rec(Lexer& lx) {
  Sequent s;
  lx.skip_ws();
  if (!lx.peek_sym("=>")) {
    s.antecedent.push_back(parse_formula_rec(lx));
    while (lx.eat_sym(",")) s.antecedent.push_back(parse_formula_rec(lx));
  }
  lx.expect_sym("=>");
  if (!lx.eof()) {
    s.succedent.push_back(parse_formula_rec(lx));
    while (lx.eat_sym(",")) s.succedent.push_back(parse_formula_rec(lx));
  }
  return s;
}

void expect_end(Lexer& lx) {
  if (!lx.eof()) lx.fail("trailing input", {"end of input"}, lx.pos);
}

}  // namespace

Term parse_term(const std::string& text) {
  Lexer lx(text);
  Term t = parse_term_rec(lx);
  expect_end(lx);
  return t;
}

Formula parse_formula(const std::string& text) {
  Lexer lx(text);
  Formula f = parse_formula_rec(lx);
  expect_end(lx);
  return f;
}

Sequent parse_sequent(const std::string& text) {
  Lexer lx(text);
  Sequent s = parse_sequent_rec(lx);
  expect_end(lx);
  return s;
}

namespace {

struct Line {
  int indent;       // two spaces per level
  std::string body;
  size_t offset;    // byte offset of the line start in the file
};

std::vector<std::string> split_lines(const std::string& text, std::vector<size_t>* offsets) {
  std::vector<std::string> lines;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '\n') {
      if (offsets) offsets->push_back(start);
      lines.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return lines;
}

Proof parse_proof_lines(const std::vector<Line>& lines, size_t& idx, int indent) {
  const Line& ln = lines[idx];
  if (ln.indent != indent)
    throw ParseError("bad indentation (expected " + std::to_string(2 * indent) + " spaces)",
                     SourceSpan{ln.offset, ln.offset + 1});
  Lexer lx(ln.body);
  size_t rstart = lx.pos;
  std::string rname = lx.eat_ident();
  auto rule = rule_from_name(rname);
  if (!rule)
    throw ParseError("unknown rule name '" + rname + "'",
                     SourceSpan{ln.offset + rstart, ln.offset + rstart + rname.size()});
  ProofNode node;
  node.rule = *rule;
  // Bracketed annotations: [principal-index] then [term] / [cut formula].
  std::vector<std::string> brackets;
  while (lx.eat_sym("[")) {
    std::string content;
    while (lx.pos < ln.body.size() && ln.body[lx.pos] != ']') content += ln.body[lx.pos++];
    if (!lx.eat_sym("]"))
      throw ParseError("unterminated '['", SourceSpan{ln.offset + lx.pos, ln.offset + lx.pos});
    brackets.push_back(content);
  }
  lx.expect_sym(";");
  node.conclusion = parse_sequent_rec(lx);
  expect_end(lx);

  size_t want = 0;
  if (has_principal(node.rule)) ++want;
  if (is_quantifier_rule(node.rule) || node.rule == Rule::Cut) ++want;
  if (brackets.size() != want)
    throw ParseError("rule " + rname + " takes " + std::to_string(want) +
                         " bracketed annotation(s), got " + std::to_string(brackets.size()),
                     SourceSpan{ln.offset, ln.offset + ln.body.size()});
  size_t bi = 0;
  if (has_principal(node.rule)) {
    try {
      node.principal = std::stoi(brackets[bi]);
    } catch (...) {
      throw ParseError("principal index must be an integer, got '" + brackets[bi] + "'",
                       SourceSpan{ln.offset, ln.offset + ln.body.size()});
    }
    ++bi;
  }
  if (is_quantifier_rule(node.rule)) node.term = parse_term(brackets[bi]);
  if (node.rule == Rule::Cut) node.cut_formula = parse_formula(brackets[bi]);

  ++idx;
  int arity = rule_arity(node.rule);
  for (int k = 0; k < arity; ++k) {
    if (idx >= lines.size())
      throw ParseError("rule " + rname + " expects " + std::to_string(arity) +
                           " premise(s); input ended",
                       SourceSpan{ln.offset, ln.offset + ln.body.size()});
    node.premises.push_back(parse_proof_lines(lines, idx, indent + 1));
  }
  return node;
}

int indent_of(const std::string& line, size_t offset) {
  size_t spaces = 0;
  while (spaces < line.size() && line[spaces] == ' ') ++spaces;
  if (spaces % 2 != 0)
    throw ParseError("odd indentation", SourceSpan{offset, offset + spaces});
  return static_cast<int>(spaces / 2);
}

bool blank_or_comment(const std::string& s) {
  for (char c : s) {
    if (c == '#') return true;
    if (!std::isspace((unsigned char)c)) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> parse_expectations(const std::string& text) {
  std::vector<std::string> out;
  for (const auto& line : split_lines(text, nullptr)) {
    size_t h = line.find('#');
    if (h == std::string::npos) continue;
    std::string rest = line.substr(h + 1);
    size_t e = rest.find("expect:");
    if (e == std::string::npos) continue;
    std::string payload = rest.substr(e + 7);
    // trim
    size_t a = payload.find_first_not_of(" \t");
    size_t b = payload.find_last_not_of(" \t\r");
    if (a == std::string::npos) continue;
    out.push_back(payload.substr(a, b - a + 1));
  }
  return out;
}

ProofFile parse_proof(const std::string& text) {
  ProofFile pf;
  pf.expectations = parse_expectations(text);
  std::vector<size_t> offsets;
  std::vector<std::string> raw = split_lines(text, &offsets);
  std::vector<Line> lines;
  for (size_t i = 0; i < raw.size(); ++i) {
    std::string line = raw[i];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank_or_comment(line)) continue;
    if (line.rfind("hyp ", 0) == 0) {
      pf.hypotheses.push_back(parse_formula(line.substr(4)));
      continue;
    }
    int ind = indent_of(line, offsets[i]);
    lines.push_back(Line{ind, line.substr(2 * ind), offsets[i]});
  }
  if (lines.empty()) throw ParseError("empty proof", SourceSpan{0, 0});
  size_t idx = 0;
  pf.proof = parse_proof_lines(lines, idx, 0);
  if (idx != lines.size())
    throw ParseError("trailing proof lines after the root inference",
                     SourceSpan{lines[idx].offset, lines[idx].offset + 1});
  return pf;
}

namespace {

std::vector<std::string> tokenize_simple(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char c : line) {
    if (std::isspace((unsigned char)c)) {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

// "P(a,b)" or "Q" -> predicate + element names.
std::pair<std::string, std::vector<std::string>> parse_ground_atom_text(const std::string& s,
                                                                        size_t offset) {
  Formula f = parse_formula(s);
  if (!f.is(FormulaKind::Atom))
    throw ParseError("expected a ground atom, got '" + s + "'", SourceSpan{offset, offset});
  std::vector<std::string> elems;
  for (const auto& t : f.args()) {
    if (!t.is_var())
      throw ParseError("atom arguments must be domain elements: '" + s + "'",
                       SourceSpan{offset, offset});
    elems.push_back(t.head());
  }
  return {f.pred(), std::move(elems)};
}

}  // namespace

Model parse_kripke_model(const std::string& text) {
  std::vector<size_t> offsets;
  std::vector<std::string> raw = split_lines(text, &offsets);
  std::vector<std::string> world_names;
  std::vector<std::pair<std::string, std::string>> order_pairs;
  std::map<std::string, std::set<std::string>> domains;
  std::vector<std::pair<std::string, std::string>> forced;  // (world, atom text)

  for (size_t i = 0; i < raw.size(); ++i) {
    std::string line = raw[i];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank_or_comment(line)) continue;
    auto toks = tokenize_simple(line);
    const std::string& kw = toks[0];
    auto need = [&](size_t n) {
      if (toks.size() < n)
        throw ParseError("'" + kw + "' line needs " + std::to_string(n - 1) + " argument(s)",
                         SourceSpan{offsets[i], offsets[i] + line.size()});
    };
    if (kw == "world") {
      need(2);
      world_names.push_back(toks[1]);
    } else if (kw == "order") {
      need(3);
      order_pairs.emplace_back(toks[1], toks[2]);
    } else if (kw == "domain") {
      need(3);
      for (size_t k = 2; k < toks.size(); ++k) domains[toks[1]].insert(toks[k]);
    } else if (kw == "forces") {
      need(3);
      std::string atom;
      for (size_t k = 2; k < toks.size(); ++k) atom += toks[k];
      forced.emplace_back(toks[1], atom);
    } else {
      throw ParseError("unknown directive '" + kw + "' in model file",
                       SourceSpan{offsets[i], offsets[i] + kw.size()});
    }
  }

  Model m;
  m.frame.worlds = world_names;
  size_t n = world_names.size();
  if (n == 0) throw ParseError("model has no worlds", SourceSpan{0, 0});
  m.frame.leq.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) m.frame.leq[i][i] = true;
  auto widx = [&](const std::string& w) {
    int k = m.frame.world_index(w);
    if (k < 0) throw ParseError("unknown world '" + w + "'", SourceSpan{0, 0});
    return k;
  };
  for (const auto& [a, b] : order_pairs) m.frame.leq[widx(a)][widx(b)] = true;
  // reflexive-transitive closure
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (m.frame.leq[i][k])
        for (size_t j = 0; j < n; ++j)
          if (m.frame.leq[k][j]) m.frame.leq[i][j] = true;
  m.frame.domains.resize(n);
  for (const auto& [w, d] : domains) m.frame.domains[widx(w)] = d;
  for (const auto& [w, atom] : forced) {
    auto [pred, elems] = parse_ground_atom_text(atom, 0);
    m.atoms[pred][widx(w)].insert(elems);
  }
  m.frame.validate();
  m.validate();
  return m;
}

CD5Interpretation parse_cd5_interpretation(const std::string& text) {
  std::vector<size_t> offsets;
  std::vector<std::string> raw = split_lines(text, &offsets);
  CD5Interpretation interp;
  auto parse_value = [&](const std::string& v, size_t off) {
    if (v.size() != 3 || v.find_first_not_of("01") != std::string::npos)
      throw ParseError("CD5 value must be three bits like 110, got '" + v + "'",
                       SourceSpan{off, off});
    return CD5Value::make(v[0] - '0', v[1] - '0', v[2] - '0');
  };
  for (size_t i = 0; i < raw.size(); ++i) {
    std::string line = raw[i];
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank_or_comment(line)) continue;
    auto toks = tokenize_simple(line);
    const std::string& kw = toks[0];
    if (kw == "domain") {
      for (size_t k = 1; k < toks.size(); ++k) interp.domain.push_back(toks[k]);
    } else if (kw == "pred") {
      if (toks.size() != 3)
        throw ParseError("'pred' line: pred NAME ARITY", SourceSpan{offsets[i], offsets[i]});
      interp.pred_arity[toks[1]] = std::stoi(toks[2]);
    } else if (kw == "atom") {
      if (toks.size() < 3)
        throw ParseError("'atom' line: atom GROUND-ATOM VALUE",
                         SourceSpan{offsets[i], offsets[i]});
      std::string atom;
      for (size_t k = 1; k + 1 < toks.size(); ++k) atom += toks[k];
      auto [pred, elems] = parse_ground_atom_text(atom, offsets[i]);
      interp.atoms[pred].emplace(elems, parse_value(toks.back(), offsets[i]));
      interp.pred_arity[pred] = static_cast<int>(elems.size());
    } else if (kw == "fun") {
      if (toks.size() < 3)
        throw ParseError("'fun' line: fun APPLICATION ELEMENT",
                         SourceSpan{offsets[i], offsets[i]});
      std::string app;
      for (size_t k = 1; k + 1 < toks.size(); ++k) app += toks[k];
      Term t = parse_term(app);
      if (t.is_var())
        throw ParseError("'fun' needs an application like f(d1)",
                         SourceSpan{offsets[i], offsets[i]});
      std::vector<std::string> elems;
      for (const auto& a : t.args()) {
        if (!a.is_var())
          throw ParseError("'fun' arguments must be domain elements",
                           SourceSpan{offsets[i], offsets[i]});
        elems.push_back(a.head());
      }
      interp.funcs[t.head()][elems] = toks.back();
    } else {
      throw ParseError("unknown directive '" + kw + "' in CD5 file",
                       SourceSpan{offsets[i], offsets[i] + kw.size()});
    }
  }
  if (interp.domain.empty())
    throw ParseError("CD5 interpretation needs a non-empty domain", SourceSpan{0, 0});
  for (const auto& [pred, table] : interp.atoms)
    for (const auto& [tup, _] : table)
      for (const auto& e : tup)
        if (std::find(interp.domain.begin(), interp.domain.end(), e) == interp.domain.end())
          throw ParseError("atom argument '" + e + "' not in the domain", SourceSpan{0, 0});
  return interp;
}

}  // namespace qfs
