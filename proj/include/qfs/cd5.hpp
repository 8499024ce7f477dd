// The lattice-based 5-valued logic: evaluation, bounded validity and the
// parallel-Skolemization cross-check.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfs/syntax.hpp"

namespace qfs {

// One of the five lattice points (a,b,c) in {0,1}^3 with c=1 implying a=b=1:
// 111, 110, 010, 100, 000. Ordered componentwise; 111 is designated.
class CD5Value {
public:
  static CD5Value make(int a, int b, int c);  // rejects the three non-points
  static CD5Value bottom() { return CD5Value(0); }
  static CD5Value designated() { return CD5Value(4); }
  // Enumeration order used everywhere: 000, 100, 010, 110, 111.
  static const std::vector<CD5Value>& all();

  int a() const;
  int b() const;
  int c() const;
  bool leq(CD5Value other) const;
  CD5Value sup(CD5Value other) const;
  CD5Value inf(CD5Value other) const;
  // Heyting implication of the lattice: largest z with inf(z, *this) <= other.
  CD5Value imp(CD5Value other) const;
  bool is_designated() const { return idx_ == 4; }
  int index() const { return idx_; }
  std::string str() const;

  friend bool operator==(CD5Value x, CD5Value y) { return x.idx_ == y.idx_; }
  friend bool operator!=(CD5Value x, CD5Value y) { return x.idx_ != y.idx_; }

private:
  explicit CD5Value(int idx) : idx_(idx) {}
  int idx_;
};

struct CD5Interpretation {
  std::vector<std::string> domain;  // non-empty
  // predicate -> argument tuple -> value; missing tuples of known predicates
  // default to 000 (the "not forced" convention).
  std::map<std::string, std::map<std::vector<std::string>, CD5Value>> atoms;
  std::map<std::string, int> pred_arity;
  // function symbol -> argument tuple -> element (for Skolem symbols).
  std::map<std::string, std::map<std::vector<std::string>, std::string>> funcs;

  std::string describe() const;
};

// Evaluates a closed formula; unknown predicate or function symbols are
// rejected with Error.
CD5Value cd5_eval(const CD5Interpretation& interp, const Formula& f);

struct CD5Verdict {
  bool valid = true;
  std::optional<CD5Interpretation> countermodel;
  uint64_t interpretations_tried = 0;
};

struct ResourceError : Error {
  using Error::Error;
};

// True iff every interpretation with domain size <= max_domain designates f.
// Function symbols occurring in f are enumerated along with the predicate
// tables (a falsifying assignment is searched existentially). Enumeration is
// lexicographic, so the countermodel returned is reproducible.
CD5Verdict cd5_valid_bounded(const Formula& f, int max_domain,
                             uint64_t budget = 50'000'000);

struct CD5CrosscheckReport {
  bool original_valid = false;
  bool skolemized_valid = false;
  bool agree = false;
  std::optional<CD5Interpretation> original_witness;
  std::optional<CD5Interpretation> skolemized_witness;
  Formula skolemized;
};

// Compares bounded verdicts for f and its degree-n parallel Skolemization.
CD5CrosscheckReport cd5_crosscheck_parallel(const Formula& f, int degree, int max_domain,
                                            uint64_t budget = 50'000'000);

}  // namespace qfs
