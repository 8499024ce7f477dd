// Finite Kripke frames and models for intermediate predicate logics: forcing,
// frame-property flags, brute-force schema validity, and the class-F test.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qfs/occurrences.hpp"
#include "qfs/syntax.hpp"

namespace qfs {

struct Frame {
  std::vector<std::string> worlds;
  // leq[i][j] iff world i <= world j; reflexive-transitive-antisymmetric.
  std::vector<std::vector<bool>> leq;
  // Per-world domains, monotone along leq.
  std::vector<std::set<std::string>> domains;

  int world_index(const std::string& name) const;
  // Validates the partial-order laws and domain monotonicity; throws Error.
  void validate() const;
};

struct Model {
  Frame frame;
  // atom values: predicate -> world index -> set of argument tuples.
  std::map<std::string, std::map<int, std::set<std::vector<std::string>>>> atoms;

  bool atom_forced(const std::string& pred, int world, const std::vector<std::string>& tup) const;
  // Validates tuples against domains and persistence along leq.
  void validate() const;
};

// Forcing at a named world. f must be function-free and closed over the
// world's domain (free variables are read as domain constants).
bool forces(const Model& m, const std::string& world, const Formula& f);
bool forces(const Model& m, int world, const Formula& f);

enum class FrameClass { InF, InF_ED_only, InF_SW_only, Outside };

struct FrameReport {
  bool constant_domain = false;
  bool linear = false;  // disjoint unions of chains count as linear
  bool fds = false;
  bool wf = true;   // finite frames are always well-founded
  bool cwf = true;  // and conversely well-founded
  FrameClass classification = FrameClass::Outside;
  std::vector<std::string> witnesses;  // one line per false flag
};

FrameReport frame_properties(const Frame& fr);
FrameClass classify_frame(const Frame& fr);
const char* frame_class_name(FrameClass c);

// Decides schema validity on a finite frame by enumerating every persistent
// valuation of the fixed signature {P/1, Q/0} against the atomic instance of
// the schema. Returns the first countermodel found if invalid.
std::pair<bool, std::optional<Model>> axiom_valid_on_frame(const Frame& fr, ShiftKind kind,
                                                           std::string* world_out = nullptr);

struct IncompletenessReport {
  bool lin_oep_fails = true;       // the Lin v OEP instance fails at w1
  bool shift_instances_hold = true;  // atomic CD/ED/SW instances hold everywhere
  bool claim_holds = true;         // depth-bounded homogeneity claim at w2/w3
  int claim_depth = 0;
  size_t claim_formulas_checked = 0;
  std::vector<std::string> failures;
};

// The paper's 3-world frame-incompleteness witness, rebuilt in memory.
Model incompleteness_model();
IncompletenessReport check_incompleteness_witness(int claim_depth = 3);

}  // namespace qfs
