// Text rendering with minimal parentheses; parse(print(x)) == x.

#pragma once

#include <string>

#include "qfs/proof.hpp"
#include "qfs/syntax.hpp"

namespace qfs {

std::string print(const Term& t);
std::string print(const Formula& f);
std::string print(const Sequent& s);
// Indented block format, one inference per line, children two spaces deeper.
std::string print(const Proof& p);

}  // namespace qfs
