#pragma once

#include <iosfwd>
#include <string>

#include "abcg/gadgets.hpp"

namespace abcg {

// Line-oriented text form of a divisibility system:
//   system n=<vars> rows=<count>
//   row <p> ; <i>: <poly> ; ... ; rhs: <poly>
// with <p> one of 0, (X-1)^2, (X-1)^3 and polynomials in the canonical
// grammar.  Only nonzero coefficients are listed.
std::string system_to_text(const DivisibilitySystem& sys);
DivisibilitySystem system_from_text(const std::string& text);

}  // namespace abcg
