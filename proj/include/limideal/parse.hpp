#pragma once

// Text form of polynomials: variables z1..zn, parameter e, rational literals
// like 3 or 5/2, operators + - * / ^ and parentheses.  No implicit
// multiplication.  Division is only by nonzero constants.

#include <string>

#include "limideal/poly.hpp"

namespace limideal {

// parse into Q[e][z1..znvars] under degrevlex
EPoly parse_poly(const std::string& text, int nvars);

// parse, then require the parameter to be absent
QPoly parse_qpoly(const std::string& text, int nvars);

}  // namespace limideal
