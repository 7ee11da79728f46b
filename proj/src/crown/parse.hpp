#pragma once

#include <string>

#include "crown/puiseux.hpp"

namespace crown {

// Element text grammar (see README):
//   element := term (('+'|'-') term)* | '0'
//   term    := coeff ['*' 'e^(' int '/' int ')']
//   coeff   := rational | rational '*' 'z' int '^' int | '(' coeff (('+'|'-') coeff)* ')'
// The parser accepts a harmless superset (bare zN^k coefficients, signed
// rationals, redundant parentheses); parsed elements are exact.
Puiseux parse_element(const std::string& text);

// Canonical grammar text: terms in ascending exponent, one space around
// joining '+'/'-'.  print/parse round-trips bit-exactly on its own output.
std::string print_element(const Puiseux& x);

// Canonical text of one coefficient.
std::string print_coeff(const CycScalar& c);

}  // namespace crown
