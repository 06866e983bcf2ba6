#pragma once

#include <string>

#include "frob/polynomial.hpp"

namespace frob {

// Integer coefficients, declared variable names, operators + - * ^ and
// parentheses. Unknown identifiers and malformed exponents raise ParseError
// with the offending position.
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

// Canonical form: terms descending in the ambient order, coefficients as least
// nonnegative residues, explicit '*' between factors, '^' for exponents.
std::string to_string(const Polynomial& a);

std::string to_string(const RingPtr& ring, const Monomial& m);

}  // namespace frob
