#ifndef OGFIBER_BINARY_FORM_HPP
#define OGFIBER_BINARY_FORM_HPP

#include "ogfiber/polynomial.hpp"

#include <vector>

namespace ogfiber {

// All forms identically zero: the gcd degenerates (every projective point is
// a common root). Callers must treat this as a universal rank drop.
struct AllFormsZero : std::runtime_error {
    AllFormsZero() : std::runtime_error("binary_form_gcd: all forms zero") {}
};

// Gcd of homogeneous forms in the two designated registry variables.
// Result is homogeneous and monic under lex (leading coefficient 1).
// Constant gcd (== 1) iff the forms share no projective root over the
// algebraic closure.
Polynomial binary_form_gcd(const std::vector<Polynomial>& forms,
                           std::size_t var1, std::size_t var2);

} // namespace ogfiber

#endif
