#ifndef OGFIBER_PARSE_HPP
#define OGFIBER_PARSE_HPP

#include "ogfiber/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace ogfiber {

// Raised on malformed input; pos is a 0-based offset into the text.
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos(pos) {}
    std::size_t pos;
};

// Grammar:
//   poly   := term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   coeff  := int ('/' nat)?
//   factor := var ('^' nat)?
// Whitespace insignificant. Unknown variables are an error.
Polynomial parse_poly(const std::string& text, const RegistryPtr& reg);

} // namespace ogfiber

#endif
