#pragma once

#include <stdexcept>
#include <string>

#include "cubic/poly.hpp"

namespace cubic {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(std::string msg, int line_, int col_)
        : std::runtime_error(std::move(msg)), line(line_), column(col_) {}
};

// Parses the text polynomial format: terms like `3*x0^2*x1 - 1/2*x2^3`,
// whitespace-insensitive, coefficients integers or integer fractions.
// The ambient variable count is 1 + the highest index seen unless
// min_vars asks for more. Throws ParseError with position on bad input.
Poly parse_poly(const std::string& text, int min_vars = 0);

// to_string on Poly is the canonical printer; exposed here for symmetry.
std::string print_poly(const Poly& p);

}  // namespace cubic
