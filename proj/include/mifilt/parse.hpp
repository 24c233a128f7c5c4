#pragma once

#include <string>

#include "mifilt/monomial.hpp"

namespace mifilt {

struct ParseError : std::invalid_argument {
  size_t position;
  ParseError(size_t pos, const std::string& what)
      : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
};

/// Grammar: ideal := term ("," term)*; term := factor ("*" factor)*;
/// factor := var ("^" posint)?; var := x|y|z|w or "x" followed by digits
/// (x1..x4).  Whitespace ignored.  The ambient dimension is the highest
/// variable index used; at most 4 variables.
MonomialIdeal parse_ideal(const std::string& text, Exp characteristic = 0);

/// Rationals are "a/b" or plain integers; no decimals.
Rational parse_rational(const std::string& text);

}  // namespace mifilt
