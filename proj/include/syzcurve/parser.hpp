#pragma once

#include <string_view>

#include "syzcurve/errors.hpp"
#include "syzcurve/polyring.hpp"

namespace syzcurve {

// Grammar (EBNF; whitespace is ignored):
//
//   expr    = term , { ( "+" | "-" ) , term } ;
//   term    = factor , { "*" , factor } ;
//   factor  = ( "+" | "-" ) , factor | power ;
//   power   = primary , [ "^" , integer ] ;
//   primary = integer , [ "/" , integer ] | "x" | "y" | "z" | "(" , expr , ")" ;
//
// "^" binds tightest, so -x^2 is -(x^2). The expanded result must be a
// nonzero homogeneous polynomial.
HomogPoly<RationalField> parse_poly(std::string_view text);

}  // namespace syzcurve
