#ifndef CODIFF_PARSER_HPP
#define CODIFF_PARSER_HPP

#include <string>

#include "codiff/coderivation.hpp"

namespace codiff {

// Parses the plain-text syntax, e.g.
//   "psi(2,3;2) - psi(3,2;2) + psi(2,2;3) - psi(3,3;3)"
//   "1/2*phi(1;2) + t1*psi(2,2;3) - t2^2*psi(1,2;3)"
// Terms are products of rational literals, parameter tokens t1..tn (with an
// optional ^exponent) and exactly one psi(...)/phi(...) atom; "0" is the
// zero coderivation. Errors name the offending token and its position.
Coderivation<Polynomial> parse_poly_coderivation(const std::string& text,
                                                 const GradedSpace& space);

// Same syntax without parameter tokens.
Coderivation<Rational> parse_coderivation(const std::string& text, const GradedSpace& space);

// "p:q" or "(p:q)" with rational entries.
std::pair<Rational, Rational> parse_projective_pair(const std::string& text);

// "a/b" or "a".
Rational parse_rational(const std::string& text);

}  // namespace codiff

#endif
