#ifndef CODIFF_SCALARS_HPP
#define CODIFF_SCALARS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace codiff {

using Integer = boost::multiprecision::cpp_int;

// Exact rational scalar. cpp_rational keeps the invariants we need:
// reduced fraction, positive denominator, canonical zero 0/1.
using Rational = boost::multiprecision::cpp_rational;

// Builds a rational from numerator/denominator, rejecting zero denominators.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw std::invalid_argument("invalid scalar: zero denominator");
    }
    // cpp_rational requires a positive denominator; normalize the sign here
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }

inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace codiff

#endif
