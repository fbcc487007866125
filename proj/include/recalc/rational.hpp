#ifndef RECALC_RATIONAL_HPP
#define RECALC_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "recalc/errors.hpp"

namespace recalc {

// Exact rational number.  mpq_class keeps num/den coprime with den > 0,
// which is exactly the canonical form we need.
using Rational = mpq_class;

inline Rational rat_from_long(long n) { return Rational(n); }

// Canonicalized fraction; the raw two-argument mpq_class constructor does
// not reduce.
inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "-p", "p/q".  Whitespace is not accepted.
Rational parse_rational(const std::string& text);

std::string rational_str(const Rational& r);

// r^e for integer e (negative allowed, r != 0 then).
Rational rational_pow(const Rational& r, long e);

// true iff q0 is a safe generic point: q0 != 0 and q0^n != 1 for
// 1 <= n <= cap.  Over the rationals this only excludes 0, 1 and -1,
// but the loop keeps the contract literal.
bool is_generic_point(const Rational& q0, int cap = 24);

} // namespace recalc

#endif
