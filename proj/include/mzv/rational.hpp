#pragma once

#include <gmpxx.h>

#include <string>

#include "mzv/error.hpp"

namespace mzv {

// Exact scalars. GMP keeps rationals canonical (reduced, positive denominator),
// which is exactly the representation contract of this module.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) fail(errc::division_by_zero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Int(num), Int(den));
}

// Canonical text: "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& n) { return n.get_str(); }

Rational parse_rational(const std::string& text);

// base^e with negative exponents allowed (base must be nonzero then).
Rational pow_rational(const Rational& base, long long e);

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace mzv
