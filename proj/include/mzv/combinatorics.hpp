#pragma once

#include <span>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);

/// Bernoulli number B_m in the convention B_1 = -1/2, so that
/// zeta(-m) = -bernoulli_twisted(m+1)/(m+1) gives zeta(0) = -1/2.
Rational bernoulli(unsigned m);

/// Twisted Bernoulli number (-1)^m B_m.
Rational bernoulli_twisted(unsigned m);

/// Stirling number of the second kind S(n,k); S(0,0) = 1, S(n,k) = 0 for k > n.
Int stirling2(unsigned n, unsigned k);

/// Coefficients of the Eulerian polynomial A_n(x), defined by
/// sum_{m>=0} m^n x^m = A_n(x) / (1-x)^{n+1}.
std::vector<Int> eulerian_poly(unsigned n);

/// total! / prod parts_i!, with sum(parts) == total enforced.
Int multinomial(unsigned long total, std::span<const unsigned long> parts);

/// Rising product (x)_n = x (x+1) ... (x+n-1); empty product is 1.
Rational pochhammer(const Rational& x, unsigned n);

} // namespace mzv
