#pragma once

#include <complex>

#include "mzv/cyclotomic.hpp"

namespace mzv {

/// zeta_mu(-n) for mu != 1 via the Stirling-number closed form of the
/// analytically continued series: mu/(1-mu) for n = 0, and
/// sum_{k=1}^{n} S(n,k) k! mu^k / (1-mu)^{k+1} for n >= 1.
Cyclotomic lerch_nonpos_stirling(const RootOfUnity& mu, unsigned n);

/// Independent route to the same value: A_n(mu)/(1-mu)^{n+1} - [n=0],
/// with A_n the Eulerian polynomial.
Cyclotomic lerch_nonpos_eulerian(const RootOfUnity& mu, unsigned n);

/// Exact zeta(-m) = -bernoulli_twisted(m+1)/(m+1).
Rational zeta_neg(unsigned m);

/// Rational c with zeta(2k) = c * pi^{2k}.
Rational zeta_even_pi(unsigned k);

struct EulerMaclaurinParams {
    int cutoff = 50; // number of directly summed terms
    int order = 12;  // Bernoulli correction terms
};

/// Hurwitz zeta(s, q) for q in (0, 1], continued by Euler-Maclaurin.
/// Throws near_pole when |s - 1| < 1e-6.
std::complex<double> hurwitz_numeric(std::complex<double> s, const Rational& q,
                                     const EulerMaclaurinParams& params = {});

/// Riemann zeta by the same kernel (q = 1).
std::complex<double> riemann_numeric(std::complex<double> s,
                                     const EulerMaclaurinParams& params = {});

/// zeta_mu(s) = sum_{m>=1} mu^m m^{-s} at integer s >= 1, via the
/// root-of-unity Hurwitz decomposition; s = 1 through digamma values.
std::complex<double> lerch_numeric(const RootOfUnity& mu, long long s);

/// Same decomposition at arbitrary complex s != 1 (numeric support for the
/// oracles); exact paths never use this.
std::complex<double> lerch_numeric_complex(const RootOfUnity& mu, std::complex<double> s);

/// Digamma for real x > 0.
double digamma_numeric(double x);

/// Tail sum_{m>=M} m^{-w}, continued by Euler-Maclaurin (equals zeta(w, M)).
std::complex<double> zeta_tail_numeric(std::complex<double> w, long M, int order = 12);

} // namespace mzv
