#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>

#include "mzv/multipoly.hpp"
#include "mzv/partial_values.hpp"

namespace mzv {

struct OracleResult {
    std::complex<double> value{0.0, 0.0};
    double est_error = 0.0;
    std::string method;
    std::map<std::string, double> params;

    std::string json() const;
};

/// log Gamma, Lanczos series with log-space reflection (safe for large |Im z|).
std::complex<double> log_gamma(std::complex<double> z);
std::complex<double> gamma_numeric(std::complex<double> z);

/// Numeric continuation of sum_{m>=1} P(m)^{-s} for a one-variable P with
/// positive coefficients: M direct terms plus the binomial expansion of the
/// tail in powers of the subleading part, each order an explicit zeta tail.
/// Orders whose zeta argument degenerates to the pole at 1 are handled by a
/// symmetric epsilon offset with Richardson extrapolation (the product with
/// the vanishing binomial factor is finite).
OracleResult n1_binomial_continuation(const MultiPoly& poly, std::complex<double> s, int cutoff = 48,
                                      int order = 24);

/// Residual of the vertical-line integral representation of (1+lam)^{-s}
/// against the direct power, via trapezoid quadrature truncated at the given
/// height. Requires Re s > 0, lam off (-inf, 0], -Re s < c < 0.
double mb_identity_check(std::complex<double> s, std::complex<double> lam, double c,
                         double height);

/// Residual of the r-fold version for (lam_0 + ... + lam_r)^{-s}; r <= 2.
/// Requires Re lam_j > 0, rho_j > 0, Re s > sum rho_j.
double mmb_identity_check(std::complex<double> s, std::span<const std::complex<double>> lams,
                          std::span<const double> rhos, double height);

/// Numeric value by per-variable factorization: each polynomial must split
/// into univariate factors; twisted variables with purely monomial factors
/// evaluate through the Lerch continuation, non-monomial untwisted factors
/// through the binomial continuation, and remaining twisted factors by
/// direct absolutely convergent summation.
OracleResult factorized_series_oracle(const ProblemSpec& spec,
                                      std::span<const std::complex<double>> s);

} // namespace mzv
