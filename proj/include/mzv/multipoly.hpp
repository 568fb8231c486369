#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

/// Sparse multivariate polynomial with exact rational coefficients.
/// Exponent vectors have fixed length nvars; variables print as X1..Xn.
/// No zero coefficients are stored, and the sorted term map gives a
/// deterministic iteration/print order.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly variable(int nvars, int index); // 0-based

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // requires is_constant
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    int degree_in(int var) const;

    void add_term(const Exponents& expo, const Rational& c);

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly& operator+=(const MultiPoly& other) { return *this = *this + other; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    /// p^e by repeated squaring; p^0 = 1. A nonzero term_cap bounds the
    /// intermediate term count.
    MultiPoly pow(unsigned long e, std::size_t term_cap = 0) const;

    Rational eval(std::span<const Rational> point) const;

    /// Compact canonical text, e.g. "1+X2+X1^2*X2^3".
    std::string str() const;
    static MultiPoly parse(const std::string& text, int nvars);

private:
    int nvars_;
    TermMap terms_;
};

using MonomialExpansion = MultiPoly;

/// Exact monomial expansion of prod_rho factors[rho]^{powers[rho]}.
/// The empty product is the constant 1.
MonomialExpansion expand_product_powers(std::span<const MultiPoly> factors,
                                        std::span<const unsigned long> powers,
                                        std::size_t term_cap = 0);

/// Unique decomposition P = sum_j Q_j(X1..X_{n-1}) * Xn^{a_j} with Q_j != 0
/// and strictly increasing a_j, returned in increasing order.
std::vector<std::pair<MultiPoly, int>> decompose_xn(const MultiPoly& p);

/// Sufficient certificate for the weak-decay hypothesis: true iff P is
/// nonzero with all coefficients >= 0. False means "not certified".
bool check_hdf_sufficient(const MultiPoly& p);

/// For certified factors, true iff every variable occurs with positive
/// exponent in some term of some factor (then the product grows without
/// bound on [1,inf)^n); vacuously true with zero variables.
bool check_growth_condition(std::span<const MultiPoly> factors);

/// Default bound on expansion sizes; MZV_MAX_MONOMIALS overrides.
std::size_t default_term_cap();

} // namespace mzv
