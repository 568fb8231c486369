#pragma once

#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "mzv/cyclotomic.hpp"
#include "mzv/lerch.hpp"
#include "mzv/multipoly.hpp"

namespace mzv {

/// An evaluation point of the fully twisted series: integer arguments
/// against a list of polynomials over n' variables with n' twists.
/// The reduction tag is classified at construction.
struct DCPoint {
    enum class Tag { all_nonpositive, nvars_zero, const_leading, monomial, mixed_opaque };

    std::vector<long long> args;
    std::vector<MultiPoly> polys;
    std::vector<RootOfUnity> twists;
    Tag tag;

    DCPoint(std::vector<long long> args_in, std::vector<MultiPoly> polys_in,
            std::vector<RootOfUnity> twists_in);

    int nvars() const { return polys.empty() ? 0 : polys[0].nvars(); }
    std::string key() const; // canonical "DC<args=[...]; polys=[...]; twists=[...]>"
    static DCPoint parse(const std::string& text);
};

const char* dc_tag_name(DCPoint::Tag tag);

/// One transcendental Lerch factor zeta_mu(arg) with arg >= 1.
struct LerchFactor {
    RootOfUnity mu;
    long long arg;

    friend bool operator==(const LerchFactor& a, const LerchFactor& b) {
        return a.mu == b.mu && a.arg == b.arg;
    }
    friend bool operator<(const LerchFactor& a, const LerchFactor& b) {
        if (a.mu == b.mu) return a.arg < b.arg;
        return a.mu < b.mu;
    }
};

/// A product of such factors, kept sorted; the common case is a single factor.
using LerchProduct = std::vector<LerchFactor>;

/// Exact symbolic value: cyclotomic constant + rational multiples of even pi
/// powers + cyclotomic-linear combination of Lerch-product atoms + opaque
/// fully-twisted atoms at irreducible mixed points. No zero coefficients are
/// stored; term order is fixed, so printing is deterministic.
class ValueExpr {
public:
    ValueExpr() = default;
    explicit ValueExpr(const Cyclotomic& c) { add_constant(c); }

    void add_constant(const Cyclotomic& c);
    void add_pi_power(long long even_power, const Rational& coeff);
    void add_lerch(LerchProduct factors, const Cyclotomic& coeff);
    void add_opaque(const DCPoint& point, const Cyclotomic& coeff);

    ValueExpr& operator+=(const ValueExpr& other);
    friend ValueExpr operator+(ValueExpr a, const ValueExpr& b) { return a += b; }
    ValueExpr scaled(const Cyclotomic& factor) const;

    friend bool operator==(const ValueExpr& a, const ValueExpr& b);
    friend bool operator!=(const ValueExpr& a, const ValueExpr& b) { return !(a == b); }

    const Cyclotomic& constant() const { return constant_; }
    const std::map<long long, Rational>& pi_terms() const { return pi_terms_; }
    const std::map<LerchProduct, Cyclotomic>& lerch_atoms() const { return lerch_atoms_; }
    const std::map<std::string, std::pair<DCPoint, Cyclotomic>>& opaque_atoms() const {
        return opaque_atoms_;
    }

    bool is_zero() const;
    bool has_opaque() const { return !opaque_atoms_.empty(); }
    bool is_pure_constant() const {
        return pi_terms_.empty() && lerch_atoms_.empty() && opaque_atoms_.empty();
    }

    /// Defined iff there are no opaque atoms.
    std::complex<double> numeric() const;

    std::string str() const;
    static ValueExpr parse(const std::string& text);

private:
    Cyclotomic constant_;
    std::map<long long, Rational> pi_terms_;
    std::map<LerchProduct, Cyclotomic> lerch_atoms_;
    std::map<std::string, std::pair<DCPoint, Cyclotomic>> opaque_atoms_;
};

/// Value of the fully twisted series at the all-nonpositive point -k:
/// expand prod polys^k and sum a_alpha * prod_j zeta_{mu_j}(-alpha_j).
/// With zero variables this is the power product of the constants.
Cyclotomic dc_value_nonpos(std::span<const MultiPoly> polys, std::span<const unsigned long> k,
                           std::span<const RootOfUnity> twists, std::size_t term_cap = 0);

/// Value (possibly symbolic) at a general integer point, by reduction tag.
ValueExpr dc_value_mixed(const DCPoint& point, std::size_t term_cap = 0);

/// Independent route to dc_value_nonpos: per monomial, the closed rational
/// function in r of sum_m (mu r)^m m^alpha is built by repeated r d/dr applied
/// to the geometric series, then evaluated exactly at r = 1.
Cyclotomic abel_sum_oracle(std::span<const MultiPoly> polys, std::span<const unsigned long> k,
                           std::span<const RootOfUnity> twists, std::size_t term_cap = 0);

/// The single-series case of the same construction (the radial limit of
/// sum (mu r)^m m^n at r = 1), for cross-checking the Lerch closed forms.
Cyclotomic abel_lerch_value(const RootOfUnity& mu, unsigned n);

} // namespace mzv
