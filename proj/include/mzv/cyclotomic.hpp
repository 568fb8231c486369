#pragma once

#include <complex>
#include <string>
#include <vector>

#include "mzv/rational.hpp"

namespace mzv {

/// A root of unity mu = e^{2 pi i num/den} with mu != 1,
/// stored with 0 < num < den and gcd(num, den) = 1.
struct RootOfUnity {
    long num;
    long den;

    RootOfUnity(long a, long b);
    static RootOfUnity parse(const std::string& text); // "a/b"
    std::string str() const;
    std::complex<double> value() const;

    friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) {
        return a.den != b.den ? a.den < b.den : a.num < b.num;
    }
};

long euler_phi(long b);

/// An element of Q(zeta_b), stored as coefficients on 1, zeta_b, ...,
/// zeta_b^{phi(b)-1}, i.e. reduced modulo the b-th cyclotomic polynomial.
/// Elements that reduce to a rational collapse to order 1, so rationals have
/// a unique representation across fields; general equality compares after
/// lifting both operands into Q(zeta_lcm).
class Cyclotomic {
public:
    Cyclotomic() : order_(1), c_{Rational(0)} {}
    Cyclotomic(const Rational& r) : order_(1), c_{r} {}
    Cyclotomic(long v) : order_(1), c_{Rational(v)} {}

    static Cyclotomic root(const RootOfUnity& mu) { return root_power(mu, 1); }
    static Cyclotomic root_power(const RootOfUnity& mu, long long e);

    long order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const { return order_ == 1; }
    const Rational& rational_value() const;

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& other);
    Cyclotomic& operator-=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Cyclotomic& other);

    Cyclotomic inverse() const;
    Cyclotomic pow(long long e) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    std::complex<double> eval() const;

    /// Canonical text "[b; c0, c1, ...]".
    std::string str() const;
    static Cyclotomic parse(const std::string& text);

    Cyclotomic lifted(long new_order) const; // requires order() | new_order

private:
    long order_;
    std::vector<Rational> c_;

    Cyclotomic(long order, std::vector<Rational> coeffs);
    std::vector<Rational> lifted_coeffs(long new_order) const;
    void collapse();
};

} // namespace mzv
