#include "mzv/lerch.hpp"

#include <algorithm>
#include <cmath>

#include "mzv/combinatorics.hpp"
#include "mzv/error.hpp"

namespace mzv {

Cyclotomic lerch_nonpos_stirling(const RootOfUnity& mu, unsigned n) {
    Cyclotomic one_minus_mu = Cyclotomic(1) - Cyclotomic::root(mu);
    Cyclotomic inv = one_minus_mu.inverse();
    if (n == 0) return Cyclotomic::root(mu) * inv;
    Cyclotomic acc;
    for (unsigned k = 1; k <= n; ++k) {
        Int s = stirling2(n, k);
        if (s == 0) continue;
        Cyclotomic term = Cyclotomic(Rational(s * factorial(k))) *
                          Cyclotomic::root_power(mu, k) * inv.pow(k + 1);
        acc += term;
    }
    return acc;
}

Cyclotomic lerch_nonpos_eulerian(const RootOfUnity& mu, unsigned n) {
    std::vector<Int> a = eulerian_poly(n);
    Cyclotomic num;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] == 0) continue;
        num += Cyclotomic(Rational(a[j])) * Cyclotomic::root_power(mu, static_cast<long long>(j));
    }
    Cyclotomic inv = (Cyclotomic(1) - Cyclotomic::root(mu)).inverse();
    Cyclotomic value = num * inv.pow(static_cast<long long>(n) + 1);
    if (n == 0) value -= Cyclotomic(1);
    return value;
}

Rational zeta_neg(unsigned m) {
    return -bernoulli_twisted(m + 1) / Rational(Int(m) + 1);
}

Rational zeta_even_pi(unsigned k) {
    // zeta(2k) = (-1)^{k+1} B_{2k} (2 pi)^{2k} / (2 (2k)!)
    Rational c = bernoulli(2 * k) * pow_rational(Rational(2), 2 * k) /
                 (Rational(2) * Rational(factorial(2 * k)));
    return (k % 2 == 0) ? Rational(-c) : c;
}

std::complex<double> zeta_tail_numeric(std::complex<double> w, long M, int order) {
    // sum_{m>=M} m^{-w}, valid off w = 1; Euler-Maclaurin with the stated
    // number of Bernoulli corrections.
    double x = static_cast<double>(M);
    std::complex<double> acc = std::exp((1.0 - w) * std::log(x)) / (w - 1.0);
    acc += 0.5 * std::exp(-w * std::log(x));
    std::complex<double> poch(1.0, 0.0);
    for (int j = 1; j <= order; ++j) {
        // (w)_{2j-1} built incrementally: multiply the two newest factors
        if (j == 1) {
            poch = w;
        } else {
            poch *= (w + std::complex<double>(2 * j - 3)) * (w + std::complex<double>(2 * j - 2));
        }
        double b_over_fact = to_double(bernoulli(2 * static_cast<unsigned>(j)) /
                                       Rational(factorial(2 * static_cast<unsigned>(j))));
        acc += b_over_fact * poch * std::exp((-w - std::complex<double>(2 * j - 1)) * std::log(x));
    }
    return acc;
}

std::complex<double> hurwitz_numeric(std::complex<double> s, const Rational& q,
                                     const EulerMaclaurinParams& params) {
    if (std::abs(s - std::complex<double>(1.0)) < 1e-6)
        fail(errc::near_pole, "Hurwitz zeta evaluated too close to s = 1");
    if (q <= 0 || q > 1)
        fail(errc::unsupported_argument, "Hurwitz offset must lie in (0, 1]");
    double qd = to_double(q);
    // For Re s < 1/2 the direct terms grow like m^{|s|} against an O(1)
    // answer, so a large cutoff loses everything to cancellation; a short
    // one keeps the roundoff at x^{|s|+1} eps while the Bernoulli series
    // still terminates or converges.
    int cutoff = s.real() < 0.5 ? std::min(params.cutoff, 2) : params.cutoff;
    std::complex<double> acc(0.0, 0.0);
    for (int m = 0; m < cutoff; ++m)
        acc += std::exp(-s * std::log(static_cast<double>(m) + qd));
    double x = static_cast<double>(cutoff) + qd;
    acc += std::exp((1.0 - s) * std::log(x)) / (s - 1.0);
    acc += 0.5 * std::exp(-s * std::log(x));
    std::complex<double> poch(1.0, 0.0);
    for (int j = 1; j <= params.order; ++j) {
        if (j == 1) {
            poch = s;
        } else {
            poch *= (s + std::complex<double>(2 * j - 3)) * (s + std::complex<double>(2 * j - 2));
        }
        double b_over_fact = to_double(bernoulli(2 * static_cast<unsigned>(j)) /
                                       Rational(factorial(2 * static_cast<unsigned>(j))));
        acc += b_over_fact * poch * std::exp((-s - std::complex<double>(2 * j - 1)) * std::log(x));
    }
    return acc;
}

std::complex<double> riemann_numeric(std::complex<double> s, const EulerMaclaurinParams& params) {
    return hurwitz_numeric(s, Rational(1), params);
}

double digamma_numeric(double x) {
    if (x <= 0) fail(errc::unsupported_argument, "digamma needs x > 0");
    double acc = 0.0;
    while (x < 12.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    double result = std::log(x) - 0.5 * inv;
    // asymptotic series -sum B_{2j}/(2j x^{2j})
    static const double coeff[] = {1.0 / 12.0,  -1.0 / 120.0,   1.0 / 252.0, -1.0 / 240.0,
                                   1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0};
    double p = inv2;
    for (double c : coeff) {
        result -= c * p;
        p *= inv2;
    }
    return acc + result;
}

std::complex<double> lerch_numeric_complex(const RootOfUnity& mu, std::complex<double> s) {
    long b = mu.den;
    std::complex<double> acc(0.0, 0.0);
    for (long r = 1; r <= b; ++r) {
        double theta = 2.0 * M_PI * static_cast<double>((mu.num * r) % b) / static_cast<double>(b);
        std::complex<double> mur(std::cos(theta), std::sin(theta));
        acc += mur * hurwitz_numeric(s, make_rational(r, b));
    }
    return acc * std::exp(-s * std::log(static_cast<double>(b)));
}

std::complex<double> lerch_numeric(const RootOfUnity& mu, long long s) {
    if (s < 1) fail(errc::unsupported_argument, "lerch_numeric needs s >= 1 (exact path covers s <= 0)");
    long b = mu.den;
    if (s == 1) {
        // the Hurwitz poles cancel in sum_r mu^r; what is left is the
        // digamma combination -(1/b) sum_r mu^r psi(r/b)
        std::complex<double> acc(0.0, 0.0);
        for (long r = 1; r <= b; ++r) {
            double theta = 2.0 * M_PI * static_cast<double>((mu.num * r) % b) / static_cast<double>(b);
            std::complex<double> mur(std::cos(theta), std::sin(theta));
            acc += mur * digamma_numeric(static_cast<double>(r) / static_cast<double>(b));
        }
        return -acc / static_cast<double>(b);
    }
    return lerch_numeric_complex(mu, std::complex<double>(static_cast<double>(s), 0.0));
}

} // namespace mzv
