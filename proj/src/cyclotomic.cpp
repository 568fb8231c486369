#include "mzv/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace mzv {

RootOfUnity::RootOfUnity(long a, long b) {
    if (b == 0) fail(errc::invalid_root_of_unity, "zero denominator");
    if (b < 0) { a = -a; b = -b; }
    a %= b;
    if (a < 0) a += b;
    long g = std::gcd(a, b);
    if (g > 1) { a /= g; b /= g; }
    if (a == 0 || b == 1)
        fail(errc::invalid_root_of_unity, "twist must differ from 1");
    num = a;
    den = b;
}

RootOfUnity RootOfUnity::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos)
        fail(errc::parse_error, "root of unity must be written 'a/b', got '" + text + "'");
    try {
        long a = std::stol(text.substr(0, slash));
        long b = std::stol(text.substr(slash + 1));
        return RootOfUnity(a, b);
    } catch (const MzvError&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::parse_error, "invalid root of unity '" + text + "'");
    }
}

std::string RootOfUnity::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

std::complex<double> RootOfUnity::value() const {
    double theta = 2.0 * M_PI * static_cast<double>(num) / static_cast<double>(den);
    return {std::cos(theta), std::sin(theta)};
}

long euler_phi(long b) {
    long result = b;
    long m = b;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using Poly = std::vector<Rational>; // dense, ascending degree

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo a monic divisor.
Poly poly_mod(Poly p, const Poly& monic) {
    poly_trim(p);
    std::size_t d = monic.size() - 1;
    while (p.size() > d) {
        Rational lead = p.back();
        std::size_t shift = p.size() - 1 - d;
        if (lead != 0)
            for (std::size_t i = 0; i < d; ++i) p[shift + i] -= lead * monic[i];
        p.pop_back();
        poly_trim(p);
    }
    return p;
}

// Exact quotient, used only when the division is known to be exact.
Poly poly_div_exact(Poly num, const Poly& monic) {
    poly_trim(num);
    std::size_t d = monic.size() - 1;
    if (num.empty()) return {};
    Poly quot(num.size() - d, Rational(0));
    while (num.size() > d) {
        Rational lead = num.back();
        std::size_t shift = num.size() - 1 - d;
        quot[shift] = lead;
        for (std::size_t i = 0; i <= d; ++i) num[shift + i] -= lead * monic[i];
        poly_trim(num);
    }
    return quot;
}

// Cyclotomic polynomial Phi_b, monic with integer coefficients:
// x^b - 1 divided by all Phi_d for proper divisors d | b.
const Poly& cyclotomic_polynomial(long b) {
    static std::map<long, Poly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);

    std::vector<long> todo{b};
    while (!todo.empty()) {
        long m = todo.back();
        if (cache.count(m)) { todo.pop_back(); continue; }
        bool ready = true;
        for (long d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) { todo.push_back(d); ready = false; }
        if (!ready) continue;
        todo.pop_back();
        Poly num(m + 1, Rational(0));
        num[0] = -1;
        num[m] = 1;
        for (long d = 1; d < m; ++d)
            if (m % d == 0) num = poly_div_exact(std::move(num), cache[d]);
        cache[m] = std::move(num);
    }
    return cache[b];
}

// Extended Euclid over Q[x]: returns u with u*a == 1 (mod phi).
Poly poly_inverse_mod(const Poly& a, const Poly& phi) {
    Poly r0 = phi, r1 = a;
    Poly u0 = {}, u1 = {Rational(1)};
    poly_trim(r1);
    while (!r1.empty()) {
        // divide r0 by r1
        Poly rem = r0;
        Poly quot(rem.size() > r1.size() ? rem.size() - r1.size() + 1 : 1, Rational(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational lead = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            quot[shift] += lead;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= lead * r1[i];
            poly_trim(rem);
        }
        poly_trim(quot);
        // (r0, r1) = (r1, rem); (u0, u1) = (u1, u0 - quot*u1)
        Poly qu(quot.size() + u1.size(), Rational(0));
        for (std::size_t i = 0; i < quot.size(); ++i)
            for (std::size_t j = 0; j < u1.size(); ++j) qu[i + j] += quot[i] * u1[j];
        poly_trim(qu);
        Poly next = u0;
        if (next.size() < qu.size()) next.resize(qu.size(), Rational(0));
        for (std::size_t i = 0; i < qu.size(); ++i) next[i] -= qu[i];
        poly_trim(next);
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(next);
    }
    // r0 is the gcd, a nonzero constant since phi is irreducible and a != 0 mod phi
    if (r0.size() != 1)
        fail(errc::internal_error, "cyclotomic inverse: unexpected gcd degree");
    Rational scale = Rational(1) / r0[0];
    for (auto& c : u0) c *= scale;
    return u0;
}

} // namespace

Cyclotomic::Cyclotomic(long order, std::vector<Rational> coeffs)
    : order_(order), c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(euler_phi(order_)), Rational(0));
    collapse();
}

void Cyclotomic::collapse() {
    if (order_ == 1) {
        c_.resize(1, Rational(0));
        return;
    }
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return;
    Rational r = c_.empty() ? Rational(0) : c_[0];
    order_ = 1;
    c_ = {r};
}

Cyclotomic Cyclotomic::root_power(const RootOfUnity& mu, long long e) {
    long b = mu.den;
    long long k = (static_cast<long long>(mu.num) * e) % b;
    if (k < 0) k += b;
    if (k == 0) return Cyclotomic(Rational(1));
    Poly x(static_cast<std::size_t>(k) + 1, Rational(0));
    x[static_cast<std::size_t>(k)] = 1;
    Poly reduced = poly_mod(std::move(x), cyclotomic_polynomial(b));
    return Cyclotomic(b, std::move(reduced));
}

bool Cyclotomic::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

const Rational& Cyclotomic::rational_value() const {
    if (!is_rational()) fail(errc::internal_error, "cyclotomic element is not rational");
    return c_[0];
}

// Raw basis coefficients in Q(zeta_m), length phi(m), with no collapse back
// to a smaller order; this keeps mixed-order arithmetic aligned.
std::vector<Rational> Cyclotomic::lifted_coeffs(long new_order) const {
    if (new_order % order_ != 0)
        fail(errc::internal_error, "cyclotomic lift requires a multiple order");
    std::vector<Rational> out;
    if (new_order == order_) {
        out = c_;
    } else {
        long step = new_order / order_;
        Poly raw(static_cast<std::size_t>((c_.size() - 1) * step) + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) raw[i * step] = c_[i];
        out = poly_mod(std::move(raw), cyclotomic_polynomial(new_order));
    }
    out.resize(static_cast<std::size_t>(euler_phi(new_order)), Rational(0));
    return out;
}

Cyclotomic Cyclotomic::lifted(long new_order) const {
    if (new_order == order_) return *this;
    return Cyclotomic(new_order, lifted_coeffs(new_order));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    long m = std::lcm(a.order_, b.order_);
    std::vector<Rational> x = a.lifted_coeffs(m);
    std::vector<Rational> y = b.lifted_coeffs(m);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return Cyclotomic(m, std::move(x));
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    long m = std::lcm(a.order_, b.order_);
    std::vector<Rational> x = a.lifted_coeffs(m);
    std::vector<Rational> y = b.lifted_coeffs(m);
    std::vector<Rational> prod(x.size() + y.size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] == 0) continue;
            prod[i + j] += x[i] * y[j];
        }
    }
    Poly reduced = m == 1 ? std::move(prod) : poly_mod(std::move(prod), cyclotomic_polynomial(m));
    return Cyclotomic(m, std::move(reduced));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other) { return *this = *this + other; }
Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other) { return *this = *this - other; }
Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other) { return *this = *this * other; }

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) fail(errc::division_by_zero, "inverse of zero cyclotomic element");
    if (order_ == 1) return Cyclotomic(Rational(1) / c_[0]);
    Poly a = c_;
    poly_trim(a);
    Poly inv = poly_inverse_mod(a, cyclotomic_polynomial(order_));
    return Cyclotomic(order_, std::move(inv));
}

Cyclotomic Cyclotomic::pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    Cyclotomic base = *this;
    Cyclotomic acc(Rational(1));
    unsigned long long n = static_cast<unsigned long long>(e);
    while (n > 0) {
        if (n & 1ULL) acc *= base;
        n >>= 1ULL;
        if (n > 0) base *= base;
    }
    return acc;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.order_ == b.order_) return a.c_ == b.c_;
    long m = std::lcm(a.order_, b.order_);
    return a.lifted_coeffs(m) == b.lifted_coeffs(m);
}

std::complex<double> Cyclotomic::eval() const {
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        double theta = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(order_);
        acc += to_double(c_[i]) * std::complex<double>(std::cos(theta), std::sin(theta));
    }
    return acc;
}

std::string Cyclotomic::str() const {
    std::ostringstream out;
    out << "[" << order_ << ";";
    for (std::size_t i = 0; i < c_.size(); ++i)
        out << (i == 0 ? " " : ", ") << to_string(c_[i]);
    out << "]";
    return out.str();
}

Cyclotomic Cyclotomic::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        fail(errc::parse_error, "cyclotomic element must be written '[b; c0, ...]'");
    std::string body = text.substr(1, text.size() - 2);
    auto semi = body.find(';');
    if (semi == std::string::npos)
        fail(errc::parse_error, "cyclotomic element missing ';' in '" + text + "'");
    long order = 0;
    try {
        order = std::stol(body.substr(0, semi));
    } catch (const std::exception&) {
        fail(errc::parse_error, "invalid cyclotomic order in '" + text + "'");
    }
    if (order < 1) fail(errc::parse_error, "cyclotomic order must be positive");
    std::vector<Rational> coeffs;
    std::string rest = body.substr(semi + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        auto comma = rest.find(',', pos);
        std::string item = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        std::size_t b = item.find_first_not_of(' ');
        std::size_t e = item.find_last_not_of(' ');
        if (b == std::string::npos) fail(errc::parse_error, "empty coefficient in '" + text + "'");
        coeffs.push_back(parse_rational(item.substr(b, e - b + 1)));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (static_cast<long>(coeffs.size()) != euler_phi(order))
        fail(errc::parse_error, "cyclotomic element has wrong coefficient count for order " +
                                    std::to_string(order));
    return Cyclotomic(order, std::move(coeffs));
}

} // namespace mzv
