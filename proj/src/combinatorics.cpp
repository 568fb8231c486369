#include "mzv/combinatorics.hpp"

#include <mutex>

namespace mzv {

Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        fail(errc::parse_error, "invalid rational '" + text + "'");
    if (q.get_den() == 0) fail(errc::division_by_zero, "rational '" + text + "' has zero denominator");
    q.canonicalize();
    return q;
}

Rational pow_rational(const Rational& base, long long e) {
    if (e == 0) return Rational(1);
    if (base == 0) {
        if (e < 0) fail(errc::division_by_zero, "0 raised to a negative power");
        return Rational(0);
    }
    Rational b = base;
    unsigned long long n = static_cast<unsigned long long>(e < 0 ? -e : e);
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), b.get_num_mpz_t(), n);
    mpz_pow_ui(out.get_den_mpz_t(), b.get_den_mpz_t(), n);
    out.canonicalize();
    if (e < 0) out = Rational(1) / out;
    return out;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

std::mutex cache_mutex;

// B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k, seeded with B_0 = 1.
const Rational& bernoulli_cached(unsigned m) {
    static std::vector<Rational> table{Rational(1)};
    while (table.size() <= m) {
        unsigned j = static_cast<unsigned>(table.size());
        Rational acc(0);
        for (unsigned k = 0; k < j; ++k)
            acc += Rational(binomial(j + 1, k)) * table[k];
        table.push_back(-acc / Rational(Int(j) + 1));
    }
    return table[m];
}

} // namespace

Rational bernoulli(unsigned m) {
    std::lock_guard<std::mutex> lock(cache_mutex);
    return bernoulli_cached(m);
}

Rational bernoulli_twisted(unsigned m) {
    Rational b = bernoulli(m);
    return (m % 2 == 1) ? Rational(-b) : b;
}

Int stirling2(unsigned n, unsigned k) {
    if (k > n) return Int(0);
    if (n == 0) return Int(1); // S(0,0)
    std::lock_guard<std::mutex> lock(cache_mutex);
    // rows[n][k] for 0 <= k <= n
    static std::vector<std::vector<Int>> rows{{Int(1)}};
    while (rows.size() <= n) {
        unsigned j = static_cast<unsigned>(rows.size());
        const auto& prev = rows.back();
        std::vector<Int> row(j + 1);
        row[0] = Int(0);
        for (unsigned i = 1; i <= j; ++i) {
            Int left = (i <= j - 1) ? Int(Int(i) * prev[i]) : Int(0);
            row[i] = left + prev[i - 1];
        }
        rows.push_back(std::move(row));
    }
    return rows[n][k];
}

std::vector<Int> eulerian_poly(unsigned n) {
    // A_0 = 1; A_n = x * ((1-x) A_{n-1}' + n A_{n-1}), from f_n = x f_{n-1}'
    // with f_n = A_n / (1-x)^{n+1}.
    std::vector<Int> a{Int(1)};
    for (unsigned j = 1; j <= n; ++j) {
        std::vector<Int> next(a.size() + 1, Int(0));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i >= 1) {
                // x * x^{i-1} derivative pieces: (1-x) * i x^{i-1} -> i x^{i-1} - i x^i
                next[i] += Int(static_cast<long>(i)) * a[i];
                next[i + 1] -= Int(static_cast<long>(i)) * a[i];
            }
            next[i + 1] += Int(static_cast<long>(j)) * a[i];
        }
        // drop a trailing zero if the degree did not actually grow
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        a = std::move(next);
    }
    return a;
}

Int multinomial(unsigned long total, std::span<const unsigned long> parts) {
    unsigned long sum = 0;
    for (unsigned long p : parts) sum += p;
    if (sum != total)
        fail(errc::parts_mismatch, "multinomial parts sum to " + std::to_string(sum) +
                                       ", expected " + std::to_string(total));
    Int result(1);
    unsigned long remaining = total;
    for (unsigned long p : parts) {
        result *= binomial(remaining, p);
        remaining -= p;
    }
    return result;
}

Rational pochhammer(const Rational& x, unsigned n) {
    Rational result(1);
    Rational term = x;
    for (unsigned j = 0; j < n; ++j) {
        result *= term;
        term += 1;
    }
    return result;
}

} // namespace mzv
