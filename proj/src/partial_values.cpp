#include "mzv/partial_values.hpp"

#include <functional>
#include <sstream>

#include "mzv/combinatorics.hpp"
#include "mzv/error.hpp"

namespace mzv {

ProblemSpec::ProblemSpec(int n_in, int T_in, std::vector<MultiPoly> P_in, MultiPoly PT_in,
                         std::vector<RootOfUnity> twists_in)
    : n(n_in), T(T_in), P(std::move(P_in)), PT(std::move(PT_in)), twists(std::move(twists_in)) {
    if (n < 1) fail(errc::validation_failed, "n must be >= 1");
    if (T < 1) fail(errc::validation_failed, "T must be >= 1");
    if (static_cast<int>(P.size()) != T - 1)
        fail(errc::validation_failed, "expected " + std::to_string(T - 1) + " outer polynomials");
    if (PT.nvars() != n)
        fail(errc::validation_failed, "the last polynomial must use " + std::to_string(n) +
                                          " variable(s)");
    for (const auto& p : P)
        if (p.nvars() != n - 1)
            fail(errc::validation_failed, "outer polynomials must use " + std::to_string(n - 1) +
                                              " variable(s)");
    if (static_cast<int>(twists.size()) != n - 1)
        fail(errc::validation_failed, "expected " + std::to_string(n - 1) + " twist(s)");
    auto parts = decompose_xn(PT);
    for (auto& [q, e] : parts) {
        Q.push_back(std::move(q));
        a.push_back(e);
    }
    for (std::size_t j = 1; j < a.size(); ++j) alpha.push_back(a[j] - a[0]);
}

std::vector<MultiPoly> ProblemSpec::dc_factors() const {
    std::vector<MultiPoly> out = P;
    out.insert(out.end(), Q.begin(), Q.end());
    return out;
}

EvalPoint::EvalPoint(std::vector<long long> N_in) : N(std::move(N_in)) {
    for (long long v : N)
        if (v < 0) fail(errc::unsupported_argument, "evaluation points are s = -N with N >= 0");
}

ValidationReport validate(const ProblemSpec& spec) {
    ValidationReport report;
    report.abscissa_bound = Rational(0);
    for (std::size_t i = 0; i < spec.P.size(); ++i)
        if (!check_hdf_sufficient(spec.P[i]))
            report.errors.push_back("P_" + std::to_string(i + 1) +
                                    ": not certified (needs nonzero, all coefficients >= 0)");
    for (std::size_t j = 0; j < spec.Q.size(); ++j)
        if (!check_hdf_sufficient(spec.Q[j]))
            report.errors.push_back("Q_" + std::to_string(j) +
                                    ": not certified (needs nonzero, all coefficients >= 0)");
    if (spec.a.empty() || spec.a.back() < 1)
        report.errors.push_back("P_T must genuinely involve X" + std::to_string(spec.n));
    if (report.errors.empty() && spec.n >= 2) {
        std::vector<MultiPoly> factors = spec.dc_factors();
        if (!check_growth_condition(factors))
            report.errors.push_back(
                "growth condition fails: some variable occurs in no polynomial factor");
    }
    if (report.errors.empty()) {
        long sum = 0;
        for (int e : spec.a) sum += e;
        report.abscissa_bound = make_rational(static_cast<long>(spec.a.size()), sum);
    }
    return report;
}

std::string ValidationReport::str() const {
    std::ostringstream out;
    if (ok()) {
        out << "valid; abscissa bound Re s_T > " << to_string(abscissa_bound)
            << "; Re s_1..s_{T-1} bound: not constructive";
    } else {
        for (std::size_t i = 0; i < errors.size(); ++i)
            out << (i ? "\n" : "") << "error: " << errors[i];
    }
    return out.str();
}

std::vector<SecondSumTerm> enumerate_second_sum(long long N_T, std::span<const int> a) {
    int d = static_cast<int>(a.size()) - 1;
    if (d < 1) fail(errc::wrong_shape, "the boundary sum needs d >= 1");
    long long a_d = a[static_cast<std::size_t>(d)];
    long long alpha_d = a_d - a[0];
    std::vector<SecondSumTerm> out;
    long long i_max = (a_d * N_T + 1) / alpha_d;
    for (long long i = 0; i <= i_max; ++i) {
        long long target = 1 + a_d * N_T - i * alpha_d;
        if (target < 0) continue;
        // enumerate l in N_0^{d-1} with sum_j (a_d - a_j) l_j = target,
        // lexicographically
        std::vector<long long> ell(static_cast<std::size_t>(d - 1), 0);
        std::function<void(int, long long)> rec = [&](int j, long long rest) {
            if (j == d - 1) {
                if (rest != 0) return;
                long long total = i;
                for (long long l : ell) total += l;
                if (total - N_T < 1)
                    fail(errc::internal_positivity_violation,
                         "boundary index with |l|+i-N_T < 1; this indicates a bug");
                out.push_back(SecondSumTerm{i, ell});
                return;
            }
            long long w = a_d - a[static_cast<std::size_t>(j + 1)]; // weight of l_j, positive
            for (long long l = 0; l * w <= rest; ++l) {
                ell[static_cast<std::size_t>(j)] = l;
                rec(j + 1, rest - l * w);
            }
            ell[static_cast<std::size_t>(j)] = 0;
        };
        rec(0, target);
    }
    return out;
}

namespace {

void require_valid(const ProblemSpec& spec) {
    ValidationReport report = validate(spec);
    if (!report.ok()) fail(errc::validation_failed, report.str());
}

void push_trace(const ValueOptions& options, std::string sum, std::vector<long long> index,
                const Rational& coefficient, const DCPoint& point, const ValueExpr& value) {
    if (!options.trace) return;
    TraceEntry entry;
    entry.sum = std::move(sum);
    entry.index = std::move(index);
    entry.coefficient = to_string(coefficient);
    entry.point = point.key();
    entry.kind = dc_tag_name(point.tag);
    entry.value = value.str();
    options.trace->push_back(entry);
}

// All k in N_0^d with |k| <= bound, lexicographically.
std::vector<std::vector<long long>> tuples_with_bounded_sum(int d, long long bound) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> k(static_cast<std::size_t>(d), 0);
    std::function<void(int, long long)> rec = [&](int j, long long rest) {
        if (j == d) {
            out.push_back(k);
            return;
        }
        for (long long v = 0; v <= rest; ++v) {
            k[static_cast<std::size_t>(j)] = v;
            rec(j + 1, rest - v);
        }
        k[static_cast<std::size_t>(j)] = 0;
    };
    rec(0, bound);
    return out;
}

} // namespace

ValueExpr value_general(const ProblemSpec& spec, const EvalPoint& point,
                        const ValueOptions& options) {
    require_valid(spec);
    if (static_cast<int>(point.N.size()) != spec.T)
        fail(errc::unsupported_argument, "evaluation point needs " + std::to_string(spec.T) +
                                             " coordinates");
    const int d = spec.d();
    const long long N_T = point.N.back();
    std::vector<MultiPoly> factors = spec.dc_factors();

    if (d == 0) {
        // P_T = Q_0 X_n^{a_0}: the inner sum splits off zeta(a_0 s_T).
        std::vector<unsigned long> k;
        for (long long v : point.N) k.push_back(static_cast<unsigned long>(v));
        Cyclotomic rest = dc_value_nonpos(factors, k, spec.twists, options.term_cap);
        Rational z = zeta_neg(static_cast<unsigned>(spec.a[0] * N_T));
        return ValueExpr(Cyclotomic(z) * rest);
    }

    ValueExpr result;

    // interior sum over k in N_0^d with |k| <= N_T
    for (const auto& k : tuples_with_bounded_sum(d, N_T)) {
        long long ksum = 0;
        long long alpha_dot = 0;
        for (int j = 0; j < d; ++j) {
            ksum += k[static_cast<std::size_t>(j)];
            alpha_dot += static_cast<long long>(spec.alpha[static_cast<std::size_t>(j)]) *
                         k[static_cast<std::size_t>(j)];
        }
        unsigned b_index = static_cast<unsigned>(spec.a[0] * N_T + alpha_dot + 1);
        Rational bt = bernoulli_twisted(b_index);
        if (bt == 0) continue;
        std::vector<unsigned long> parts;
        for (long long v : k) parts.push_back(static_cast<unsigned long>(v));
        parts.push_back(static_cast<unsigned long>(N_T - ksum));
        Rational coeff = -Rational(multinomial(static_cast<unsigned long>(N_T), parts)) * bt /
                         Rational(static_cast<long>(b_index));
        std::vector<unsigned long> dc_k;
        for (std::size_t t = 0; t + 1 < point.N.size(); ++t)
            dc_k.push_back(static_cast<unsigned long>(point.N[t]));
        dc_k.push_back(static_cast<unsigned long>(N_T - ksum));
        for (long long v : k) dc_k.push_back(static_cast<unsigned long>(v));
        Cyclotomic dc = dc_value_nonpos(factors, dc_k, spec.twists, options.term_cap);
        ValueExpr term = ValueExpr(dc).scaled(Cyclotomic(coeff));
        if (options.trace) {
            std::vector<long long> dc_args;
            for (unsigned long v : dc_k) dc_args.push_back(-static_cast<long long>(v));
            push_trace(options, "interior", k, coeff, DCPoint(dc_args, factors, spec.twists), term);
        }
        result += term;
    }

    // boundary sum over the solutions of the exponent equation
    Rational nt_fact(factorial(static_cast<unsigned long>(N_T)));
    for (const auto& term_index : enumerate_second_sum(N_T, spec.a)) {
        long long lsum = 0;
        Rational ell_fact(1);
        for (long long l : term_index.ell) {
            lsum += l;
            ell_fact *= Rational(factorial(static_cast<unsigned long>(l)));
        }
        long long g = lsum + term_index.i - N_T; // >= 1, asserted by the enumerator
        Rational coeff = nt_fact / Rational(spec.a.back());
        coeff *= Rational(factorial(static_cast<unsigned long>(g - 1)));
        coeff /= Rational(factorial(static_cast<unsigned long>(term_index.i))) * ell_fact;
        if ((lsum + term_index.i + N_T) % 2 != 0) coeff = -coeff;

        std::vector<long long> dc_args;
        for (std::size_t t = 0; t + 1 < point.N.size(); ++t) dc_args.push_back(-point.N[t]);
        dc_args.push_back(-term_index.i);
        for (long long l : term_index.ell) dc_args.push_back(-l);
        dc_args.push_back(g);
        DCPoint dc_point(dc_args, factors, spec.twists);
        ValueExpr term = dc_value_mixed(dc_point, options.term_cap).scaled(Cyclotomic(coeff));
        if (options.trace) {
            std::vector<long long> index{term_index.i};
            index.insert(index.end(), term_index.ell.begin(), term_index.ell.end());
            push_trace(options, "boundary", index, coeff, dc_point, term);
        }
        result += term;
    }
    return result;
}

ValueExpr value_d1(const ProblemSpec& spec, const EvalPoint& point, const ValueOptions& options) {
    if (spec.d() != 1 || spec.a[0] != 0)
        fail(errc::wrong_shape, "this path needs d = 1 with a_0 = 0");
    require_valid(spec);
    if (static_cast<int>(point.N.size()) != spec.T)
        fail(errc::unsupported_argument, "evaluation point needs " + std::to_string(spec.T) +
                                             " coordinates");
    const long long N_T = point.N.back();
    const int a1 = spec.a[1];
    std::vector<MultiPoly> factors = spec.dc_factors();
    ValueExpr result;

    if (a1 == 1) {
        // The residue term survives only for a_1 = 1, where the shifted
        // point (-N', -N_T - 1, 1) is integral.
        std::vector<long long> dc_args;
        for (std::size_t t = 0; t + 1 < point.N.size(); ++t) dc_args.push_back(-point.N[t]);
        dc_args.push_back(-N_T - 1);
        dc_args.push_back(1);
        DCPoint dc_point(dc_args, factors, spec.twists);
        Rational coeff = make_rational(-1L, static_cast<long>(N_T + 1));
        ValueExpr term = dc_value_mixed(dc_point, options.term_cap).scaled(Cyclotomic(coeff));
        push_trace(options, "boundary", {}, coeff, dc_point, term);
        result += term;
    }

    for (long long l = 0; l <= N_T; ++l) {
        Rational z = zeta_neg(static_cast<unsigned>(a1 * l));
        if (z == 0) continue;
        Rational coeff = Rational(binomial(static_cast<unsigned long>(N_T),
                                           static_cast<unsigned long>(l))) *
                         z;
        std::vector<unsigned long> dc_k;
        for (std::size_t t = 0; t + 1 < point.N.size(); ++t)
            dc_k.push_back(static_cast<unsigned long>(point.N[t]));
        dc_k.push_back(static_cast<unsigned long>(N_T - l));
        dc_k.push_back(static_cast<unsigned long>(l));
        Cyclotomic dc = dc_value_nonpos(factors, dc_k, spec.twists, options.term_cap);
        ValueExpr term = ValueExpr(dc).scaled(Cyclotomic(coeff));
        if (options.trace) {
            std::vector<long long> dc_args;
            for (unsigned long v : dc_k) dc_args.push_back(-static_cast<long long>(v));
            push_trace(options, "interior", {l}, coeff, DCPoint(dc_args, factors, spec.twists),
                       term);
        }
        result += term;
    }
    return result;
}

ValueExpr value_d2(const ProblemSpec& spec, const EvalPoint& point, D2Mode mode,
                   const ValueOptions& options) {
    if (spec.d() != 2 || spec.a[0] != 0)
        fail(errc::wrong_shape, "this path needs d = 2 with a_0 = 0");
    const long a1 = spec.a[1];
    const long a2 = spec.a[2];
    if (mode == D2Mode::a1_1_a2_2 && !(a1 == 1 && a2 == 2))
        fail(errc::wrong_shape, "the reparametrized path needs (a_1, a_2) = (1, 2)");
    require_valid(spec);
    if (static_cast<int>(point.N.size()) != spec.T)
        fail(errc::unsupported_argument, "evaluation point needs " + std::to_string(spec.T) +
                                             " coordinates");
    const long long N_T = point.N.back();
    std::vector<MultiPoly> factors = spec.dc_factors();
    ValueExpr result;

    // interior double sum, common to both parametrizations
    for (long long k1 = 0; k1 <= N_T; ++k1) {
        for (long long k2 = 0; k1 + k2 <= N_T; ++k2) {
            unsigned m = static_cast<unsigned>(a1 * k1 + a2 * k2);
            Rational b = bernoulli(m + 1);
            if (b == 0) continue;
            Rational coeff = Rational(factorial(static_cast<unsigned long>(N_T))) /
                             (Rational(factorial(static_cast<unsigned long>(N_T - k1 - k2))) *
                              Rational(factorial(static_cast<unsigned long>(k1))) *
                              Rational(factorial(static_cast<unsigned long>(k2))));
            coeff *= b / Rational(static_cast<long>(m + 1));
            if (m % 2 != 0) coeff = -coeff;
            std::vector<unsigned long> dc_k;
            for (std::size_t t = 0; t + 1 < point.N.size(); ++t)
                dc_k.push_back(static_cast<unsigned long>(point.N[t]));
            dc_k.push_back(static_cast<unsigned long>(N_T - k1 - k2));
            dc_k.push_back(static_cast<unsigned long>(k1));
            dc_k.push_back(static_cast<unsigned long>(k2));
            Cyclotomic dc = dc_value_nonpos(factors, dc_k, spec.twists, options.term_cap);
            ValueExpr term = ValueExpr(dc).scaled(Cyclotomic(coeff));
            if (options.trace) {
                std::vector<long long> dc_args;
                for (unsigned long v : dc_k) dc_args.push_back(-static_cast<long long>(v));
                push_trace(options, "interior", {k1, k2}, coeff,
                           DCPoint(dc_args, factors, spec.twists), term);
            }
            result += term;
        }
    }

    auto boundary_term = [&](long long k2, long long u, long long v, const Rational& coeff) {
        if (coeff == 0) return;
        std::vector<long long> dc_args;
        for (std::size_t t = 0; t + 1 < point.N.size(); ++t) dc_args.push_back(-point.N[t]);
        dc_args.push_back(-N_T + u);
        dc_args.push_back(-k2);
        dc_args.push_back(v);
        DCPoint dc_point(dc_args, factors, spec.twists);
        ValueExpr term = dc_value_mixed(dc_point, options.term_cap).scaled(Cyclotomic(coeff));
        push_trace(options, "boundary", {k2}, coeff, dc_point, term);
        result += term;
    };

    if (mode == D2Mode::standard) {
        long long k2_max = (a2 * N_T + 1) / (a2 - a1);
        for (long long k2 = 1; k2 <= k2_max; ++k2) {
            if ((a1 * k2 + 1) % a2 != 0) continue;
            long long v = (a1 * k2 + 1) / a2;
            long long u = ((a2 - a1) * k2 - 1) / a2;
            Rational poch = pochhammer(Rational(static_cast<long>(-N_T)), static_cast<unsigned>(u));
            if (poch == 0) continue;
            Rational coeff = Rational(factorial(static_cast<unsigned long>(v - 1))) /
                             (Rational(factorial(static_cast<unsigned long>(k2))) * Rational(a2));
            if (k2 % 2 != 0) coeff = -coeff;
            coeff *= poch;
            boundary_term(k2, u, v, coeff);
        }
    } else {
        // (a_1, a_2) = (1, 2): the divisibility filter forces k_2 = 2u + 1.
        for (long long u = 0; u <= N_T; ++u) {
            Rational coeff = Rational(factorial(static_cast<unsigned long>(u))) *
                             Rational(factorial(static_cast<unsigned long>(u))) *
                             Rational(binomial(static_cast<unsigned long>(N_T),
                                               static_cast<unsigned long>(u)));
            coeff /= Rational(2) * Rational(factorial(static_cast<unsigned long>(2 * u + 1)));
            if (u % 2 == 0) coeff = -coeff;
            boundary_term(2 * u + 1, u, u + 1, coeff);
        }
    }
    return result;
}

ValueExpr simplify(const ValueExpr& expr) {
    ValueExpr out;
    out.add_constant(expr.constant());
    for (const auto& [p, c] : expr.pi_terms()) out.add_pi_power(p, c);
    for (const auto& [key, pc] : expr.opaque_atoms()) out.add_opaque(pc.first, pc.second);

    for (const auto& [factors, coeff] : expr.lerch_atoms()) {
        // Fold defensively any nonpositive arguments into the coefficient.
        Cyclotomic c = coeff;
        LerchProduct kept;
        for (const auto& f : factors) {
            if (f.arg <= 0) {
                c *= lerch_nonpos_stirling(f.mu, static_cast<unsigned>(-f.arg));
            } else {
                kept.push_back(f);
            }
        }
        bool all_neg1_even = !kept.empty() && c.is_rational();
        for (const auto& f : kept)
            if (!(f.mu.den == 2 && f.arg >= 2 && f.arg % 2 == 0)) all_neg1_even = false;
        if (kept.empty()) {
            out.add_constant(c);
        } else if (all_neg1_even) {
            // zeta_{-1}(2k) = -(1 - 2^{1-2k}) zeta(2k), an exact pi power
            Rational r = c.rational_value();
            long long total = 0;
            for (const auto& f : kept) {
                unsigned k = static_cast<unsigned>(f.arg / 2);
                Rational factor = -(Rational(1) - pow_rational(Rational(2), 1 - f.arg)) *
                                  zeta_even_pi(k);
                r *= factor;
                total += f.arg;
            }
            out.add_pi_power(total, r);
        } else {
            out.add_lerch(kept, c);
        }
    }
    return out;
}

} // namespace mzv
