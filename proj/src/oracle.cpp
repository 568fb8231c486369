#include "mzv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "mzv/error.hpp"
#include "mzv/lerch.hpp"

namespace mzv {

namespace {

using cdouble = std::complex<double>;

constexpr double pi_d = 3.14159265358979323846;
const cdouble i_unit(0.0, 1.0);

cdouble log_gamma_core(cdouble z) {
    // Lanczos series, valid for Re z > 0.
    static const double cof[14] = {
        57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
        -0.491913816097620199,   0.339946499848118887e-4, 0.465236289270485756e-4,
        -0.983744753048795646e-4, 0.158088703224912494e-3, -0.210264441724104883e-3,
        0.217439618115212643e-3, -0.164318106536763890e-3, 0.844182239838527433e-4,
        -0.261908384015814087e-4, 0.368991826595316234e-5};
    cdouble x = z;
    cdouble tmp = x + 5.24218750000000000;
    tmp = (x + 0.5) * std::log(tmp) - tmp;
    cdouble ser(0.999999999999997092, 0.0);
    cdouble y = x;
    for (int j = 0; j < 14; ++j) {
        y += 1.0;
        ser += cof[j] / y;
    }
    return tmp + std::log(2.5066282746310005 * ser / x);
}

cdouble log_sin_pi(cdouble z) {
    if (z.imag() > 8.0) {
        // sin(pi z) = e^{-i pi z} (e^{2 i pi z} - 1) / (2 i), |e^{2 i pi z}| << 1
        cdouble w = std::exp(2.0 * pi_d * i_unit * z);
        return -i_unit * pi_d * z + std::log(w - 1.0) - std::log(2.0 * i_unit);
    }
    if (z.imag() < -8.0) return std::conj(log_sin_pi(std::conj(z)));
    return std::log(std::sin(pi_d * z));
}

} // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    if (z.real() >= 0.5) return log_gamma_core(z);
    // reflection in log space; branch shifts of 2 pi i wash out under exp
    return std::log(cdouble(pi_d)) - log_sin_pi(z) - log_gamma_core(1.0 - z);
}

std::complex<double> gamma_numeric(std::complex<double> z) { return std::exp(log_gamma(z)); }

std::string OracleResult::json() const {
    std::ostringstream out;
    out.precision(15);
    out << "{\"value_re\": " << value.real() << ", \"value_im\": " << value.imag()
        << ", \"est_error\": " << est_error << ", \"method\": \"" << method << "\", \"params\": {";
    bool first = true;
    for (const auto& [k, v] : params) {
        out << (first ? "" : ", ") << "\"" << k << "\": " << v;
        first = false;
    }
    out << "}}";
    return out.str();
}

namespace {

// Powers of the subleading part u(m) = sum gamma_j m^{-delta_j}, kept as
// exponent-drop -> coefficient maps.
std::vector<std::map<long, double>> u_power_table(const std::map<long, double>& drops, int max_k) {
    std::vector<std::map<long, double>> table(static_cast<std::size_t>(max_k) + 1);
    table[0][0] = 1.0;
    for (int k = 1; k <= max_k; ++k) {
        for (const auto& [e, g] : table[static_cast<std::size_t>(k - 1)])
            for (const auto& [de, dg] : drops) table[static_cast<std::size_t>(k)][e + de] += g * dg;
    }
    return table;
}

cdouble binomial_coeff(cdouble minus_s, int k) {
    // C(-s, k) with minus_s = -s
    cdouble acc(1.0, 0.0);
    for (int j = 0; j < k; ++j) acc *= (minus_s - static_cast<double>(j)) / static_cast<double>(j + 1);
    return acc;
}

struct N1Setup {
    long lead_exp = 0;
    double lead_coeff = 1.0;
    std::map<long, double> drops;
    std::vector<std::map<long, double>> u_pows;
    std::vector<double> poly_values; // P(1) .. P(M-1)
};

cdouble n1_evaluate(const N1Setup& setup, cdouble s, int cutoff, int order) {
    cdouble acc(0.0, 0.0);
    for (int m = 1; m < cutoff; ++m)
        acc += std::exp(-s * std::log(setup.poly_values[static_cast<std::size_t>(m)]));
    cdouble lead_pow = std::exp(-s * std::log(setup.lead_coeff));
    cdouble w_base = static_cast<double>(setup.lead_exp) * s;
    for (int k = 0; k <= order; ++k) {
        cdouble binom = binomial_coeff(-s, k);
        cdouble inner(0.0, 0.0);
        for (const auto& [e, g] : setup.u_pows[static_cast<std::size_t>(k)])
            inner += g * zeta_tail_numeric(w_base + static_cast<double>(e), cutoff);
        acc += lead_pow * binom * inner;
    }
    return acc;
}

} // namespace

OracleResult n1_binomial_continuation(const MultiPoly& poly, std::complex<double> s, int cutoff,
                                      int order) {
    if (poly.nvars() != 1) fail(errc::var_arity_mismatch, "this continuation needs one variable");
    if (poly.is_zero() || !check_hdf_sufficient(poly))
        fail(errc::certification_failed, "polynomial must be nonzero with positive coefficients");
    if (cutoff < 8 || order < 2) fail(errc::unsupported_argument, "cutoff/order too small");
    // At negative real parts the direct terms reach P(M)^{|Re s|} against an
    // O(1) answer; a short direct block keeps the roundoff of that
    // cancellation below the tolerance while the binomial tail still
    // contracts fast.
    if (s.real() < 0.5) cutoff = std::min(cutoff, 8);

    N1Setup setup;
    const auto& terms = poly.terms();
    auto lead = std::prev(terms.end());
    setup.lead_exp = lead->first[0];
    setup.lead_coeff = to_double(lead->second);
    if (setup.lead_exp < 1)
        fail(errc::certification_failed, "polynomial must actually involve the variable");
    for (auto it = terms.begin(); it != lead; ++it) {
        long delta = setup.lead_exp - it->first[0];
        setup.drops[delta] += to_double(it->second) / setup.lead_coeff;
    }
    double u_at_cutoff = 0.0;
    for (const auto& [de, dg] : setup.drops)
        u_at_cutoff += dg * std::pow(static_cast<double>(cutoff), -static_cast<double>(de));
    if (u_at_cutoff >= 0.75)
        fail(errc::tail_divergent,
             "binomial tail does not contract at the cutoff; raise the cutoff");

    setup.u_pows = u_power_table(setup.drops, order + 1);
    setup.poly_values.resize(static_cast<std::size_t>(cutoff), 0.0);
    std::vector<Rational> point(1);
    for (int m = 1; m < cutoff; ++m) {
        point[0] = Rational(m);
        setup.poly_values[static_cast<std::size_t>(m)] = to_double(poly.eval(point));
    }

    // distance from every zeta argument to the pole at 1
    double min_dist = std::abs(static_cast<double>(setup.lead_exp) * s - 1.0);
    for (int k = 1; k <= order + 1; ++k)
        for (const auto& [e, g] : setup.u_pows[static_cast<std::size_t>(k)])
            min_dist = std::min(min_dist,
                                std::abs(static_cast<double>(setup.lead_exp) * s +
                                         static_cast<double>(e) - 1.0));
    if (std::abs(static_cast<double>(setup.lead_exp) * s - 1.0) < 1e-6)
        fail(errc::near_pole, "the leading zeta argument sits on the pole");

    OracleResult result;
    result.method = "n1-binomial";
    result.params["cutoff"] = cutoff;
    result.params["order"] = order;

    bool offset = min_dist < 5e-3;
    result.params["epsilon_offset"] = offset ? 1e-3 : 0.0;
    if (!offset) {
        result.value = n1_evaluate(setup, s, cutoff, order);
    } else {
        // the pole of a zeta tail is cancelled by the vanishing binomial
        // factor; recover the finite product by Richardson in the offset
        double eps = 1e-3;
        auto sym = [&](double e) {
            return 0.5 * (n1_evaluate(setup, s + cdouble(e, 0.0), cutoff, order) +
                          n1_evaluate(setup, s - cdouble(e, 0.0), cutoff, order));
        };
        cdouble a1 = sym(eps), a2 = sym(eps / 2.0);
        result.value = (4.0 * a2 - a1) / 3.0;
    }

    // first dropped order
    cdouble dropped(0.0, 0.0);
    cdouble w_base = static_cast<double>(setup.lead_exp) * s;
    for (const auto& [e, g] : setup.u_pows[static_cast<std::size_t>(order + 1)]) {
        cdouble w = w_base + static_cast<double>(e);
        if (std::abs(w - 1.0) < 1e-3) continue; // its own product limit is finite and tiny
        dropped += g * zeta_tail_numeric(w, cutoff);
    }
    // first dropped binomial order, plus the roundoff floor of the interior
    // cancellation (the intermediates reach P(cutoff)^{|Re s|} at negative
    // real parts while the answer stays O(1))
    std::vector<Rational> edge{Rational(cutoff)};
    double cancel_scale =
        std::pow(to_double(poly.eval(edge)), std::max(0.0, -s.real()));
    result.est_error = std::abs(binomial_coeff(-s, order + 1) * dropped) +
                       cancel_scale * 5e-14 + 1e-13 * (1.0 + std::abs(result.value));
    return result;
}

double mb_identity_check(std::complex<double> s, std::complex<double> lam, double c,
                         double height) {
    if (s.real() <= 0) fail(errc::unsupported_argument, "needs Re s > 0");
    if (lam == cdouble(0.0, 0.0) || (lam.real() <= 0 && lam.imag() == 0))
        fail(errc::unsupported_argument, "lam must avoid the cut (-inf, 0]");
    if (!(-s.real() < c && c < 0)) fail(errc::unsupported_argument, "needs -Re s < c < 0");
    if (height <= 1) fail(errc::unsupported_argument, "height too small");

    cdouble log_lam = std::log(lam);
    cdouble lg_s = log_gamma(s);
    const double h = 1.0 / 32.0;
    long steps = static_cast<long>(std::ceil(height / h));
    cdouble quad(0.0, 0.0);
    for (long k = -steps; k <= steps; ++k) {
        cdouble z(c, h * static_cast<double>(k));
        cdouble v = std::exp(log_gamma(s + z) + log_gamma(-z) - lg_s + z * log_lam);
        quad += (k == -steps || k == steps) ? 0.5 * v : v;
    }
    quad *= h / (2.0 * pi_d);
    cdouble target = std::exp(-s * std::log(1.0 + lam));
    return std::abs(target - quad);
}

double mmb_identity_check(std::complex<double> s, std::span<const std::complex<double>> lams,
                          std::span<const double> rhos, double height) {
    if (lams.size() < 2) fail(errc::unsupported_argument, "needs lam_0 and at least one lam_j");
    std::size_t r = lams.size() - 1;
    if (rhos.size() != r) fail(errc::unsupported_argument, "needs one rho per lam_j (j >= 1)");
    if (r > 2) fail(errc::unsupported_depth, "only r <= 2 is supported");
    double rho_sum = 0.0;
    for (double rho : rhos) {
        if (rho <= 0) fail(errc::unsupported_argument, "needs rho_j > 0");
        rho_sum += rho;
    }
    for (const auto& lam : lams)
        if (lam.real() <= 0) fail(errc::unsupported_argument, "needs Re lam_j > 0");
    if (s.real() <= rho_sum) fail(errc::unsupported_argument, "needs Re s > sum rho_j");
    if (height <= 1) fail(errc::unsupported_argument, "height too small");

    cdouble sum_lam(0.0, 0.0);
    for (const auto& lam : lams) sum_lam += lam;
    cdouble target = std::exp(-s * std::log(sum_lam));
    cdouble lg_s = log_gamma(s);
    cdouble log_l0 = std::log(lams[0]);

    if (r == 1) {
        cdouble log_l1 = std::log(lams[1]);
        const double h = 1.0 / 32.0;
        long steps = static_cast<long>(std::ceil(height / h));
        cdouble quad(0.0, 0.0);
        for (long k = -steps; k <= steps; ++k) {
            cdouble z(rhos[0], h * static_cast<double>(k));
            cdouble v = std::exp(log_gamma(s - z) + log_gamma(z) - lg_s - (s - z) * log_l0 -
                                 z * log_l1);
            quad += (k == -steps || k == steps) ? 0.5 * v : v;
        }
        quad *= h / (2.0 * pi_d);
        return std::abs(target - quad);
    }

    cdouble log_l1 = std::log(lams[1]);
    cdouble log_l2 = std::log(lams[2]);
    const double h = 1.0 / 16.0;
    long steps = static_cast<long>(std::ceil(height / h));
    cdouble quad(0.0, 0.0);
    for (long k1 = -steps; k1 <= steps; ++k1) {
        cdouble z1(rhos[0], h * static_cast<double>(k1));
        double w1 = (k1 == -steps || k1 == steps) ? 0.5 : 1.0;
        cdouble row(0.0, 0.0);
        cdouble lg_z1 = log_gamma(z1);
        for (long k2 = -steps; k2 <= steps; ++k2) {
            cdouble z2(rhos[1], h * static_cast<double>(k2));
            double w2 = (k2 == -steps || k2 == steps) ? 0.5 : 1.0;
            cdouble v = std::exp(log_gamma(s - z1 - z2) + lg_z1 + log_gamma(z2) - lg_s -
                                 (s - z1 - z2) * log_l0 - z1 * log_l1 - z2 * log_l2);
            row += w2 * v;
        }
        quad += w1 * row;
    }
    quad *= (h * h) / (4.0 * pi_d * pi_d);
    return std::abs(target - quad);
}

namespace {

struct Separation {
    Rational kappa{1};
    std::vector<MultiPoly> factors; // factors[v] univariate over one variable; constant 1 if absent
};

std::optional<Separation> separate_variables(const MultiPoly& p) {
    int nv = p.nvars();
    Separation out;
    out.factors.assign(static_cast<std::size_t>(nv), MultiPoly::constant(1, Rational(1)));
    if (p.is_zero()) return std::nullopt;
    MultiPoly rest = p;
    for (int v = 0; v < nv; ++v) {
        if (rest.degree_in(v) == 0) continue;
        // group by the exponent of X_v
        std::map<int, MultiPoly> groups;
        for (const auto& [e, c] : rest.terms()) {
            MultiPoly::Exponents reduced = e;
            int ev = reduced[static_cast<std::size_t>(v)];
            reduced[static_cast<std::size_t>(v)] = 0;
            auto it = groups.find(ev);
            if (it == groups.end()) it = groups.emplace(ev, MultiPoly(nv)).first;
            it->second.add_term(reduced, c);
        }
        const MultiPoly& base = groups.begin()->second;
        MultiPoly uni(1);
        for (const auto& [ev, w] : groups) {
            // w must be ratio * base
            if (w.term_count() != base.term_count()) return std::nullopt;
            Rational ratio = w.terms().begin()->second / base.terms().begin()->second;
            auto ib = base.terms().begin();
            for (auto iw = w.terms().begin(); iw != w.terms().end(); ++iw, ++ib) {
                if (iw->first != ib->first) return std::nullopt;
                if (iw->second != ratio * ib->second) return std::nullopt;
            }
            uni.add_term({ev}, ratio);
        }
        out.factors[static_cast<std::size_t>(v)] = uni;
        rest = base;
    }
    if (!rest.is_constant()) return std::nullopt;
    out.kappa = rest.constant_value();
    if (out.kappa == 0) return std::nullopt;
    return out;
}

} // namespace

OracleResult factorized_series_oracle(const ProblemSpec& spec,
                                      std::span<const std::complex<double>> s) {
    if (static_cast<int>(s.size()) != spec.T)
        fail(errc::unsupported_argument, "needs one exponent per polynomial");
    std::vector<MultiPoly> polys = spec.P;
    // widen the outer polynomials to n variables so every factorization
    // addresses the same variable set
    std::vector<MultiPoly> all;
    for (const auto& p : polys) {
        MultiPoly widened(spec.n);
        for (const auto& [e, c] : p.terms()) {
            MultiPoly::Exponents we = e;
            we.push_back(0);
            widened.add_term(we, c);
        }
        all.push_back(widened);
    }
    all.push_back(spec.PT);

    std::vector<Separation> seps;
    for (const auto& p : all) {
        auto sep = separate_variables(p);
        if (!sep)
            fail(errc::not_factorizable,
                 "'" + p.str() + "' does not split into per-variable factors");
        if (sep->kappa <= 0)
            fail(errc::not_factorizable, "'" + p.str() + "' has a nonpositive constant factor");
        seps.push_back(std::move(*sep));
    }

    OracleResult result;
    result.method = "factorized-series";
    cdouble value(1.0, 0.0);
    double rel_err = 1e-12;
    for (std::size_t j = 0; j < all.size(); ++j)
        value *= std::exp(-s[j] * std::log(to_double(seps[j].kappa)));

    for (int v = 0; v < spec.n; ++v) {
        bool twisted = v < spec.n - 1;
        std::vector<std::pair<const MultiPoly*, cdouble>> parts;
        for (std::size_t j = 0; j < all.size(); ++j) {
            const MultiPoly& u = seps[j].factors[static_cast<std::size_t>(v)];
            if (u.degree_in(0) >= 1) parts.emplace_back(&u, s[j]);
        }
        if (parts.empty()) {
            if (twisted)
                fail(errc::not_factorizable, "variable X" + std::to_string(v + 1) +
                                                 " occurs in no polynomial");
            continue;
        }
        bool all_monomial = true;
        for (const auto& [u, se] : parts)
            if (!u->is_monomial()) all_monomial = false;

        cdouble factor;
        if (all_monomial) {
            cdouble arg(0.0, 0.0);
            for (const auto& [u, se] : parts) {
                const auto& [expo, c] = *u->terms().begin();
                arg += static_cast<double>(expo[0]) * se;
                value *= std::exp(-se * std::log(to_double(c)));
            }
            factor = twisted ? lerch_numeric_complex(spec.twists[static_cast<std::size_t>(v)], arg)
                             : riemann_numeric(arg);
        } else if (!twisted && parts.size() == 1) {
            OracleResult inner = n1_binomial_continuation(*parts[0].first, parts[0].second);
            factor = inner.value;
            rel_err += inner.est_error / std::max(1e-300, std::abs(inner.value));
        } else {
            // direct absolutely convergent summation
            double sigma = 0.0;
            for (const auto& [u, se] : parts) sigma += u->degree_in(0) * se.real();
            if (sigma <= 1.05)
                fail(errc::not_factorizable,
                     "variable X" + std::to_string(v + 1) +
                         " has a non-monomial twisted factor outside the summable domain");
            cdouble mu(1.0, 0.0);
            if (twisted) mu = spec.twists[static_cast<std::size_t>(v)].value();
            cdouble acc(0.0, 0.0);
            cdouble mu_pow(1.0, 0.0);
            const long M = 200000;
            double last = 0.0;
            std::vector<Rational> point(1);
            for (long m = 1; m <= M; ++m) {
                mu_pow *= mu;
                point[0] = Rational(m);
                cdouble term = mu_pow;
                for (const auto& [u, se] : parts)
                    term *= std::exp(-se * std::log(to_double(u->eval(point))));
                acc += term;
                last = std::abs(term);
            }
            acc += 0.0;
            rel_err += last * static_cast<double>(M) / (sigma - 1.0) /
                       std::max(1e-300, std::abs(acc));
            factor = acc;
        }
        value *= factor;
    }
    result.value = value;
    result.est_error = std::abs(value) * rel_err;
    result.params["tol"] = rel_err;
    return result;
}

} // namespace mzv
