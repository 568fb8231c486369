#include "mzv/dc_values.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mzv/combinatorics.hpp"
#include "mzv/error.hpp"

namespace mzv {

namespace {

DCPoint::Tag classify(const std::vector<long long>& args, const std::vector<MultiPoly>& polys) {
    bool all_nonpos = true;
    int positive_count = 0;
    std::size_t positive_index = 0;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] > 0) {
            all_nonpos = false;
            ++positive_count;
            positive_index = i;
        }
    }
    if (all_nonpos) return DCPoint::Tag::all_nonpositive;
    int nvars = polys.empty() ? 0 : polys[0].nvars();
    if (nvars == 0) return DCPoint::Tag::nvars_zero;
    if (positive_count == 1) {
        const MultiPoly& p = polys[positive_index];
        if (p.is_constant() && p.constant_value() > 0) return DCPoint::Tag::const_leading;
    }
    bool all_monomial = true;
    for (const MultiPoly& p : polys) {
        if (!p.is_monomial() || p.terms().begin()->second <= 0) {
            all_monomial = false;
            break;
        }
    }
    if (all_monomial) return DCPoint::Tag::monomial;
    return DCPoint::Tag::mixed_opaque;
}

} // namespace

DCPoint::DCPoint(std::vector<long long> args_in, std::vector<MultiPoly> polys_in,
                 std::vector<RootOfUnity> twists_in)
    : args(std::move(args_in)), polys(std::move(polys_in)), twists(std::move(twists_in)),
      tag(Tag::mixed_opaque) {
    if (args.size() != polys.size())
        fail(errc::var_arity_mismatch, "point has " + std::to_string(args.size()) +
                                           " arguments for " + std::to_string(polys.size()) +
                                           " polynomials");
    int nv = polys.empty() ? 0 : polys[0].nvars();
    for (const auto& p : polys)
        if (p.nvars() != nv)
            fail(errc::var_arity_mismatch, "point polynomials over different variable counts");
    if (static_cast<int>(twists.size()) != nv)
        fail(errc::var_arity_mismatch, "point needs one twist per variable");
    tag = classify(args, polys);
}

const char* dc_tag_name(DCPoint::Tag tag) {
    switch (tag) {
        case DCPoint::Tag::all_nonpositive: return "AllNonpositive";
        case DCPoint::Tag::nvars_zero: return "MixedReducible(NVarsZero)";
        case DCPoint::Tag::const_leading: return "MixedReducible(ConstLeading)";
        case DCPoint::Tag::monomial: return "MixedReducible(Monomial)";
        case DCPoint::Tag::mixed_opaque: return "MixedOpaque";
    }
    return "?";
}

std::string DCPoint::key() const {
    std::ostringstream out;
    out << "DC<args=[";
    for (std::size_t i = 0; i < args.size(); ++i) out << (i ? "," : "") << args[i];
    out << "]; polys=[";
    for (std::size_t i = 0; i < polys.size(); ++i) out << (i ? ", " : "") << polys[i].str();
    out << "]; twists=[";
    for (std::size_t i = 0; i < twists.size(); ++i) out << (i ? "," : "") << twists[i].str();
    out << "]>";
    return out.str();
}

namespace {

std::vector<std::string> split_list(const std::string& body, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : body) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    for (auto& s : out) {
        std::size_t b = s.find_first_not_of(' ');
        std::size_t e = s.find_last_not_of(' ');
        s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
    }
    return out;
}

std::string expect_bracketed(const std::string& text, const std::string& prefix) {
    if (text.rfind(prefix, 0) != 0 || text.back() != ']')
        fail(errc::parse_error, "expected '" + prefix + "...]' in '" + text + "'");
    return text.substr(prefix.size(), text.size() - prefix.size() - 1);
}

} // namespace

DCPoint DCPoint::parse(const std::string& text) {
    if (text.rfind("DC<", 0) != 0 || text.back() != '>')
        fail(errc::parse_error, "opaque atom must be written 'DC<...>', got '" + text + "'");
    std::string body = text.substr(3, text.size() - 4);
    std::vector<std::string> fields = split_list(body, ';');
    if (fields.size() != 3)
        fail(errc::parse_error, "opaque atom needs args/polys/twists fields");
    std::vector<long long> args;
    for (const auto& s : split_list(expect_bracketed(fields[0], "args=["), ','))
        args.push_back(std::stoll(s));
    std::vector<std::string> poly_texts = split_list(expect_bracketed(fields[1], "polys=["), ',');
    std::vector<RootOfUnity> twists;
    std::string tw = expect_bracketed(fields[2], "twists=[");
    if (!tw.empty())
        for (const auto& s : split_list(tw, ','))
            twists.push_back(RootOfUnity::parse(s));
    std::vector<MultiPoly> polys;
    for (const auto& s : poly_texts)
        polys.push_back(MultiPoly::parse(s, static_cast<int>(twists.size())));
    return DCPoint(std::move(args), std::move(polys), std::move(twists));
}

void ValueExpr::add_constant(const Cyclotomic& c) { constant_ += c; }

void ValueExpr::add_pi_power(long long even_power, const Rational& coeff) {
    if (even_power <= 0 || even_power % 2 != 0)
        fail(errc::unsupported_argument, "pi power must be a positive even integer");
    if (coeff == 0) return;
    auto it = pi_terms_.find(even_power);
    if (it == pi_terms_.end()) {
        pi_terms_[even_power] = coeff;
    } else {
        it->second += coeff;
        if (it->second == 0) pi_terms_.erase(it);
    }
}

void ValueExpr::add_lerch(LerchProduct factors, const Cyclotomic& coeff) {
    if (coeff.is_zero()) return;
    if (factors.empty()) {
        add_constant(coeff);
        return;
    }
    for (const auto& f : factors)
        if (f.arg < 1)
            fail(errc::unsupported_argument, "Lerch atoms carry arguments >= 1");
    std::sort(factors.begin(), factors.end());
    auto it = lerch_atoms_.find(factors);
    if (it == lerch_atoms_.end()) {
        lerch_atoms_.emplace(std::move(factors), coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) lerch_atoms_.erase(it);
    }
}

void ValueExpr::add_opaque(const DCPoint& point, const Cyclotomic& coeff) {
    if (coeff.is_zero()) return;
    std::string key = point.key();
    auto it = opaque_atoms_.find(key);
    if (it == opaque_atoms_.end()) {
        opaque_atoms_.emplace(std::move(key), std::make_pair(point, coeff));
    } else {
        it->second.second += coeff;
        if (it->second.second.is_zero()) opaque_atoms_.erase(it);
    }
}

ValueExpr& ValueExpr::operator+=(const ValueExpr& other) {
    add_constant(other.constant_);
    for (const auto& [p, c] : other.pi_terms_) add_pi_power(p, c);
    for (const auto& [k, c] : other.lerch_atoms_) add_lerch(k, c);
    for (const auto& [key, pc] : other.opaque_atoms_) add_opaque(pc.first, pc.second);
    return *this;
}

ValueExpr ValueExpr::scaled(const Cyclotomic& factor) const {
    ValueExpr out;
    if (factor.is_zero()) return out;
    out.add_constant(constant_ * factor);
    if (!pi_terms_.empty()) {
        if (!factor.is_rational())
            fail(errc::unsupported_argument, "pi terms only take rational coefficients");
        for (const auto& [p, c] : pi_terms_) out.add_pi_power(p, c * factor.rational_value());
    }
    for (const auto& [k, c] : lerch_atoms_) out.add_lerch(k, c * factor);
    for (const auto& [key, pc] : opaque_atoms_) out.add_opaque(pc.first, pc.second * factor);
    return out;
}

bool operator==(const ValueExpr& a, const ValueExpr& b) {
    if (!(a.constant_ == b.constant_)) return false;
    if (a.pi_terms_ != b.pi_terms_) return false;
    if (a.lerch_atoms_.size() != b.lerch_atoms_.size()) return false;
    for (auto ia = a.lerch_atoms_.begin(), ib = b.lerch_atoms_.begin(); ia != a.lerch_atoms_.end();
         ++ia, ++ib) {
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    }
    if (a.opaque_atoms_.size() != b.opaque_atoms_.size()) return false;
    for (auto ia = a.opaque_atoms_.begin(), ib = b.opaque_atoms_.begin();
         ia != a.opaque_atoms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first || !(ia->second.second == ib->second.second)) return false;
    }
    return true;
}

bool ValueExpr::is_zero() const {
    return constant_.is_zero() && pi_terms_.empty() && lerch_atoms_.empty() &&
           opaque_atoms_.empty();
}

std::complex<double> ValueExpr::numeric() const {
    if (has_opaque())
        fail(errc::unsupported_argument, "numeric render undefined with opaque atoms present");
    std::complex<double> acc = constant_.eval();
    for (const auto& [p, c] : pi_terms_)
        acc += to_double(c) * std::pow(M_PI, static_cast<double>(p));
    for (const auto& [factors, c] : lerch_atoms_) {
        std::complex<double> prod = c.eval();
        for (const auto& f : factors) prod *= lerch_numeric(f.mu, f.arg);
        acc += prod;
    }
    return acc;
}

namespace {

// One printable term: sign split off for rational coefficients so the joined
// form reads "a - b" rather than "a + -b".
struct TermText {
    bool negative = false;
    std::string body;
};

TermText coeff_with_body(const Cyclotomic& coeff, const std::string& body) {
    TermText t;
    if (coeff.is_rational()) {
        Rational r = coeff.rational_value();
        t.negative = r < 0;
        Rational mag = t.negative ? Rational(-r) : r;
        if (body.empty()) {
            t.body = to_string(mag);
        } else if (mag == 1) {
            t.body = body;
        } else {
            t.body = to_string(mag) + "*" + body;
        }
    } else {
        t.body = body.empty() ? coeff.str() : coeff.str() + "*" + body;
    }
    return t;
}

std::string join_terms(const std::vector<TermText>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        if (i == 0) {
            if (terms[i].negative) out << "-";
        } else {
            out << (terms[i].negative ? " - " : " + ");
        }
        out << terms[i].body;
    }
    return out.str();
}

std::string lerch_product_text(const LerchProduct& factors) {
    std::ostringstream out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out << "*";
        out << "zeta_{" << factors[i].mu.str() << "}(" << factors[i].arg << ")";
    }
    return out.str();
}

} // namespace

std::string ValueExpr::str() const {
    std::vector<TermText> terms;
    if (!constant_.is_zero()) terms.push_back(coeff_with_body(constant_, ""));
    for (const auto& [p, c] : pi_terms_)
        terms.push_back(coeff_with_body(Cyclotomic(c), "pi^" + std::to_string(p)));
    for (const auto& [factors, c] : lerch_atoms_)
        terms.push_back(coeff_with_body(c, lerch_product_text(factors)));
    for (const auto& [key, pc] : opaque_atoms_)
        terms.push_back(coeff_with_body(pc.second, key));
    return join_terms(terms);
}

namespace {

int bracket_delta(char c) {
    if (c == '[' || c == '<' || c == '(' || c == '{') return 1;
    if (c == ']' || c == '>' || c == ')' || c == '}') return -1;
    return 0;
}

// Split a rendered expression into signed chunks at top-level +/-.
std::vector<std::pair<int, std::string>> split_signed_terms(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    int depth = 0;
    int sign = 1;
    std::string cur;
    auto flush = [&](int next_sign) {
        std::size_t b = cur.find_first_not_of(' ');
        std::size_t e = cur.find_last_not_of(' ');
        if (b != std::string::npos) out.emplace_back(sign, cur.substr(b, e - b + 1));
        cur.clear();
        sign = next_sign;
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        depth += bracket_delta(c);
        if (depth == 0 && (c == '+' || c == '-')) {
            bool at_start = cur.find_first_not_of(' ') == std::string::npos;
            if (at_start) {
                if (c == '-') sign = -sign;
                continue;
            }
            flush(c == '-' ? -1 : 1);
            continue;
        }
        cur += c;
    }
    flush(1);
    return out;
}

std::vector<std::string> split_factors(const std::string& text) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        depth += bracket_delta(c);
        if (depth == 0 && c == '*') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

LerchFactor parse_lerch_factor(const std::string& text) {
    // zeta_{a/b}(s)
    if (text.rfind("zeta_{", 0) != 0)
        fail(errc::parse_error, "expected Lerch factor, got '" + text + "'");
    auto close = text.find('}');
    auto open_paren = text.find('(', close);
    if (close == std::string::npos || open_paren == std::string::npos || text.back() != ')')
        fail(errc::parse_error, "malformed Lerch factor '" + text + "'");
    RootOfUnity mu = RootOfUnity::parse(text.substr(6, close - 6));
    long long arg = std::stoll(text.substr(open_paren + 1, text.size() - open_paren - 2));
    return LerchFactor{mu, arg};
}

} // namespace

ValueExpr ValueExpr::parse(const std::string& text) {
    ValueExpr out;
    std::string trimmed = text;
    if (trimmed.find_first_not_of(' ') == std::string::npos)
        fail(errc::parse_error, "empty value expression");
    if (trimmed == "0") return out;
    for (auto& [sign, chunk] : split_signed_terms(trimmed)) {
        // optional coefficient factor
        Cyclotomic coeff{Rational(sign)};
        std::vector<std::string> factors = split_factors(chunk);
        std::size_t first_body = 0;
        if (!factors.empty()) {
            const std::string& f0 = factors[0];
            if (!f0.empty() && f0[0] == '[') {
                coeff = coeff * Cyclotomic::parse(f0);
                first_body = 1;
            } else if (!f0.empty() && (std::isdigit(static_cast<unsigned char>(f0[0])))) {
                coeff = coeff * Cyclotomic(parse_rational(f0));
                first_body = 1;
            }
        }
        if (first_body == factors.size()) {
            out.add_constant(coeff);
            continue;
        }
        const std::string& head = factors[first_body];
        if (head.rfind("pi^", 0) == 0) {
            if (factors.size() != first_body + 1)
                fail(errc::parse_error, "pi term with extra factors in '" + chunk + "'");
            if (!coeff.is_rational())
                fail(errc::parse_error, "pi term needs a rational coefficient in '" + chunk + "'");
            out.add_pi_power(std::stoll(head.substr(3)), coeff.rational_value());
        } else if (head.rfind("zeta_{", 0) == 0) {
            LerchProduct product;
            for (std::size_t i = first_body; i < factors.size(); ++i)
                product.push_back(parse_lerch_factor(factors[i]));
            out.add_lerch(std::move(product), coeff);
        } else if (head.rfind("DC<", 0) == 0) {
            if (factors.size() != first_body + 1)
                fail(errc::parse_error, "opaque term with extra factors in '" + chunk + "'");
            out.add_opaque(DCPoint::parse(head), coeff);
        } else {
            fail(errc::parse_error, "unrecognized term '" + chunk + "'");
        }
    }
    return out;
}

Cyclotomic dc_value_nonpos(std::span<const MultiPoly> polys, std::span<const unsigned long> k,
                           std::span<const RootOfUnity> twists, std::size_t term_cap) {
    if (polys.size() != k.size())
        fail(errc::var_arity_mismatch, "one exponent per polynomial required");
    int nvars = polys.empty() ? 0 : polys[0].nvars();
    for (const auto& p : polys) {
        if (p.nvars() != nvars)
            fail(errc::var_arity_mismatch, "polynomials over different variable counts");
        if (!check_hdf_sufficient(p))
            fail(errc::certification_failed,
                 "polynomial '" + p.str() + "' is not certified (needs nonzero, all coefficients >= 0)");
    }
    if (static_cast<int>(twists.size()) != nvars)
        fail(errc::var_arity_mismatch, "one twist per variable required");
    if (nvars == 0) {
        Rational acc(1);
        for (std::size_t i = 0; i < polys.size(); ++i)
            acc *= pow_rational(polys[i].constant_value(), static_cast<long long>(k[i]));
        return Cyclotomic(acc);
    }
    if (!check_growth_condition(polys))
        fail(errc::certification_failed,
             "product of the polynomials is not certified to grow (some variable never occurs)");

    MonomialExpansion expansion = expand_product_powers(polys, k, term_cap);
    std::map<std::pair<std::size_t, int>, Cyclotomic> lerch_cache;
    Cyclotomic acc;
    for (const auto& [alpha, coeff] : expansion.terms()) {
        Cyclotomic term{Rational(coeff)};
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            auto key = std::make_pair(j, alpha[j]);
            auto it = lerch_cache.find(key);
            if (it == lerch_cache.end())
                it = lerch_cache
                         .emplace(key, lerch_nonpos_stirling(twists[j],
                                                             static_cast<unsigned>(alpha[j])))
                         .first;
            term *= it->second;
        }
        acc += term;
    }
    return acc;
}

ValueExpr dc_value_mixed(const DCPoint& point, std::size_t term_cap) {
    switch (point.tag) {
        case DCPoint::Tag::all_nonpositive: {
            std::vector<unsigned long> k(point.args.size());
            for (std::size_t i = 0; i < point.args.size(); ++i)
                k[i] = static_cast<unsigned long>(-point.args[i]);
            return ValueExpr(dc_value_nonpos(point.polys, k, point.twists, term_cap));
        }
        case DCPoint::Tag::nvars_zero: {
            Rational acc(1);
            for (std::size_t i = 0; i < point.args.size(); ++i)
                acc *= pow_rational(point.polys[i].constant_value(), -point.args[i]);
            return ValueExpr(Cyclotomic(acc));
        }
        case DCPoint::Tag::const_leading: {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < point.args.size(); ++i)
                if (point.args[i] > 0) idx = i;
            Rational factor = pow_rational(point.polys[idx].constant_value(), -point.args[idx]);
            std::vector<unsigned long> k;
            std::vector<MultiPoly> polys;
            for (std::size_t i = 0; i < point.args.size(); ++i) {
                if (i == idx) continue;
                k.push_back(static_cast<unsigned long>(-point.args[i]));
                polys.push_back(point.polys[i]);
            }
            Cyclotomic rest = dc_value_nonpos(polys, k, point.twists, term_cap);
            return ValueExpr(Cyclotomic(factor) * rest);
        }
        case DCPoint::Tag::monomial: {
            // prod_rho (c_rho m^{e_rho})^{-s_rho} splits into the constant
            // power product and one Lerch series per variable with the
            // aggregated exponent.
            Rational const_part(1);
            int nv = point.nvars();
            std::vector<long long> aggregate(static_cast<std::size_t>(nv), 0);
            for (std::size_t i = 0; i < point.polys.size(); ++i) {
                const auto& [expo, c] = *point.polys[i].terms().begin();
                const_part *= pow_rational(c, -point.args[i]);
                for (int v = 0; v < nv; ++v)
                    aggregate[static_cast<std::size_t>(v)] +=
                        static_cast<long long>(expo[static_cast<std::size_t>(v)]) * point.args[i];
            }
            Cyclotomic coeff(const_part);
            LerchProduct product;
            for (int v = 0; v < nv; ++v) {
                long long e = aggregate[static_cast<std::size_t>(v)];
                if (e <= 0) {
                    coeff *= lerch_nonpos_stirling(point.twists[static_cast<std::size_t>(v)],
                                                   static_cast<unsigned>(-e));
                } else {
                    product.push_back(LerchFactor{point.twists[static_cast<std::size_t>(v)], e});
                }
            }
            ValueExpr out;
            out.add_lerch(std::move(product), coeff); // empty product folds into the constant
            return out;
        }
        case DCPoint::Tag::mixed_opaque: {
            ValueExpr out;
            out.add_opaque(point, Cyclotomic(Rational(1)));
            return out;
        }
    }
    fail(errc::internal_error, "unreachable point classification");
}

namespace {

using CycloPoly = std::vector<Cyclotomic>; // polynomial in r, ascending degree

CycloPoly cp_derivative(const CycloPoly& p) {
    CycloPoly out;
    for (std::size_t i = 1; i < p.size(); ++i)
        out.push_back(p[i] * Cyclotomic(Rational(static_cast<long>(i))));
    return out;
}

CycloPoly cp_mul(const CycloPoly& a, const CycloPoly& b) {
    if (a.empty() || b.empty()) return {};
    CycloPoly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

CycloPoly cp_add(CycloPoly a, const CycloPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

CycloPoly cp_shift_up(const CycloPoly& p) { // multiply by r
    CycloPoly out;
    out.reserve(p.size() + 1);
    out.push_back(Cyclotomic());
    for (const auto& c : p) out.push_back(c);
    return out;
}

Cyclotomic cp_eval_at_one(const CycloPoly& p) {
    Cyclotomic acc;
    for (const auto& c : p) acc += c;
    return acc;
}

// Numerator N_e of sum_{m>=1} (mu r)^m m^e = N_e(r) / (1 - mu r)^{e+1},
// built by e applications of r d/dr to the geometric series.
CycloPoly abel_numerator(const Cyclotomic& mu, unsigned e) {
    CycloPoly n{Cyclotomic(), mu}; // mu * r
    for (unsigned j = 1; j <= e; ++j) {
        CycloPoly one_minus_mur{Cyclotomic(Rational(1)), -mu};
        CycloPoly part = cp_mul(one_minus_mur, cp_derivative(n));
        CycloPoly scaled;
        scaled.reserve(n.size());
        Cyclotomic jmu = mu * Cyclotomic(Rational(static_cast<long>(j)));
        for (const auto& c : n) scaled.push_back(c * jmu);
        n = cp_shift_up(cp_add(std::move(part), scaled));
    }
    return n;
}

} // namespace

Cyclotomic abel_lerch_value(const RootOfUnity& mu, unsigned n) {
    Cyclotomic mu_c = Cyclotomic::root(mu);
    Cyclotomic inv = (Cyclotomic(1) - mu_c).inverse();
    return cp_eval_at_one(abel_numerator(mu_c, n)) * inv.pow(static_cast<long long>(n) + 1);
}

Cyclotomic abel_sum_oracle(std::span<const MultiPoly> polys, std::span<const unsigned long> k,
                           std::span<const RootOfUnity> twists, std::size_t term_cap) {
    if (polys.size() != k.size())
        fail(errc::var_arity_mismatch, "one exponent per polynomial required");
    int nvars = polys.empty() ? 0 : polys[0].nvars();
    if (nvars == 0)
        fail(errc::unsupported_argument, "the radial-limit oracle needs at least one variable");
    for (const auto& p : polys)
        if (!check_hdf_sufficient(p))
            fail(errc::certification_failed, "polynomial '" + p.str() + "' is not certified");
    if (!check_growth_condition(polys))
        fail(errc::certification_failed, "product of the polynomials is not certified to grow");
    if (static_cast<int>(twists.size()) != nvars)
        fail(errc::var_arity_mismatch, "one twist per variable required");

    MonomialExpansion expansion = expand_product_powers(polys, k, term_cap);
    std::map<std::pair<std::size_t, int>, Cyclotomic> cache;
    Cyclotomic acc;
    for (const auto& [alpha, coeff] : expansion.terms()) {
        Cyclotomic term{Rational(coeff)};
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            auto key = std::make_pair(j, alpha[j]);
            auto it = cache.find(key);
            if (it == cache.end())
                it = cache.emplace(key, abel_lerch_value(twists[j], static_cast<unsigned>(alpha[j])))
                         .first;
            term *= it->second;
        }
        acc += term;
    }
    return acc;
}

} // namespace mzv
