#include "mzv/multipoly.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "mzv/error.hpp"

namespace mzv {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_[Exponents(static_cast<std::size_t>(nvars), 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars)
        fail(errc::var_arity_mismatch, "variable index out of range");
    MultiPoly p(nvars);
    Exponents e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_[e] = Rational(1);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    for (int e : terms_.begin()->first)
        if (e != 0) return false;
    return true;
}

Rational MultiPoly::constant_value() const {
    if (!is_constant()) fail(errc::internal_error, "polynomial is not constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int MultiPoly::degree_in(int var) const {
    int deg = 0;
    for (const auto& [e, c] : terms_)
        if (e[static_cast<std::size_t>(var)] > deg) deg = e[static_cast<std::size_t>(var)];
    return deg;
}

void MultiPoly::add_term(const Exponents& expo, const Rational& c) {
    if (static_cast<int>(expo.size()) != nvars_)
        fail(errc::var_arity_mismatch, "exponent vector length mismatch");
    if (c == 0) return;
    auto it = terms_.find(expo);
    if (it == terms_.end()) {
        terms_[expo] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_)
        fail(errc::var_arity_mismatch, "adding polynomials over different variable counts");
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_)
        fail(errc::var_arity_mismatch, "subtracting polynomials over different variable counts");
    MultiPoly out = a;
    for (const auto& [e, c] : b.terms_) out.add_term(e, Rational(-c));
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.nvars_ != b.nvars_)
        fail(errc::var_arity_mismatch, "multiplying polynomials over different variable counts");
    MultiPoly out(a.nvars_);
    MultiPoly::Exponents e(static_cast<std::size_t>(a.nvars_), 0);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(unsigned long e, std::size_t term_cap) const {
    std::size_t cap = term_cap ? term_cap : default_term_cap();
    MultiPoly acc = MultiPoly::constant(nvars_, Rational(1));
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1UL) {
            acc = acc * base;
            if (acc.term_count() > cap)
                fail(errc::resource_limit, "polynomial expansion exceeds term cap");
        }
        e >>= 1UL;
        if (e > 0) {
            base = base * base;
            if (base.term_count() > cap)
                fail(errc::resource_limit, "polynomial expansion exceeds term cap");
        }
    }
    return acc;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != nvars_)
        fail(errc::var_arity_mismatch, "evaluation point has wrong arity");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) term *= pow_rational(point[i], e[i]);
        acc += term;
    }
    return acc;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational mag = c;
        if (first) {
            if (c < 0) { out << "-"; mag = -mag; }
        } else {
            out << (c < 0 ? "-" : "+");
            if (c < 0) mag = -mag;
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) vars << "*";
            vars << "X" << (i + 1);
            if (e[i] != 1) vars << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            out << to_string(mag);
        } else if (mag == 1) {
            out << vars.str();
        } else {
            out << to_string(mag) << "*" << vars.str();
        }
    }
    return out.str();
}

namespace {

struct PolyLexer {
    const std::string& text;
    std::size_t pos = 0;

    explicit PolyLexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) { ++pos; return true; }
        return false;
    }
    std::string digits() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail(errc::parse_error, "expected digits at position " + std::to_string(start) +
                                                      " in polynomial '" + text + "'");
        return text.substr(start, pos - start);
    }
};

} // namespace

MultiPoly MultiPoly::parse(const std::string& text, int nvars) {
    PolyLexer lex(text);
    MultiPoly result(nvars);
    if (lex.eof()) fail(errc::parse_error, "empty polynomial");

    bool expect_term = true;
    int sign = 1;
    while (!lex.eof()) {
        if (expect_term) {
            // optional leading sign(s) of a term
            while (true) {
                if (lex.accept('+')) continue;
                if (lex.accept('-')) { sign = -sign; continue; }
                break;
            }
            // one term: factors joined by '*'
            Rational coeff(sign);
            Exponents expo(static_cast<std::size_t>(nvars), 0);
            bool more = true;
            bool saw_factor = false;
            while (more) {
                char c = lex.peek();
                if (c == 'X' || c == 'x') {
                    ++lex.pos;
                    long index = 1;
                    if (std::isdigit(static_cast<unsigned char>(lex.peek())))
                        index = std::stol(lex.digits());
                    if (index < 1 || index > nvars)
                        fail(errc::var_arity_mismatch,
                             "variable X" + std::to_string(index) + " out of range for " +
                                 std::to_string(nvars) + " variable(s)");
                    long e = 1;
                    if (lex.accept('^')) e = std::stol(lex.digits());
                    expo[static_cast<std::size_t>(index - 1)] += static_cast<int>(e);
                } else if (std::isdigit(static_cast<unsigned char>(c))) {
                    std::string num = lex.digits();
                    if (lex.accept('/')) num += "/" + lex.digits();
                    coeff *= parse_rational(num);
                } else {
                    fail(errc::parse_error, "unexpected character '" + std::string(1, c) +
                                                "' in polynomial '" + text + "'");
                }
                saw_factor = true;
                more = lex.accept('*');
                if (!more) {
                    char next = lex.peek();
                    more = (next == 'X' || next == 'x'); // juxtaposition, e.g. "2X1" or "X1^2X2"
                }
            }
            if (!saw_factor) fail(errc::parse_error, "empty term in polynomial '" + text + "'");
            result.add_term(expo, coeff);
            expect_term = false;
            sign = 1;
        } else {
            if (lex.accept('+')) {
                expect_term = true;
            } else if (lex.accept('-')) {
                expect_term = true;
                sign = -1;
            } else {
                fail(errc::parse_error, "expected '+' or '-' at position " + std::to_string(lex.pos) +
                                            " in polynomial '" + text + "'");
            }
        }
    }
    if (expect_term) fail(errc::parse_error, "trailing operator in polynomial '" + text + "'");
    return result;
}

std::size_t default_term_cap() {
    if (const char* env = std::getenv("MZV_MAX_MONOMIALS")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 1000000;
}

MonomialExpansion expand_product_powers(std::span<const MultiPoly> factors,
                                        std::span<const unsigned long> powers,
                                        std::size_t term_cap) {
    if (factors.size() != powers.size())
        fail(errc::var_arity_mismatch, "factor and power lists differ in length");
    std::size_t cap = term_cap ? term_cap : default_term_cap();
    int nvars = factors.empty() ? 0 : factors[0].nvars();
    for (const auto& f : factors)
        if (f.nvars() != nvars)
            fail(errc::var_arity_mismatch, "expansion factors over different variable counts");
    MultiPoly acc = MultiPoly::constant(nvars, Rational(1));
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (powers[i] == 0) continue;
        acc = acc * factors[i].pow(powers[i], cap);
        if (acc.term_count() > cap)
            fail(errc::resource_limit, "monomial expansion exceeds term cap");
    }
    return acc;
}

std::vector<std::pair<MultiPoly, int>> decompose_xn(const MultiPoly& p) {
    if (p.nvars() < 1)
        fail(errc::var_arity_mismatch, "decomposition needs at least one variable");
    if (p.is_zero()) fail(errc::zero_polynomial, "cannot decompose the zero polynomial");
    int n = p.nvars();
    std::map<int, MultiPoly> groups;
    for (const auto& [e, c] : p.terms()) {
        int a = e[static_cast<std::size_t>(n - 1)];
        auto it = groups.find(a);
        if (it == groups.end()) it = groups.emplace(a, MultiPoly(n - 1)).first;
        MultiPoly::Exponents rest(e.begin(), e.end() - 1);
        it->second.add_term(rest, c);
    }
    std::vector<std::pair<MultiPoly, int>> out;
    out.reserve(groups.size());
    for (auto& [a, q] : groups) out.emplace_back(std::move(q), a);
    return out;
}

bool check_hdf_sufficient(const MultiPoly& p) {
    if (p.is_zero()) return false;
    for (const auto& [e, c] : p.terms())
        if (c < 0) return false;
    return true;
}

bool check_growth_condition(std::span<const MultiPoly> factors) {
    int nvars = 0;
    for (const auto& f : factors) {
        if (!check_hdf_sufficient(f))
            fail(errc::not_certified_positive,
                 "growth check requires factors certified nonnegative");
        if (f.nvars() > nvars) nvars = f.nvars();
    }
    for (const auto& f : factors)
        if (f.nvars() != nvars && !f.is_constant())
            fail(errc::var_arity_mismatch, "growth factors over different variable counts");
    if (nvars == 0) return true;
    std::vector<bool> covered(static_cast<std::size_t>(nvars), false);
    for (const auto& f : factors)
        for (const auto& [e, c] : f.terms())
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0) covered[i] = true;
    for (bool b : covered)
        if (!b) return false;
    return true;
}

} // namespace mzv
