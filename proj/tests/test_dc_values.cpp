#include <doctest.h>

#include <random>

#include "mzv/dc_values.hpp"
#include "mzv/error.hpp"

using namespace mzv;

namespace {

RootOfUnity minus_one() { return RootOfUnity(1, 2); }

std::vector<RootOfUnity> random_twists(std::mt19937& rng, int count, long max_den) {
    std::vector<RootOfUnity> out;
    std::uniform_int_distribution<long> den(2, max_den);
    while (static_cast<int>(out.size()) < count) {
        long b = den(rng);
        std::uniform_int_distribution<long> num(1, b - 1);
        long a = num(rng);
        if (std::gcd(a, b) != 1) continue;
        out.emplace_back(a, b);
    }
    return out;
}

MultiPoly random_certified_poly(std::mt19937& rng, int nvars, int max_deg, int terms) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<long> coeff(1, 3);
    MultiPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        MultiPoly::Exponents e(static_cast<std::size_t>(nvars));
        for (auto& x : e) x = deg(rng);
        p.add_term(e, Rational(coeff(rng)));
    }
    if (p.is_zero())
        p.add_term(MultiPoly::Exponents(static_cast<std::size_t>(nvars), 0), Rational(1));
    return p;
}

} // namespace

TEST_CASE("fully twisted values at nonpositive points") {
    MultiPoly x = MultiPoly::variable(1, 0);
    std::vector<MultiPoly> polys{x};
    std::vector<unsigned long> k{1};
    std::vector<RootOfUnity> tw{minus_one()};
    CHECK(dc_value_nonpos(polys, k, tw) == Cyclotomic(make_rational(-1, 4)));

    MultiPoly x1 = MultiPoly::variable(2, 0);
    MultiPoly x2 = MultiPoly::variable(2, 1);
    std::vector<MultiPoly> sum{x1 + x2};
    std::vector<RootOfUnity> tw2{minus_one(), minus_one()};
    CHECK(dc_value_nonpos(sum, k, tw2) == Cyclotomic(make_rational(1, 4)));

    // zero variables: the power product of the constants
    std::vector<MultiPoly> consts{MultiPoly::constant(0, Rational(3)),
                                  MultiPoly::constant(0, Rational(2))};
    std::vector<unsigned long> k2{1, 2};
    CHECK(dc_value_nonpos(consts, k2, {}) == Cyclotomic(Rational(12)));

    // all exponents zero: product of zeta_mu(0)
    std::vector<unsigned long> zero{1 * 0};
    std::vector<MultiPoly> one_poly{x};
    CHECK(dc_value_nonpos(one_poly, zero, tw) == Cyclotomic(make_rational(-1, 2)));
}

TEST_CASE("certification failures") {
    MultiPoly bad = MultiPoly::parse("X1-X2", 2);
    std::vector<MultiPoly> polys{bad};
    std::vector<unsigned long> k{1};
    std::vector<RootOfUnity> tw{minus_one(), minus_one()};
    CHECK_THROWS_AS(dc_value_nonpos(polys, k, tw), MzvError);

    // growth failure: X2 never occurs
    std::vector<MultiPoly> partial{MultiPoly::parse("X1", 2)};
    CHECK_THROWS_AS(dc_value_nonpos(partial, k, tw), MzvError);
}

TEST_CASE("point classification") {
    MultiPoly x = MultiPoly::variable(1, 0);
    std::vector<RootOfUnity> tw{minus_one()};

    DCPoint p1({0, -2}, {x, x}, tw);
    CHECK(p1.tag == DCPoint::Tag::all_nonpositive);

    DCPoint p2({0, -1, 1}, {x, x, x}, tw);
    CHECK(p2.tag == DCPoint::Tag::monomial);

    MultiPoly x1 = MultiPoly::variable(2, 0);
    MultiPoly x2 = MultiPoly::variable(2, 1);
    std::vector<RootOfUnity> tw2{minus_one(), minus_one()};
    DCPoint p3({-1, 2}, {x1 + x2, x1 * x2}, tw2);
    CHECK(p3.tag == DCPoint::Tag::mixed_opaque);

    DCPoint p4({-1, 3}, {x1 + x2, MultiPoly::constant(2, Rational(2))}, tw2);
    CHECK(p4.tag == DCPoint::Tag::const_leading);

    DCPoint p5({-1, 3}, {MultiPoly::constant(0, Rational(3)), MultiPoly::constant(0, Rational(2))},
               {});
    CHECK(p5.tag == DCPoint::Tag::nvars_zero);
}

TEST_CASE("mixed-point reductions") {
    MultiPoly x = MultiPoly::variable(1, 0);
    std::vector<RootOfUnity> tw{minus_one()};

    // aggregate exponent 0 + (-1) + 1 = 0 gives zeta_{-1}(0) = -1/2
    ValueExpr v1 = dc_value_mixed(DCPoint({0, -1, 1}, {x, x, x}, tw));
    CHECK(v1 == ValueExpr(Cyclotomic(make_rational(-1, 2))));

    // constant carrying the positive argument factors out as 2^{-3}
    MultiPoly x1 = MultiPoly::variable(2, 0);
    MultiPoly x2 = MultiPoly::variable(2, 1);
    std::vector<RootOfUnity> tw2{minus_one(), minus_one()};
    ValueExpr v2 =
        dc_value_mixed(DCPoint({-1, 3}, {x1 + x2, MultiPoly::constant(2, Rational(2))}, tw2));
    CHECK(v2 == ValueExpr(Cyclotomic(make_rational(1, 32))));

    // an opaque point embeds as a single atom with coefficient 1
    DCPoint opaque({-1, 2}, {x1 + x2, x1 * x2}, tw2);
    ValueExpr v3 = dc_value_mixed(opaque);
    CHECK(v3.has_opaque());
    CHECK(v3.opaque_atoms().size() == 1);
    CHECK(v3.opaque_atoms().begin()->first == opaque.key());

    // a positive aggregate exponent yields a transcendental atom
    ValueExpr v4 = dc_value_mixed(DCPoint({0, -1, 2}, {x, x, x}, tw));
    REQUIRE(v4.lerch_atoms().size() == 1);
    const auto& [factors, coeff] = *v4.lerch_atoms().begin();
    CHECK(factors.size() == 1);
    CHECK(factors[0].arg == 1);
    CHECK(coeff == Cyclotomic(Rational(1)));

    // nonpositive points agree with the direct evaluation
    std::vector<unsigned long> k{2, 1};
    std::vector<MultiPoly> polys{x1 + x2, x1};
    DCPoint nonpos({-2, -1}, polys, tw2);
    CHECK(dc_value_mixed(nonpos) == ValueExpr(dc_value_nonpos(polys, k, tw2)));
}

TEST_CASE("radial-limit oracle examples") {
    MultiPoly x = MultiPoly::variable(1, 0);
    std::vector<RootOfUnity> tw{minus_one()};
    std::vector<MultiPoly> polys{x};
    std::vector<unsigned long> k{1};
    CHECK(abel_sum_oracle(polys, k, tw) == Cyclotomic(make_rational(-1, 4)));

    std::vector<MultiPoly> sq{x * x};
    CHECK(abel_sum_oracle(sq, k, tw) == Cyclotomic());

    std::vector<unsigned long> zero{0};
    CHECK(abel_sum_oracle(polys, zero, tw) == Cyclotomic(make_rational(-1, 2)));

    CHECK_THROWS_AS(abel_sum_oracle({}, {}, {}), MzvError);
}

TEST_CASE("oracle equals the closed-form evaluation on random instances") {
    std::mt19937 rng(20250809);
    std::uniform_int_distribution<int> nv(1, 3);
    std::uniform_int_distribution<int> np(1, 3);
    std::uniform_int_distribution<unsigned long> kv(0, 2);
    int done = 0;
    while (done < 40) {
        int nvars = nv(rng);
        int npolys = np(rng);
        std::vector<MultiPoly> polys;
        for (int i = 0; i < npolys; ++i) polys.push_back(random_certified_poly(rng, nvars, 3, 3));
        if (!check_growth_condition(polys)) continue;
        std::vector<unsigned long> k;
        for (int i = 0; i < npolys; ++i) k.push_back(kv(rng));
        std::vector<RootOfUnity> tw = random_twists(rng, nvars, 6);
        CHECK(dc_value_nonpos(polys, k, tw) == abel_sum_oracle(polys, k, tw));
        ++done;
    }
}

TEST_CASE("variable-separated products factor into Lerch values") {
    std::mt19937 rng(99);
    std::vector<RootOfUnity> tw = random_twists(rng, 3, 8);
    MultiPoly u1 = MultiPoly::parse("X1+2*X1^3", 3);
    MultiPoly u2 = MultiPoly::parse("X2^2", 3);
    MultiPoly u3 = MultiPoly::parse("3*X3", 3);
    std::vector<MultiPoly> polys{u1, u2, u3};
    std::vector<unsigned long> k{1, 2, 1};
    Cyclotomic joint = dc_value_nonpos(polys, k, tw);

    // per-variable: expansion of each factor against its own twist
    auto single = [&](const MultiPoly& p, unsigned long e, int var) {
        MultiPoly uni(1);
        for (const auto& [ex, c] : p.terms())
            uni.add_term({ex[static_cast<std::size_t>(var)]}, c);
        std::vector<MultiPoly> ps{uni};
        std::vector<unsigned long> ks{e};
        std::vector<RootOfUnity> ts{tw[static_cast<std::size_t>(var)]};
        return dc_value_nonpos(ps, ks, ts);
    };
    Cyclotomic product = single(u1, 1, 0) * single(u2, 2, 1) * single(u3, 1, 2);
    CHECK(joint == product);
}

TEST_CASE("value expression algebra and rendering") {
    ValueExpr e1(Cyclotomic(make_rational(1, 4)));
    e1.add_pi_power(2, make_rational(1, 24));
    CHECK(e1.str() == "1/4 + 1/24*pi^2");

    ValueExpr e2;
    e2.add_pi_power(2, make_rational(-1, 24));
    ValueExpr sum = e1 + e2;
    CHECK(sum == ValueExpr(Cyclotomic(make_rational(1, 4))));
    CHECK(sum.str() == "1/4");

    ValueExpr scaled = e1.scaled(Cyclotomic(Rational(-2)));
    CHECK(scaled.str() == "-1/2 - 1/12*pi^2");

    CHECK(ValueExpr().str() == "0");

    // additivity of the numeric render
    ValueExpr a(Cyclotomic(make_rational(2, 3)));
    a.add_lerch({LerchFactor{minus_one(), 2}}, Cyclotomic(Rational(3)));
    ValueExpr b;
    b.add_pi_power(4, make_rational(-1, 7));
    b.add_lerch({LerchFactor{RootOfUnity(1, 3), 1}}, Cyclotomic(make_rational(1, 2)));
    std::complex<double> lhs = (a + b).numeric();
    std::complex<double> rhs = a.numeric() + b.numeric();
    CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("value expression text round trips") {
    MultiPoly x1 = MultiPoly::variable(2, 0);
    MultiPoly x2 = MultiPoly::variable(2, 1);
    std::vector<RootOfUnity> tw2{minus_one(), RootOfUnity(1, 3)};

    ValueExpr e(Cyclotomic(make_rational(-3, 5)));
    e.add_pi_power(2, make_rational(1, 24));
    e.add_pi_power(6, Rational(-2));
    e.add_lerch({LerchFactor{minus_one(), 2}}, Cyclotomic(make_rational(-1, 2)));
    e.add_lerch({LerchFactor{RootOfUnity(1, 3), 1}, LerchFactor{minus_one(), 4}},
                Cyclotomic::root(RootOfUnity(1, 3)) * Cyclotomic(make_rational(2, 7)));
    e.add_opaque(DCPoint({-1, 2}, {x1 + x2, x1 * x2}, tw2), Cyclotomic(make_rational(5, 3)));

    ValueExpr back = ValueExpr::parse(e.str());
    CHECK(back == e);
    CHECK(back.str() == e.str());

    // the atom coefficient 1 round-trips without an explicit factor
    ValueExpr unit;
    unit.add_lerch({LerchFactor{minus_one(), 2}}, Cyclotomic(Rational(1)));
    CHECK(ValueExpr::parse(unit.str()) == unit);
    CHECK(ValueExpr::parse("0") == ValueExpr());
    CHECK_THROWS_AS(ValueExpr::parse("1/4 + frog"), MzvError);
}

TEST_CASE("expansion cap propagates as a resource error") {
    MultiPoly x1 = MultiPoly::variable(2, 0);
    MultiPoly x2 = MultiPoly::variable(2, 1);
    std::vector<MultiPoly> polys{x1 + x2};
    std::vector<unsigned long> k{64};
    std::vector<RootOfUnity> tw2{minus_one(), minus_one()};
    try {
        dc_value_nonpos(polys, k, tw2, 16);
        FAIL("expected a resource error");
    } catch (const MzvError& e) {
        CHECK(e.code() == errc::resource_limit);
    }
}
