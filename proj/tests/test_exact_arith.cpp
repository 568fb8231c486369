#include <doctest.h>

#include <random>

#include "mzv/combinatorics.hpp"
#include "mzv/cyclotomic.hpp"
#include "mzv/error.hpp"

using namespace mzv;

TEST_CASE("bernoulli numbers in the B_1 = -1/2 convention") {
    CHECK(bernoulli(0) == Rational(1));
    CHECK(bernoulli(1) == make_rational(-1, 2));
    CHECK(bernoulli(2) == make_rational(1, 6));
    CHECK(bernoulli(4) == make_rational(-1, 30));
    CHECK(bernoulli(12) == make_rational(-691, 2730));
    for (unsigned m = 3; m <= 31; m += 2) CHECK(bernoulli(m) == 0);
}

TEST_CASE("twisted bernoulli numbers") {
    CHECK(bernoulli_twisted(1) == make_rational(1, 2));
    CHECK(bernoulli_twisted(2) == make_rational(1, 6));
    CHECK(bernoulli_twisted(3) == Rational(0));
}

TEST_CASE("zeta at nonpositive integers vanishes exactly at even m >= 2") {
    for (unsigned m = 0; m <= 20; ++m) {
        Rational z = -bernoulli_twisted(m + 1) / Rational(static_cast<long>(m + 1));
        if (m >= 2 && m % 2 == 0) {
            CHECK(z == 0);
        } else {
            CHECK(z != 0);
        }
    }
}

TEST_CASE("stirling2 values and recurrence") {
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(5, 7) == 0);
    for (unsigned n = 1; n <= 30; ++n)
        for (unsigned k = 1; k <= n; ++k)
            CHECK(stirling2(n, k) ==
                  Int(k) * stirling2(n - 1, k) + stirling2(n - 1, k - 1));
}

TEST_CASE("eulerian polynomials") {
    CHECK(eulerian_poly(0) == std::vector<Int>{Int(1)});
    CHECK(eulerian_poly(1) == std::vector<Int>{Int(0), Int(1)});
    CHECK(eulerian_poly(2) == std::vector<Int>{Int(0), Int(1), Int(1)});
    for (unsigned n = 0; n <= 15; ++n) {
        Int sum(0);
        for (const Int& c : eulerian_poly(n)) sum += c;
        CHECK(sum == factorial(n));
    }
}

TEST_CASE("multinomial coefficients") {
    std::vector<unsigned long> p1{1, 1, 1};
    CHECK(multinomial(3, p1) == 6);
    std::vector<unsigned long> p2{2, 0, 2};
    CHECK(multinomial(4, p2) == 6);
    std::vector<unsigned long> p3{0, 0};
    CHECK(multinomial(0, p3) == 1);
    std::vector<unsigned long> bad{1, 1};
    CHECK_THROWS_AS(multinomial(3, bad), MzvError);
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer(Rational(-3), 2) == Rational(6));
    CHECK(pochhammer(make_rational(7, 2), 0) == Rational(1));
    CHECK(pochhammer(Rational(-2), 3) == Rational(0));
    // (-N)_n vanishes exactly when 0 <= N <= n-1
    for (long N = 0; N <= 12; ++N)
        for (unsigned n = 0; n <= 12; ++n) {
            bool zero = pochhammer(Rational(-N), n) == 0;
            CHECK(zero == (N <= static_cast<long>(n) - 1));
        }
}

TEST_CASE("rational canonical text") {
    CHECK(to_string(make_rational(2, 4)) == "1/2");
    CHECK(to_string(make_rational(-6, 3)) == "-2");
    CHECK(to_string(parse_rational("10/15")) == "2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), MzvError);
    CHECK_THROWS_AS(parse_rational("zebra"), MzvError);
}

TEST_CASE("root of unity normalization") {
    RootOfUnity half(1, 2);
    CHECK(half.str() == "1/2");
    CHECK(RootOfUnity(3, 6) == half);   // reduces
    CHECK(RootOfUnity(-1, 4).str() == "3/4");
    CHECK_THROWS_AS(RootOfUnity(0, 3), MzvError);
    CHECK_THROWS_AS(RootOfUnity(4, 4), MzvError);
    CHECK_THROWS_AS(RootOfUnity(2, 2), MzvError); // mu = 1 after reduction
}

TEST_CASE("cyclotomic basics") {
    RootOfUnity i4(1, 4);
    Cyclotomic i = Cyclotomic::root(i4);
    CHECK(i * i == Cyclotomic(Rational(-1)));

    RootOfUnity w3(1, 3);
    Cyclotomic w = Cyclotomic::root(w3);
    Cyclotomic w2 = Cyclotomic::root_power(w3, 2);
    CHECK((Cyclotomic(1) - w) * (Cyclotomic(1) - w2) == Cyclotomic(Rational(3)));

    Cyclotomic inv = (Cyclotomic(1) - i).inverse();
    CHECK(inv == (Cyclotomic(1) + i) * Cyclotomic(make_rational(1, 2)));
    CHECK_THROWS_AS(Cyclotomic().inverse(), MzvError);
}

TEST_CASE("cyclotomic rational collapse and text") {
    RootOfUnity half(1, 2);
    Cyclotomic minus_one = Cyclotomic::root(half);
    CHECK(minus_one.is_rational());
    CHECK(minus_one.rational_value() == -1);

    RootOfUnity w3(1, 3);
    Cyclotomic sum = Cyclotomic::root(w3) + Cyclotomic::root_power(w3, 2);
    CHECK(sum.is_rational());
    CHECK(sum.rational_value() == -1);

    Cyclotomic z = Cyclotomic::root(RootOfUnity(1, 4));
    CHECK(z.str() == "[4; 0, 1]");
    CHECK(Cyclotomic::parse(z.str()) == z);
    CHECK(Cyclotomic::parse("[1; 5/3]") == Cyclotomic(make_rational(5, 3)));
}

namespace {

Cyclotomic random_element(std::mt19937& rng, long order) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<long> pw(0, order - 1);
    Cyclotomic acc;
    for (int t = 0; t < 3; ++t) {
        Cyclotomic mono(make_rational(num(rng), den(rng)));
        long p = pw(rng);
        if (p > 0 && order > 1) {
            RootOfUnity root(1, order);
            mono *= Cyclotomic::root_power(root, p);
        }
        acc += mono;
    }
    return acc;
}

} // namespace

TEST_CASE("cyclotomic field axioms and numeric consistency") {
    std::mt19937 rng(20240811);
    for (long order : {2L, 3L, 4L, 5L, 7L, 8L, 9L, 12L}) {
        for (int rep = 0; rep < 8; ++rep) {
            Cyclotomic a = random_element(rng, order);
            Cyclotomic b = random_element(rng, order);
            Cyclotomic c = random_element(rng, order);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a + (-a) == Cyclotomic());
            if (!a.is_zero()) CHECK(a * a.inverse() == Cyclotomic(Rational(1)));
            CHECK(std::abs((a * b).eval() - a.eval() * b.eval()) < 1e-12);
        }
    }
}

TEST_CASE("cyclotomic mixed-order arithmetic lands in the composite field") {
    Cyclotomic i = Cyclotomic::root(RootOfUnity(1, 4));
    Cyclotomic w = Cyclotomic::root(RootOfUnity(1, 3));
    Cyclotomic prod = i * w; // zeta_12^7
    CHECK(prod.order() == 12);
    CHECK(prod == Cyclotomic::root_power(RootOfUnity(1, 12), 7));
    CHECK(std::abs(prod.eval() - i.eval() * w.eval()) < 1e-12);
}
