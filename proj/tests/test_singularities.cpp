#include <doctest.h>

#include <algorithm>

#include "mzv/singularities.hpp"

using namespace mzv;

namespace {

RootOfUnity minus_one() { return RootOfUnity(1, 2); }

ProblemSpec spec_with_exponents(const std::vector<int>& a) {
    // Q_j = X1 for every exponent, which passes every certificate.
    MultiPoly PT(2);
    for (int e : a) {
        MultiPoly::Exponents full{1, e};
        PT.add_term(full, Rational(1));
    }
    return ProblemSpec(2, 1, {}, PT, {minus_one()});
}

std::vector<Rational> values_of(const SingularityReport& report, SingularityTier tier) {
    std::vector<Rational> out;
    for (const auto& e : report.entries)
        if (e.tier == tier) out.push_back(e.sT);
    return out;
}

} // namespace

TEST_CASE("d = 1, exponents (0, 1): the only surviving pole is s_T = 1") {
    ProblemSpec spec = spec_with_exponents({0, 1});
    SingularityReport report = candidate_hyperplanes(spec, Rational(-3), Rational(2), 16);
    auto genuine = values_of(report, SingularityTier::genuine);
    REQUIRE(genuine.size() == 1);
    CHECK(genuine[0] == Rational(1));
    CHECK(values_of(report, SingularityTier::candidate).empty());
    // 1 - t for t >= 1 are all cancelled
    auto cancelled = values_of(report, SingularityTier::cancelled_by_gamma_zero);
    CHECK(cancelled.size() == 4); // 0, -1, -2, -3 within the window
    for (const auto& v : cancelled) CHECK(v <= 0);
}

TEST_CASE("d = 1, exponents (0, 2): half-integer ladder of candidates") {
    ProblemSpec spec = spec_with_exponents({0, 2});
    SingularityReport report = candidate_hyperplanes(spec, Rational(-3), Rational(2), 16);
    auto candidates = values_of(report, SingularityTier::candidate);
    std::vector<Rational> expected{make_rational(1, 2), make_rational(-1, 2),
                                   make_rational(-3, 2), make_rational(-5, 2)};
    CHECK(candidates == expected);
    CHECK(values_of(report, SingularityTier::genuine).empty());
}

TEST_CASE("d = 2, exponents (0, 1, 2): same ladder") {
    ProblemSpec spec = spec_with_exponents({0, 1, 2});
    SingularityReport report = candidate_hyperplanes(spec, Rational(-3), Rational(2), 16);
    auto candidates = values_of(report, SingularityTier::candidate);
    std::vector<Rational> expected{make_rational(1, 2), make_rational(-1, 2),
                                   make_rational(-3, 2), make_rational(-5, 2)};
    CHECK(candidates == expected);
    CHECK(values_of(report, SingularityTier::genuine).empty());
    for (const auto& e : report.entries) CHECK(e.source == "S2");
}

TEST_CASE("a_0 = 0 kills the S1 and S3 families") {
    for (auto a : {std::vector<int>{0, 1}, std::vector<int>{0, 2}, std::vector<int>{0, 1, 3}}) {
        ProblemSpec spec = spec_with_exponents(a);
        SingularityReport report =
            candidate_hyperplanes(spec, Rational(-10), Rational(10), 12);
        for (const auto& e : report.entries) CHECK(e.source == "S2");
    }
}

TEST_CASE("positive a_0 brings in the other two families") {
    ProblemSpec spec = spec_with_exponents({1, 2});
    SingularityReport report = candidate_hyperplanes(spec, Rational(-2), Rational(4), 8);
    bool saw_s1 = false, saw_s3 = false;
    for (const auto& e : report.entries) {
        if (e.source == "S1") saw_s1 = true;
        if (e.source == "S3") saw_s3 = true;
    }
    // S1: s_T = 1 + t; S3: s_T = 1 + k; S2: s_T = (1 - t)/2. The first
    // witness (enumeration order S1, S2, S3) labels overlapping values.
    CHECK(saw_s1);
    CHECK_FALSE(saw_s3); // every S3 value 1 + k was already found by S1
    std::vector<Rational> all;
    for (const auto& e : report.entries) all.push_back(e.sT);
    CHECK(std::find(all.begin(), all.end(), make_rational(1, 2)) != all.end());
    CHECK(std::find(all.begin(), all.end(), Rational(2)) != all.end());
}

TEST_CASE("nonpositive integers never carry the genuine tier") {
    for (auto a : {std::vector<int>{0, 1}, std::vector<int>{1, 2}, std::vector<int>{0, 1, 2},
                   std::vector<int>{0, 2, 5}}) {
        ProblemSpec spec = spec_with_exponents(a);
        SingularityReport report =
            candidate_hyperplanes(spec, Rational(-8), Rational(8), 10);
        for (const auto& e : report.entries) {
            if (e.sT.get_den() == 1 && e.sT <= 0)
                CHECK(e.tier != SingularityTier::genuine);
        }
    }
}

TEST_CASE("window and index monotonicity") {
    ProblemSpec spec = spec_with_exponents({0, 1, 3});
    SingularityReport small = candidate_hyperplanes(spec, Rational(-2), Rational(1), 4);
    SingularityReport wide = candidate_hyperplanes(spec, Rational(-4), Rational(2), 4);
    SingularityReport deep = candidate_hyperplanes(spec, Rational(-2), Rational(1), 9);
    auto contains = [](const SingularityReport& r, const Rational& v) {
        for (const auto& e : r.entries)
            if (e.sT == v) return true;
        return false;
    };
    for (const auto& e : small.entries) {
        CHECK(contains(wide, e.sT));
        CHECK(contains(deep, e.sT));
    }
}

TEST_CASE("regularity checks") {
    ProblemSpec d1 = spec_with_exponents({0, 1});
    CHECK(is_regular_point(d1, EvalPoint({0})));
    CHECK_FALSE(is_regular_point(d1, Rational(1)));
    CHECK(is_regular_point(d1, Rational(-2)));
    CHECK(is_regular_point(d1, make_rational(1, 3)));

    ProblemSpec d2 = spec_with_exponents({0, 1, 2});
    CHECK_FALSE(is_regular_point(d2, make_rational(1, 2)));
    CHECK(is_regular_point(d2, Rational(0)));
    CHECK(is_regular_point(d2, EvalPoint({3})));
}

TEST_CASE("report JSON shape") {
    ProblemSpec spec = spec_with_exponents({0, 1});
    SingularityReport report = candidate_hyperplanes(spec, Rational(0), Rational(2), 4);
    std::string json = report.json();
    CHECK(json.find("\"sT\": \"1\"") != std::string::npos);
    CHECK(json.find("\"tier\": \"GenuinePerPaper\"") != std::string::npos);
    CHECK(json.find("\"witness\"") != std::string::npos);

    SingularityReport empty = candidate_hyperplanes(spec, make_rational(31, 10),
                                                    make_rational(32, 10), 4);
    CHECK(empty.json() == "[]");
    CHECK_THROWS_AS(candidate_hyperplanes(spec, Rational(2), Rational(-2), 4), MzvError);
}
