#include "kfano/bundle_delta.hpp"

#include "doctest.h"

#include <random>

using namespace kfano;

TEST_CASE("input validation names the violated inequality") {
    CHECK_THROWS_WITH_AS(BundleDeltaInput(1, Rational(0), Rational(0), Rational(0), Rational(1)),
                         doctest::Contains("r > 0"), std::domain_error);
    CHECK_THROWS_WITH_AS(BundleDeltaInput(1, Rational(1), Rational(-1, 2), Rational(0),
                                          Rational(1)),
                         doctest::Contains("a >= 0"), std::domain_error);
    CHECK_THROWS_WITH_AS(BundleDeltaInput(1, Rational(1), Rational(1), Rational(0), Rational(1)),
                         doctest::Contains("a < 1"), std::domain_error);
    CHECK_THROWS_WITH_AS(BundleDeltaInput(1, Rational(1), Rational(0), Rational(3, 2),
                                          Rational(1)),
                         doctest::Contains("b < 1"), std::domain_error);
    CHECK_THROWS_WITH_AS(BundleDeltaInput(1, Rational(1, 2), Rational(0), Rational(0),
                                          Rational(1)),
                         doctest::Contains("r - (1 - a) >= 0"), std::domain_error);
    CHECK_THROWS_WITH_AS(BundleDeltaInput(1, Rational(1), Rational(0), Rational(0), Rational(0)),
                         doctest::Contains("delta_base > 0"), std::domain_error);
    CHECK_THROWS_AS(BundleDeltaInput(0, Rational(1), Rational(0), Rational(0), Rational(1)),
                    std::domain_error);
}

TEST_CASE("anticanonical cone over P^1 with no boundary") {
    DeltaBreakdown d = delta_bundle(BundleDeltaInput(1, Rational(1), Rational(0), Rational(0),
                                                     Rational(1)));
    CHECK(d.mean_m == Rational(4, 3));
    CHECK(d.term_base == Rational(3, 4));
    CHECK(d.term_zero == Rational(3, 4));
    CHECK(d.term_infty == Rational(3, 2));
    CHECK(d.delta == Rational(3, 4));
}

TEST_CASE("mean radius stays strictly between the radii") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 40; ++i) {
        int n = 1 + static_cast<int>(rng() % 4);
        Rational a(static_cast<long long>(rng() % 4), 5);
        Rational b(static_cast<long long>(rng() % 4), 5);
        Rational r = (Rational(1) - a) + Rational(static_cast<long long>(rng() % 6), 3);
        if (r.is_zero())
            continue;
        DeltaBreakdown d = delta_bundle(BundleDeltaInput(n, r, a, b, Rational(1)));
        Rational inner = r - (Rational(1) - a);
        Rational outer = r + (Rational(1) - b);
        CHECK(inner < d.mean_m);
        CHECK(d.mean_m < outer);
    }
}

TEST_CASE("base pair threshold as recorded data") {
    CHECK(delta_conic_pair(Rational(3, 17)) == Rational(1));
    CHECK(delta_conic_pair(Rational(7, 10)) == Rational(1));
    CHECK(!delta_conic_pair(Rational(4, 5)).has_value());
    CHECK(!delta_conic_pair(Rational(3, 4)).has_value());
    CHECK_THROWS_AS(delta_conic_pair(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(delta_conic_pair(Rational(1)), std::domain_error);
}

TEST_CASE("family terms at reference coefficients") {
    DeltaBreakdown balanced = family_a_terms(Rational(3, 17));
    CHECK(balanced.term_base == Rational(1));
    CHECK(balanced.term_zero == Rational(1));
    CHECK(balanced.term_infty == Rational(1));
    CHECK(balanced.delta == Rational(1));

    DeltaBreakdown quarter = family_a_terms(Rational(1, 4));
    CHECK(quarter.term_base == Rational(28, 27));
    CHECK(quarter.term_zero == Rational(56, 51));
    CHECK(quarter.term_infty == Rational(28, 33));
    CHECK(quarter.delta == Rational(28, 33));

    DeltaBreakdown tiny = family_a_terms(Rational(1, 100));
    CHECK(tiny.term_base == Rational(4172, 4455));
    CHECK(tiny.term_zero == Rational(1400, 1683));
    CHECK(tiny.term_infty == Rational(1372, 1089));
    CHECK(tiny.delta == Rational(1400, 1683));
}

TEST_CASE("family shape identities at random coefficients") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 50; ++i) {
        Rational c(static_cast<long long>(1 + rng() % 97), 200);  // c in (0, 1/2)
        DeltaBreakdown d = family_a_terms(c);
        Rational a_cap = Rational(2) - Rational(2) * c;
        CHECK(d.mean_m == Rational(45, 28) * a_cap);
        CHECK(d.term_base == Rational(28) * (Rational(3) - Rational(2) * c) /
                                 (Rational(45) * a_cap));
        CHECK(d.term_zero == Rational(28) / (Rational(17) * a_cap));
        CHECK(d.term_infty == Rational(28) * (Rational(1) - Rational(2) * c) /
                                  (Rational(11) * a_cap));
        CHECK(d.delta <= Rational(1));
        CHECK((d.delta == Rational(1)) == (c == Rational(3, 17)));
    }
}

TEST_CASE("family hypotheses collapse at c >= 1/2") {
    CHECK_THROWS_WITH_AS(family_a_terms(Rational(1, 2)), doctest::Contains("b < 1"),
                         std::domain_error);
    CHECK_THROWS_WITH_AS(family_a_terms(Rational(3, 5)), doctest::Contains("b < 1"),
                         std::domain_error);
    CHECK_THROWS_WITH_AS(family_a_terms(Rational(4, 5)),
                         doctest::Contains("base threshold unknown"), std::domain_error);
}

TEST_CASE("balance point of the three terms") {
    CHECK(find_balanced_c() == Rational(3, 17));
}

TEST_CASE("mean ratio check records the discrepancy") {
    MeanRatioCheck chk = mean_ratio_check();
    CHECK(chk.computed == Rational(45, 28));
    CHECK(chk.published == Rational(15, 7));
    CHECK(!chk.consistent);
}
