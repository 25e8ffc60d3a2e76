#include "kfano/valuation.hpp"

#include "kfano/slab.hpp"

#include "doctest.h"

#include <array>
#include <cmath>
#include <random>
#include <vector>

using namespace kfano;

namespace {

const std::array<Rational, 3> kW301 = {Rational(3), Rational(0), Rational(1)};

LogPairY reference_pair(const Rational& c) { return LogPairY(c, parse_poly("x*y*w^2 + z^3*w")); }

Rational rational_from(std::mt19937_64& rng, long max_num, long max_den) {
    return Rational(static_cast<long long>(rng() % (max_num + 1)),
                    static_cast<long long>(1 + rng() % max_den));
}

}  // namespace

TEST_CASE("slab construction validates the scales") {
    CHECK_NOTHROW(SlabPolytope(Rational(4), Rational(2), kW301));
    CHECK_NOTHROW(SlabPolytope(Rational(1), Rational(0), kW301));
    CHECK_THROWS_AS(SlabPolytope(Rational(2), Rational(3), kW301), std::invalid_argument);
    CHECK_THROWS_AS(SlabPolytope(Rational(2), Rational(-1), kW301), std::invalid_argument);
}

TEST_CASE("vertex enumeration finds the simplex and slab corners") {
    SlabPolytope simplex(Rational(1), Rational(0), kW301);
    auto hs = slab_halfspaces(simplex, std::nullopt);
    CHECK(enumerate_vertices(hs).size() == 4);

    SlabPolytope slab(Rational(4), Rational(2), kW301);
    auto hs2 = slab_halfspaces(slab, std::nullopt);
    CHECK(enumerate_vertices(hs2).size() == 6);
}

TEST_CASE("generic body volume and linear integral: the unit cube") {
    std::vector<Halfspace> cube;
    for (int i = 0; i < 3; ++i) {
        std::array<Rational, 3> up{}, down{};
        up[i] = Rational(1);
        down[i] = Rational(-1);
        cube.push_back({up, Rational(0)});
        cube.push_back({down, Rational(-1)});
    }
    CHECK(body_volume(cube) == Rational(1));
    CHECK(body_integral_linear(cube, {Rational(1), Rational(1), Rational(1)}) == Rational(3, 2));
    CHECK(body_integral_linear(cube, {Rational(2), Rational(0), Rational(0)}) == Rational(1));
}

TEST_CASE("slice volumes of the unit slab under (3, 0, 1)") {
    SlabPolytope q(Rational(1), Rational(0), kW301);
    CHECK(slab_volume(q) == Rational(1, 6));
    CHECK(slice_volume(q, Rational(-1)) == Rational(1, 6));
    CHECK(slice_volume(q, Rational(0)) == Rational(1, 6));
    CHECK(slice_volume(q, Rational(1, 2)) == Rational(29, 216));
    CHECK(slice_volume(q, Rational(1)) == Rational(2, 27));
    CHECK(slice_volume(q, Rational(2)) == Rational(1, 108));
    CHECK(slice_volume(q, Rational(3)) == Rational(0));
    CHECK(slice_volume(q, Rational(4)) == Rational(0));
}

TEST_CASE("slab volumes follow (d^3 - m^3)/6") {
    SlabPolytope p(Rational(4), Rational(2), kW301);
    CHECK(slab_volume(p) == Rational(28, 3));
    CHECK(slice_volume(p, Rational(0)) == Rational(28, 3));
    std::mt19937_64 rng(31);
    for (int i = 0; i < 10; ++i) {
        Rational d = rational_from(rng, 6, 3) + Rational(1);
        Rational m = d * Rational(static_cast<long long>(rng() % 4), 4);
        SlabPolytope random_slab(d, m, kW301);
        CHECK(slab_volume(random_slab) == (d.pow(3) - m.pow(3)) / Rational(6));
    }
}

TEST_CASE("integral of the weight functional over the slab") {
    CHECK(integral_linear_over_slab(SlabPolytope(Rational(4), Rational(2), kW301)) ==
          Rational(40));
    CHECK(integral_linear_over_slab(SlabPolytope(
              Rational(4), Rational(2), {Rational(1), Rational(1), Rational(1)})) == Rational(30));
    CHECK(integral_linear_over_slab(SlabPolytope(Rational(1), Rational(0), kW301)) ==
          Rational(1, 6));
    CHECK(integral_linear_over_slab(SlabPolytope(
              Rational(4), Rational(2), {Rational(0), Rational(0), Rational(0)})) == Rational(0));
}

TEST_CASE("slice profile: cubic pieces, monotone decay, matching integral") {
    for (const SlabPolytope& p :
         {SlabPolytope(Rational(1), Rational(0), kW301),
          SlabPolytope(Rational(4), Rational(2), kW301),
          SlabPolytope(Rational(4), Rational(2), {Rational(1), Rational(1), Rational(1)})}) {
        PiecewisePoly profile = slice_profile(p);
        CHECK(profile.domain_lo() == Rational(0));
        CHECK(profile.eval(Rational(0)) == slab_volume(p));
        CHECK(profile.eval(profile.domain_hi()) == Rational(0));
        CHECK(profile.is_continuous());
        Rational prev = profile.eval(profile.domain_lo());
        for (const UniPoly& piece : profile.pieces())
            CHECK(piece.degree() <= 3);
        const auto& breaks = profile.breakpoints();
        for (size_t i = 1; i < breaks.size(); ++i) {
            // Sample the midpoints too: the profile never increases.
            Rational mid = (breaks[i - 1] + breaks[i]) / Rational(2);
            Rational at_mid = profile.eval(mid);
            Rational at_end = profile.eval(breaks[i]);
            CHECK(at_mid <= prev);
            CHECK(at_end <= at_mid);
            CHECK(at_mid == slice_volume(p, mid));
            prev = at_end;
        }
        CHECK(profile.integrate_all() == integral_linear_over_slab(p));
    }
}

TEST_CASE("slice profile rejects degenerate inputs") {
    CHECK_THROWS_AS(
        slice_profile(SlabPolytope(Rational(4), Rational(2),
                                   {Rational(0), Rational(0), Rational(0)})),
        std::invalid_argument);
    CHECK_THROWS_AS(slice_profile(SlabPolytope(Rational(0), Rational(0), kW301)),
                    std::domain_error);
}

TEST_CASE("scaling identity for slab slices") {
    auto at5 = scaling_check(Rational(4), Rational(2), Rational(5), kW301);
    CHECK(at5.first == at5.second);
    CHECK(at5.first == Rational(19, 6));
    auto at0 = scaling_check(Rational(4), Rational(2), Rational(0), kW301);
    CHECK(at0.first == at0.second);
    CHECK(at0.first == Rational(28, 3));
    auto at12 = scaling_check(Rational(4), Rational(2), Rational(12), kW301);
    CHECK(at12.first == at12.second);
    CHECK(at12.first == Rational(0));

    std::mt19937_64 rng(37);
    for (int i = 0; i < 20; ++i) {
        Rational d = rational_from(rng, 5, 2) + Rational(1);
        Rational m = d * Rational(static_cast<long long>(rng() % 3), 3);
        if (m.is_zero())
            m = d / Rational(7);
        std::array<Rational, 3> ell = {rational_from(rng, 4, 2), rational_from(rng, 4, 2),
                                       rational_from(rng, 4, 2)};
        if (ell[0].is_zero() && ell[1].is_zero() && ell[2].is_zero())
            ell[0] = Rational(1);
        Rational t = rational_from(rng, 8, 2);
        auto pair = scaling_check(d, m, t, ell);
        CHECK(pair.first == pair.second);
    }
}

TEST_CASE("layer-cake identity on randomized slabs") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 20; ++i) {
        Rational d = rational_from(rng, 5, 2) + Rational(1);
        Rational m = d * Rational(static_cast<long long>(rng() % 4), 5);
        std::array<Rational, 3> ell = {rational_from(rng, 3, 2), rational_from(rng, 3, 2),
                                       rational_from(rng, 3, 2)};
        if (ell[0].is_zero() && ell[1].is_zero() && ell[2].is_zero())
            ell[2] = Rational(2, 3);
        SlabPolytope p(d, m, ell);
        // integral_linear_over_slab re-derives the value through the slice
        // profile internally and throws if the two routes disagree.
        CHECK(integral_linear_over_slab(p) == slice_profile(p).integrate_all());
    }
}

TEST_CASE("weight symmetry in the first two coordinates") {
    std::mt19937_64 rng(43);
    for (int i = 0; i < 10; ++i) {
        Rational a = rational_from(rng, 4, 2);
        Rational b = rational_from(rng, 4, 2);
        Rational c = rational_from(rng, 4, 2);
        Rational t = rational_from(rng, 6, 2);
        SlabPolytope lhs(Rational(4), Rational(2), {a, b, c});
        SlabPolytope rhs(Rational(4), Rational(2), {b, a, c});
        CHECK(slice_volume(lhs, t) == slice_volume(rhs, t));
    }
}

TEST_CASE("Monte Carlo cross-check of the slab engine") {
    SlabPolytope p(Rational(4), Rational(2), kW301);
    const std::array<Rational, 3> ts = {Rational(0), Rational(5), Rational(7)};
    std::array<long, 3> hits = {0, 0, 0};
    double ell_sum = 0.0, ell_sq_sum = 0.0;
    const int n = 200000;
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> unif(0.0, 4.0);
    for (int i = 0; i < n; ++i) {
        double u0 = unif(rng), u1 = unif(rng), u2 = unif(rng);
        double weight = 0.0;
        if (double s = u0 + u1 + u2; s >= 2.0 && s <= 4.0) {
            double ell = 3.0 * u0 + u2;
            weight = ell;
            for (size_t j = 0; j < ts.size(); ++j)
                if (ell >= ts[j].to_double())
                    ++hits[j];
        }
        ell_sum += weight;
        ell_sq_sum += weight * weight;
    }
    const double box = 64.0;
    for (size_t j = 0; j < ts.size(); ++j) {
        double exact = slice_volume(p, ts[j]).to_double() / box;
        double est = static_cast<double>(hits[j]) / n;
        double sigma = std::sqrt(exact * (1.0 - exact) / n);
        CHECK(std::abs(est - exact) <= 3.0 * sigma);
    }
    double mean = ell_sum / n;
    double var = ell_sq_sum / n - mean * mean;
    double est_integral = mean * box;
    double sigma_integral = std::sqrt(var / n) * box;
    double exact_integral = integral_linear_over_slab(p).to_double();
    CHECK(std::abs(est_integral - exact_integral) <= 3.0 * sigma_integral);
}

TEST_CASE("valuation invariants at the certified coefficient") {
    LogPairY pair = reference_pair(Rational(2, 9));
    MonomialValuation v0(Rational(3), Rational(0), Rational(1));
    MonomialValuation v1(Rational(0), Rational(3), Rational(1));
    CHECK(a_invariant_valuation(pair, v0) == Rational(10, 3));
    CHECK(s_invariant_valuation(pair, v0) == Rational(10, 3));
    CHECK(beta_valuation(pair, v0) == Rational(0));
    CHECK(a_invariant_valuation(pair, v1) == Rational(10, 3));
    CHECK(s_invariant_valuation(pair, v1) == Rational(10, 3));
    CHECK(beta_valuation(pair, v1) == Rational(0));
}

TEST_CASE("valuation invariants without boundary weight") {
    LogPairY plain = reference_pair(Rational(0));
    MonomialValuation v0(Rational(3), Rational(0), Rational(1));
    CHECK(s_invariant_valuation(plain, v0) == Rational(30, 7));
    CHECK(a_invariant_valuation(plain, v0) == Rational(4));
    MonomialValuation diag(Rational(1), Rational(1), Rational(1));
    CHECK(a_invariant_valuation(plain, diag) == Rational(3));
    CHECK(beta_valuation(reference_pair(Rational(2, 9)), diag) == Rational(1, 18));
}

TEST_CASE("S is linear in 1 - c") {
    MonomialValuation v0(Rational(3), Rational(0), Rational(1));
    Rational base = s_invariant_valuation(reference_pair(Rational(0)), v0);
    for (long k : {1L, 2L, 5L, 8L}) {
        Rational c(k, 9);
        CHECK(s_invariant_valuation(reference_pair(c), v0) == (Rational(1) - c) * base);
    }
}

TEST_CASE("Futaki character vanishes exactly at c = 2/9") {
    FutakiReport good = futaki_vanishing_check(reference_pair(Rational(2, 9)));
    CHECK(good.pass);
    CHECK(good.beta_lambda0 == Rational(0));
    CHECK(good.beta_lambda1 == Rational(0));

    FutakiReport bad = futaki_vanishing_check(reference_pair(Rational(1, 2)));
    CHECK(!bad.pass);
    CHECK(bad.beta_lambda0 == Rational(5, 14));
    CHECK(bad.beta_lambda1 == Rational(5, 14));
}
