#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "recur/lyapunov.hpp"
#include "recur/mapspec.hpp"
#include "recur/rng.hpp"

using namespace recur;

namespace {
const double kCatLam = std::log((3.0 + std::sqrt(5.0)) / 2.0);  // 0.9624236501192069
}

TEST_CASE("closed-form exponents: hyperbolic automorphism") {
    auto s = exact_exponents(catmap());
    REQUIRE(s.exponents.size() == 2);
    CHECK(s.exponents[0] == doctest::Approx(-kCatLam).epsilon(1e-14));
    CHECK(s.exponents[1] == doctest::Approx(kCatLam).epsilon(1e-14));
    CHECK(s.exponents[1] == doctest::Approx(0.9624236501192069).epsilon(1e-14));
    CHECK(*s.lambda_u_min == doctest::Approx(kCatLam));
    CHECK(*s.lambda_u_max == doctest::Approx(kCatLam));
    CHECK(*s.lambda_s_max == doctest::Approx(-kCatLam));
}

TEST_CASE("closed-form exponents: expanding endomorphism") {
    auto s = exact_exponents(expanding_example());
    REQUIRE(s.exponents.size() == 2);
    double lo = std::log((9.0 - 3.0 * std::sqrt(5.0)) / 2.0);
    double hi = std::log((9.0 + 3.0 * std::sqrt(5.0)) / 2.0);
    CHECK(s.exponents[0] == doctest::Approx(lo).epsilon(1e-13));
    CHECK(s.exponents[1] == doctest::Approx(hi).epsilon(1e-13));
    CHECK(s.exponents[0] + s.exponents[1] == doctest::Approx(std::log(9.0)).epsilon(1e-13));
    CHECK(s.exponents[0] == doctest::Approx(0.13618).epsilon(1e-3));
    CHECK(s.exponents[1] == doctest::Approx(2.06104).epsilon(1e-3));
    CHECK_FALSE(s.lambda_s_max.has_value());
    CHECK_FALSE(s.lambda_s_min.has_value());
}

TEST_CASE("closed-form exponents: doubling and products") {
    auto d = exact_exponents(MapSpec::doubling());
    REQUIRE(d.exponents.size() == 1);
    CHECK(d.exponents[0] == doctest::Approx(std::log(2.0)).epsilon(1e-15));

    MapSpec g = MapSpec::toral_auto(IntMatrix{{{{3, 2}, {1, 1}}}});
    auto p = exact_exponents(MapSpec::product(catmap(), g));
    REQUIRE(p.exponents.size() == 4);
    double l2 = std::log(2.0 + std::sqrt(3.0));  // 1.3169578969248166
    CHECK(p.exponents[0] == doctest::Approx(-l2).epsilon(1e-13));
    CHECK(p.exponents[1] == doctest::Approx(-kCatLam).epsilon(1e-13));
    CHECK(p.exponents[2] == doctest::Approx(kCatLam).epsilon(1e-13));
    CHECK(p.exponents[3] == doctest::Approx(l2).epsilon(1e-13));
    CHECK(*p.lambda_u_min == doctest::Approx(kCatLam));
    CHECK(*p.lambda_u_max == doctest::Approx(l2));
    CHECK(*p.lambda_s_max == doctest::Approx(-kCatLam));
    CHECK(*p.lambda_s_min == doctest::Approx(-l2));
}

TEST_CASE("spectrum classification from a raw exponent list") {
    auto s = ExponentSpectrum::from_exponents({0.5, -0.2, 0.0, 1.5});
    CHECK(s.exponents.front() == doctest::Approx(-0.2));
    CHECK(s.exponents.back() == doctest::Approx(1.5));
    CHECK(*s.lambda_u_min == doctest::Approx(0.5));
    CHECK(*s.lambda_u_max == doctest::Approx(1.5));
    CHECK(*s.lambda_s_max == doctest::Approx(-0.2));
    CHECK(*s.lambda_s_min == doctest::Approx(-0.2));
}

TEST_CASE("cocycle estimate converges to the closed form") {
    SplitMix64 rng(3, 9);
    for (const MapSpec& map : {catmap(), expanding_example(), MapSpec::doubling()}) {
        auto est = estimate_exponents(map, random_torus_point(map.dim(), rng), 50000, 42);
        auto ex = exact_exponents(map);
        REQUIRE(est.exponents.size() == ex.exponents.size());
        for (size_t i = 0; i < ex.exponents.size(); ++i)
            CHECK(std::fabs(est.exponents[i] - ex.exponents[i]) < 2e-3);
    }
    CHECK_THROWS_AS(estimate_exponents(catmap(), TorusPoint(0.1, 0.2), 10, 1),
                    std::invalid_argument);
}

TEST_CASE("recurrence-slope bounds from the spectrum") {
    auto bc = theorem_bounds(exact_exponents(catmap()));
    REQUIRE(bc.upper.has_value());
    CHECK(bc.lower == doctest::Approx(2.0 / kCatLam).epsilon(1e-13));
    CHECK(*bc.upper == doctest::Approx(bc.lower).epsilon(1e-13));
    CHECK(bc.lower == doctest::Approx(2.078087).epsilon(1e-6));

    auto be = theorem_bounds(exact_exponents(expanding_example()));
    REQUIRE(be.upper.has_value());
    CHECK(be.lower == doctest::Approx(1.0 / std::log((9.0 + 3.0 * std::sqrt(5.0)) / 2.0)));
    CHECK(*be.upper == doctest::Approx(1.0 / std::log((9.0 - 3.0 * std::sqrt(5.0)) / 2.0)));
    CHECK(be.lower < *be.upper);

    // no expansion anywhere -> bounds are meaningless
    CHECK_THROWS_AS(theorem_bounds(ExponentSpectrum::from_exponents({-0.5, -1.0})),
                    std::domain_error);
}
