#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "recur/dynamics.hpp"
#include "recur/lyapunov.hpp"
#include "recur/rng.hpp"
#include "recur/spectrum.hpp"

using namespace recur;

namespace {

Orbit catmap_orbit(long n, std::uint64_t seed) {
    SplitMix64 rng(seed, 0xabc);
    return orbit(catmap(), random_torus_point(2, rng), n);
}

}  // namespace

TEST_CASE("bucketed ball counts agree with brute force") {
    Orbit o = catmap_orbit(20000, 2);
    EmpiricalMeasure mu(o, 0.01);
    CHECK(mu.size() == 20001);
    SplitMix64 rng(9, 1);
    for (int trial = 0; trial < 200; ++trial) {
        TorusPoint x = random_torus_point(2, rng);
        double r = 0.002 * std::pow(30.0, rng.uniform01());  // up to 0.06
        CHECK(mu.ball_count(x, r) == mu.ball_count_brute(x, r));
    }
    // wrap-around centers hit the same code paths
    for (double r : {0.005, 0.03}) {
        TorusPoint edge(0.001, 0.999);
        CHECK(mu.ball_count(edge, r) == mu.ball_count_brute(edge, r));
    }
    // mass is count / n and needs a large orbit
    Ball b(TorusPoint(0.5, 0.5), 0.05);
    CHECK(mu.ball_mass(b) == doctest::Approx(static_cast<double>(mu.ball_count(TorusPoint(0.5, 0.5), 0.05)) / 20001.0));
    Orbit tiny = catmap_orbit(100, 3);
    EmpiricalMeasure small(tiny, 0.01);
    CHECK_THROWS_AS(small.ball_mass(b), std::invalid_argument);
}

TEST_CASE("ball mass scales like r^2 for the area measure") {
    Orbit o = catmap_orbit(200000, 4);
    EmpiricalMeasure mu(o, 0.005);
    // Lebesgue is the SRB measure here: mass(B(x,r)) ~ (2r)^2
    SplitMix64 rng(13, 2);
    for (int trial = 0; trial < 20; ++trial) {
        TorusPoint x = random_torus_point(2, rng);
        double r = 0.05;
        double mass = mu.ball_mass(Ball(x, r));
        CHECK(mass == doctest::Approx(4 * r * r).epsilon(0.2));
    }
}

TEST_CASE("radius profiles drop empty radii and share tau across q") {
    Orbit o = catmap_orbit(50000, 5);
    EmpiricalMeasure mu(o, 0.002);
    std::vector<double> r_grid = {0.04, 0.02, 0.01, 0.005, 1e-9};  // last one sees no points
    TorusPoint x(0.123456789, 0.654321987);  // generic center, not an orbit point
    auto prof = radius_profile(catmap(), mu, x, r_grid, 0, 1);
    CHECK(prof.dropped_zero_mass >= 1);
    REQUIRE(prof.log_r.size() == prof.log_mass.size());
    REQUIRE(prof.log_r.size() == prof.tau.size());
    CHECK(prof.log_r.size() == 4);
    for (size_t i = 1; i < prof.log_r.size(); ++i) {
        CHECK(prof.log_r[i] < prof.log_r[i - 1]);     // radii descending
        CHECK(prof.tau[i] >= prof.tau[i - 1]);        // tau monotone in r
        CHECK(prof.log_mass[i] <= prof.log_mass[i - 1]);
    }
}

TEST_CASE("pointwise dimension: q = 0 recovers mass scaling, decreasing in q") {
    Orbit o = catmap_orbit(400000, 6);
    EmpiricalMeasure mu(o, 0.002);
    std::vector<double> r_grid;
    for (int j = 0; j < 8; ++j) r_grid.push_back(0.05 * std::pow(0.1, j / 7.0));  // down to 5e-3
    TorusPoint x = o.points[1000];
    double d0 = pointwise_dim(catmap(), mu, x, 0.0, r_grid);
    CHECK(d0 == doctest::Approx(2.0).epsilon(0.25));
    double dm = pointwise_dim(catmap(), mu, x, -0.5, r_grid);
    double dm2 = pointwise_dim(catmap(), mu, x, -1.0, r_grid);
    // adding q tau with q<0 and tau ~ alpha(-log r) raises the slope
    CHECK(dm >= d0 - 0.05);
    CHECK(dm2 >= dm - 0.05);
    CHECK_THROWS_AS(pointwise_dim(catmap(), mu, x, 0.0, std::vector<double>{0.01, 0.02}),
                    std::runtime_error);
}

TEST_CASE("spectrum curve produces one alpha per usable q") {
    Orbit o = catmap_orbit(200000, 7);
    EmpiricalMeasure mu(o, 0.004);
    std::vector<double> r_grid;
    for (int j = 0; j < 8; ++j) r_grid.push_back(0.05 * std::pow(0.1, j / 7.0));
    auto curve = spectrum_curve(catmap(), mu, {0.0}, 24, r_grid, 3);
    REQUIRE(curve.q_values.size() == 1);
    CHECK(curve.alpha_values[0] == doctest::Approx(2.0).epsilon(0.3));
    CHECK(curve.n_points[0] >= 12);
    CHECK(curve.median_r2[0] > 0.9);
    CHECK(curve.percentile_level == 90.0);
    CHECK(curve.inf_at_center);
}

TEST_CASE("box dimension of an equidistributed orbit is the full dimension") {
    Orbit o = catmap_orbit(400000, 8);
    EmpiricalMeasure mu(o, 0.002);
    std::vector<double> scales = {0.04, 0.028, 0.02, 0.014, 0.01, 0.005};
    CHECK(box_dimension(mu, scales) == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("dimension from entropy and exponents") {
    auto spec = exact_exponents(catmap());
    double h = spec.exponents.back();  // entropy = log of the expanding eigenvalue
    auto rep = youngs_check(spec, h, 1.97);
    CHECK(rep.predicted_dim == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(rep.estimate == doctest::Approx(1.97));
    CHECK(rep.rel_error == doctest::Approx(0.015));
    CHECK_THROWS_AS(youngs_check(exact_exponents(MapSpec::doubling()), std::log(2.0), 1.0),
                    std::domain_error);
}
