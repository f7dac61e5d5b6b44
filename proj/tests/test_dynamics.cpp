#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "recur/dynamics.hpp"
#include "recur/mapspec.hpp"
#include "recur/rng.hpp"

using namespace recur;

TEST_CASE("torus point wrapping") {
    CHECK(TorusPoint(1.25).c[0] == doctest::Approx(0.25));
    CHECK(TorusPoint(-0.25).c[0] == doctest::Approx(0.75));
    CHECK(TorusPoint(3.0, -2.0).c[0] == doctest::Approx(0.0));
    CHECK(TorusPoint(0.999999, 0.5).c[1] == doctest::Approx(0.5));
    // wrap-around metric
    CHECK(circle_dist(0.05, 0.95) == doctest::Approx(0.1));
    CHECK(torus_dist(TorusPoint(0.02, 0.5), TorusPoint(0.98, 0.6)) == doctest::Approx(0.1));
}

TEST_CASE("doubling map doubles mod 1") {
    MapSpec d = MapSpec::doubling();
    CHECK(apply(d, TorusPoint(0.3)).c[0] == doctest::Approx(0.6));
    CHECK(apply(d, TorusPoint(0.7)).c[0] == doctest::Approx(0.4));
}

TEST_CASE("float orbit agrees with exact rational orbit at rational starts") {
    MapSpec cat = catmap();
    RatPoint rx{{BigRat(3, 7), BigRat(2, 7)}};
    TorusPoint fx(3.0 / 7.0, 2.0 / 7.0);
    // the start is not binary-representable, so the float orbit drifts at
    // the top Lyapunov rate; only a short window stays close
    for (int i = 0; i < 12; ++i) {
        CHECK(circle_dist(fx.c[0], static_cast<double>(frac(rx.c[0]))) < 1e-9);
        CHECK(circle_dist(fx.c[1], static_cast<double>(frac(rx.c[1]))) < 1e-9);
        rx = rat_apply(cat, rx);
        fx = apply(cat, fx);
    }
}

TEST_CASE("inverse round-trips on the torus") {
    MapSpec cat = catmap();
    MapSpec prod = MapSpec::product(cat, MapSpec::toral_auto(IntMatrix{{{{3, 2}, {1, 1}}}}));
    SplitMix64 rng(7, 1);
    for (int i = 0; i < 10000; ++i) {
        TorusPoint x = random_torus_point(2, rng);
        TorusPoint y = inverse_apply(cat, apply(cat, x));
        CHECK(torus_dist(x, y) < 1e-12);
    }
    for (int i = 0; i < 1000; ++i) {
        TorusPoint x = random_torus_point(4, rng);
        CHECK(torus_dist(x, apply(prod, inverse_apply(prod, x))) < 1e-12);
    }
    CHECK_THROWS_AS(inverse_apply(MapSpec::doubling(), TorusPoint(0.5)), std::domain_error);
}

TEST_CASE("rational points are eventually periodic with period <= denominator bound") {
    MapSpec cat = catmap();
    CHECK(rational_period(cat, RatPoint{{BigRat(0), BigRat(0)}}, 8) == 1);
    // (1/2,1/2) -> (1/2,0) -> (0,1/2) -> (1/2,1/2)
    CHECK(rational_period(cat, RatPoint{{BigRat(1, 2), BigRat(1, 2)}}, 8) == 3);
    SplitMix64 rng(11, 2);
    for (int trial = 0; trial < 20; ++trial) {
        long q = 2 + static_cast<long>(rng.next() % 23);
        RatPoint x{{BigRat(static_cast<long>(rng.next() % q), q),
                    BigRat(static_cast<long>(rng.next() % q), q)}};
        long p = rational_period(cat, x, 64);
        CHECK(p >= 1);
        // verify the certificate: some tail point has exact period p
        RatPoint y = x;
        for (int s = 0; s < 130; ++s) y = rat_apply(cat, y);
        RatPoint z = y;
        for (long i = 0; i < p; ++i) z = rat_apply(cat, z);
        CHECK(frac(z.c[0]) == frac(y.c[0]));
        CHECK(frac(z.c[1]) == frac(y.c[1]));
    }
}

TEST_CASE("orbit layout") {
    MapSpec cat = catmap();
    Orbit o = orbit(cat, TorusPoint(0.1, 0.2), 50);
    CHECK(o.length() == 50);
    CHECK(o.points.size() == 51);
    CHECK(torus_dist(o.points[0], o.start) == 0.0);
    CHECK(torus_dist(o.points[1], apply(cat, o.start)) == 0.0);
}

TEST_CASE("tangent frame stays orthonormal under the cocycle") {
    MapSpec cat = catmap();
    TangentFrame f = TangentFrame::identity(2);
    for (int i = 0; i < 200; ++i) f = tangent_step(cat, f);
    double dot = 0, n0 = 0, n1 = 0;
    for (int r = 0; r < 2; ++r) {
        dot += f.basis[static_cast<size_t>(2 * r)] * f.basis[static_cast<size_t>(2 * r + 1)];
        n0 += f.basis[static_cast<size_t>(2 * r)] * f.basis[static_cast<size_t>(2 * r)];
        n1 += f.basis[static_cast<size_t>(2 * r + 1)] * f.basis[static_cast<size_t>(2 * r + 1)];
    }
    CHECK(std::fabs(dot) < 1e-12);
    CHECK(n0 == doctest::Approx(1.0));
    CHECK(n1 == doctest::Approx(1.0));
    // after 200 steps log stretches straddle zero for a hyperbolic map
    CHECK(f.log_norms[0] > 100.0);
    CHECK(f.log_norms[1] < -100.0);
}

TEST_CASE("frac representative") {
    CHECK(frac(BigRat(-1, 3)) == BigRat(2, 3));
    CHECK(frac(BigRat(7, 3)) == BigRat(1, 3));
    CHECK(frac(BigRat(2)) == BigRat(0));
}
