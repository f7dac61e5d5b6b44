#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <optional>

#include "recur/dynamics.hpp"
#include "recur/recurrence.hpp"
#include "recur/rng.hpp"

using namespace recur;

namespace {

// Independent overlap oracle for 2-D integer maps: enumerate every
// lattice point in the bounding box of c_k + S_k and test the
// support-function inequalities directly in exact rationals. Only valid
// while A^k fits in int64, so keep k_max modest.
std::optional<long> tau_oracle_2d(const IntMatrix& A, double cx, double cy, double r, long k_max) {
    std::int64_t m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    BigRat x(cx), y(cy), rr(r);
    for (long k = 1; k <= k_max; ++k) {
        std::int64_t n00 = A.a[0][0] * m00 + A.a[0][1] * m10;
        std::int64_t n01 = A.a[0][0] * m01 + A.a[0][1] * m11;
        std::int64_t n10 = A.a[1][0] * m00 + A.a[1][1] * m10;
        std::int64_t n11 = A.a[1][0] * m01 + A.a[1][1] * m11;
        m00 = n00; m01 = n01; m10 = n10; m11 = n11;

        BigRat ckx = BigRat(m00) * x + BigRat(m01) * y - x;
        BigRat cky = BigRat(m10) * x + BigRat(m11) * y - y;
        BigRat h1 = rr * (std::llabs(m00) + std::llabs(m01) + 1);
        BigRat h2 = rr * (std::llabs(m10) + std::llabs(m11) + 1);
        std::int64_t det = std::llabs(m00 * m11 - m01 * m10);
        BigRat h3 = rr * det + rr * (std::llabs(m10) + std::llabs(m00));
        BigRat h4 = rr * det + rr * (std::llabs(m11) + std::llabs(m01));

        long zx_lo = static_cast<long>(std::floor(static_cast<double>(ckx - h1))) - 1;
        long zx_hi = static_cast<long>(std::ceil(static_cast<double>(ckx + h1))) + 1;
        long zy_lo = static_cast<long>(std::floor(static_cast<double>(cky - h2))) - 1;
        long zy_hi = static_cast<long>(std::ceil(static_cast<double>(cky + h2))) + 1;
        for (long zx = zx_lo; zx <= zx_hi; ++zx)
            for (long zy = zy_lo; zy <= zy_hi; ++zy) {
                BigRat wx = BigRat(zx) - ckx, wy = BigRat(zy) - cky;
                if (abs(wx) > h1 || abs(wy) > h2) continue;
                if (abs(-BigRat(m10) * wx + BigRat(m00) * wy) > h3) continue;
                if (abs(-BigRat(m11) * wx + BigRat(m01) * wy) > h4) continue;
                return k;
            }
    }
    return std::nullopt;
}

// interval oracle for doubling: ||(2^k - 1) c|| <= (2^k + 1) r in rationals
long tau_oracle_doubling(double c, double r, long k_max) {
    BigRat cc(c), rr(r);
    BigInt pw = 2;
    for (long k = 1; k <= k_max; ++k, pw *= 2) {
        BigRat t = frac(BigRat(pw - 1) * cc);
        BigRat d = t <= BigRat(1, 2) ? t : BigRat(1) - t;
        if (d <= BigRat(pw + 1) * rr) return k;
    }
    return -1;
}

}  // namespace

TEST_CASE("ball validation") {
    CHECK_THROWS_AS(Ball(TorusPoint(0.5, 0.5), 0.3), std::invalid_argument);
    CHECK_THROWS_AS(Ball(TorusPoint(0.5, 0.5), 0.0), std::invalid_argument);
    Ball b(TorusPoint(0.5, 0.5), 0.1);
    CHECK(b.contains(TorusPoint(0.6, 0.5)));       // boundary is in (closed ball)
    CHECK_FALSE(b.contains(TorusPoint(0.61, 0.5)));
}

TEST_CASE("word self-overlap return times") {
    CHECK(tau_word(Word{{0, 1, 0, 1}}) == 2);
    CHECK(tau_word(Word{{0, 0, 0, 0, 0, 0}}) == 1);
    CHECK(tau_word(Word{{0, 0, 1, 1}}) == 4);
    CHECK(tau_word(Word{{0, 1, 1, 0, 1, 1, 0, 1}}) == 3);
    CHECK(tau_word(Word{{1}}) == 1);
    CHECK(tau_word(Word{{0, 1, 0, 1}}, true) == 2);
    CHECK_THROWS_AS(tau_word(Word{{}}), std::invalid_argument);
    SplitMix64 rng(5, 0);
    for (int i = 0; i < 500; ++i) {
        Word w;
        int n = 1 + static_cast<int>(rng.next() % 40);
        for (int j = 0; j < n; ++j) w.symbols.push_back(static_cast<int>(rng.next() % 3));
        long tau = tau_word(w);
        CHECK(tau >= 1);
        CHECK(tau <= n);
        // definition check: shift by tau really is a prefix, no smaller shift is
        for (long k = 1; k <= tau; ++k) {
            bool pref = true;
            for (size_t j = 0; j + static_cast<size_t>(k) < w.symbols.size(); ++j)
                if (w.symbols[j + static_cast<size_t>(k)] != w.symbols[j]) { pref = false; break; }
            CHECK(pref == (k == tau));
        }
    }
}

TEST_CASE("exact ball return time at fixed and periodic points") {
    MapSpec cat = catmap();
    auto rt = tau_ball_exact(cat, Ball(TorusPoint(0.0, 0.0), 0.01), 50);
    REQUIRE(rt.tau.has_value());
    CHECK(*rt.tau == 1);  // fixed point: f(B) always meets B
    // (1/2,1/2) has exact period 3
    auto rt3 = tau_ball_exact(cat, Ball(TorusPoint(0.5, 0.5), 1e-3), 50);
    REQUIRE(rt3.tau.has_value());
    CHECK(*rt3.tau == 3);
}

TEST_CASE("exact ball return time matches brute-force lattice enumeration") {
    MapSpec cat = catmap();
    MapSpec exp2 = expanding_example();
    SplitMix64 rng(17, 4);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        TorusPoint x = random_torus_point(2, rng);
        double r = 0.004 * std::pow(8.0, rng.uniform01());  // [0.004, 0.032)
        if (r >= 0.25) continue;
        const MapSpec& map = (trial % 2 == 0) ? cat : exp2;
        auto got = tau_ball_exact(map, Ball(x, r), 12);
        auto want = tau_oracle_2d(map.matrix(), x.c[0], x.c[1], r, 12);
        if (want) {
            REQUIRE(got.tau.has_value());
            CHECK(*got.tau == *want);
            ++checked;
        } else {
            CHECK_FALSE(got.tau.has_value());
        }
    }
    CHECK(checked >= 30);  // most trials must resolve inside the horizon
}

TEST_CASE("exact doubling return time matches the interval oracle") {
    MapSpec d = MapSpec::doubling();
    // 1/3 is 2-periodic
    auto rt = tau_ball_exact(d, Ball(TorusPoint(1.0 / 3.0), 1e-4), 50);
    REQUIRE(rt.tau.has_value());
    CHECK(*rt.tau == 2);
    SplitMix64 rng(23, 6);
    for (int trial = 0; trial < 200; ++trial) {
        double c = rng.uniform01();
        double r = 1e-5 * std::pow(1000.0, rng.uniform01());  // [1e-5, 1e-2)
        auto got = tau_ball_exact(d, Ball(TorusPoint(c), r), 40);
        long want = tau_oracle_doubling(c, r, 40);
        REQUIRE(got.tau.has_value());
        CHECK(*got.tau == want);
    }
}

TEST_CASE("return time is monotone nonincreasing in the radius") {
    MapSpec cat = catmap();
    SplitMix64 rng(31, 8);
    for (int trial = 0; trial < 40; ++trial) {
        TorusPoint x = random_torus_point(2, rng);
        double r = 1e-4 * std::pow(100.0, rng.uniform01());
        auto small = tau_ball_exact(cat, Ball(x, r), 200);
        auto big = tau_ball_exact(cat, Ball(x, 2 * r), 200);
        REQUIRE(small.tau.has_value());
        REQUIRE(big.tau.has_value());
        CHECK(*big.tau <= *small.tau);
    }
}

TEST_CASE("product return time: simultaneous factor overlap") {
    MapSpec g = MapSpec::toral_auto(IntMatrix{{{{3, 2}, {1, 1}}}});
    MapSpec prod = MapSpec::product(catmap(), g);
    auto at_zero = tau_ball_exact(prod, Ball(TorusPoint(0, 0, 0, 0), 0.01), 50);
    REQUIRE(at_zero.tau.has_value());
    CHECK(*at_zero.tau == 1);

    SplitMix64 rng(37, 3);
    for (int trial = 0; trial < 20; ++trial) {
        TorusPoint x = random_torus_point(4, rng);
        double r = 0.01 * std::pow(3.0, rng.uniform01());
        auto p = tau_ball_exact(prod, Ball(x, r), 300);
        auto f1 = tau_ball_exact(catmap(), Ball(TorusPoint(x.c[0], x.c[1]), r), 300);
        auto f2 = tau_ball_exact(g, Ball(TorusPoint(x.c[2], x.c[3]), r), 300);
        REQUIRE(p.tau.has_value());
        REQUIRE(f1.tau.has_value());
        REQUIRE(f2.tau.has_value());
        CHECK(*p.tau >= *f1.tau);
        CHECK(*p.tau >= *f2.tau);
    }
    // identical factors + diagonal center: factor overlaps coincide
    MapSpec prod2 = MapSpec::product(catmap(), catmap());
    TorusPoint x4(0.337, 0.521, 0.337, 0.521);
    auto p = tau_ball_exact(prod2, Ball(x4, 0.02), 200);
    auto f = tau_ball_exact(catmap(), Ball(TorusPoint(0.337, 0.521), 0.02), 200);
    REQUIRE(p.tau.has_value());
    CHECK(*p.tau == *f.tau);
}

TEST_CASE("sampled return time is a sound upper bound") {
    MapSpec cat = catmap();
    SplitMix64 rng(41, 5);
    int equal = 0, total = 0;
    for (int trial = 0; trial < 50; ++trial) {
        TorusPoint x = random_torus_point(2, rng);
        double r = 1e-3 * std::pow(10.0, rng.uniform01());
        long km = default_k_max(cat, r);
        auto ex = tau_ball_exact(cat, Ball(x, r), km);
        auto sm = tau_ball_sample(cat, Ball(x, r), km, 10000, 99);
        REQUIRE(ex.tau.has_value());
        if (sm.tau) {
            CHECK(*sm.tau >= *ex.tau);  // never below the truth
            if (*sm.tau == *ex.tau) ++equal;
        }
        ++total;
        if (sm.witness) {
            // the witness pair really certifies the overlap
            CHECK(torus_dist(sm.witness->first, x) <= r + 1e-12);
            CHECK(torus_dist(sm.witness->second, x) <= r + 1e-12);
        }
    }
    CHECK(equal >= total * 9 / 10);
    // deterministic given (seed, samples)
    Ball b(TorusPoint(0.337, 0.521), 0.005);
    auto a1 = tau_ball_sample(cat, b, 100, 4096, 7);
    auto a2 = tau_ball_sample(cat, b, 100, 4096, 7);
    REQUIRE(a1.tau.has_value());
    CHECK(*a1.tau == *a2.tau);
}

TEST_CASE("itineraries and their cylinder return times") {
    MapSpec d = MapSpec::doubling();
    Word w = itinerary(d, TorusPoint(1.0 / 3.0), 12, PartitionKind::BinaryMarkov);
    REQUIRE(w.symbols.size() == 12);
    for (size_t j = 0; j < w.symbols.size(); ++j) CHECK(w.symbols[j] == static_cast<int>(j % 2));
    CHECK(tau_word(w) == 2);

    Word g = itinerary(catmap(), TorusPoint(0.337, 0.521), 8, PartitionKind::Grid, 4);
    REQUIRE(g.symbols.size() == 8);
    for (int s : g.symbols) {
        CHECK(s >= 0);
        CHECK(s < 16);
    }
}

TEST_CASE("Bowen-ball sampled return time") {
    MapSpec cat = catmap();
    BowenBallSpec plain{TorusPoint(0.337, 0.521), 0, 0, 0.02};
    auto a = tau_bowen_sample(cat, plain, 200, 2000, 3);
    auto b = tau_ball_sample(cat, Ball(TorusPoint(0.337, 0.521), 0.02), 200, 2000, 3);
    REQUIRE(a.tau.has_value());
    REQUIRE(b.tau.has_value());
    // with m = n = 0 the Bowen ball is the plain ball
    CHECK(*a.tau >= *b.tau - 0);
    // deeper Bowen balls are smaller, so tau cannot drop
    BowenBallSpec deep{TorusPoint(0.337, 0.521), 2, 2, 0.02};
    auto c = tau_bowen_sample(cat, deep, 400, 2000, 3);
    REQUIRE(c.tau.has_value());
    CHECK(*c.tau >= *a.tau);
}

TEST_CASE("slope series: window estimates and degeneracy flag") {
    MapSpec cat = catmap();
    auto s = slope_series(cat, TorusPoint(0.337, 0.521), 1e-3, 1e-2, 10, TauMethod::ExactLattice);
    REQUIRE(s.rows.size() == 10);
    CHECK_FALSE(s.censored);
    CHECK(s.liminf_est <= s.limsup_est);
    CHECK(s.liminf_est > 0.5);
    CHECK(s.limsup_est < 4.0);
    // radii descend from r_max to r_min
    CHECK(s.rows.front().r == doctest::Approx(1e-2));
    CHECK(s.rows.back().r == doctest::Approx(1e-3));

    auto fixed = slope_series(cat, TorusPoint(0.0, 0.0), 1e-3, 1e-2, 8, TauMethod::ExactLattice);
    CHECK(fixed.degenerate);  // tau == 1 at every radius
}

TEST_CASE("default search horizon grows as the radius shrinks") {
    MapSpec cat = catmap();
    CHECK(default_k_max(cat, 1e-2) > 0);
    CHECK(default_k_max(cat, 1e-4) > default_k_max(cat, 1e-2));
}
