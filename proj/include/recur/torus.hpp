#ifndef RECUR_TORUS_HPP
#define RECUR_TORUS_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace recur {

// Point on T^d, d in {1,2,4}. Coordinates are the canonical
// representatives in [0,1).
struct TorusPoint {
    std::array<double, 4> c{};
    int dim = 0;

    TorusPoint() = default;
    explicit TorusPoint(double x) : dim(1) { c[0] = wrap(x); }
    TorusPoint(double x, double y) : dim(2) {
        c[0] = wrap(x);
        c[1] = wrap(y);
    }
    TorusPoint(double x, double y, double z, double w) : dim(4) {
        c[0] = wrap(x);
        c[1] = wrap(y);
        c[2] = wrap(z);
        c[3] = wrap(w);
    }

    double operator[](int i) const { return c[static_cast<size_t>(i)]; }

    // Canonical representative in [0,1). std::floor handles negatives;
    // the post-correction catches x = -eps where x - floor(x) rounds to 1.
    static double wrap(double x) {
        double y = x - std::floor(x);
        if (y >= 1.0) y -= 1.0;
        if (y < 0.0) y += 1.0;
        return y;
    }
};

inline double circle_dist(double a, double b) {
    double d = std::fabs(a - b);
    return std::min(d, 1.0 - d);
}

// max-norm distance on T^d (per-factor max, matching the product metric)
inline double torus_dist(const TorusPoint& a, const TorusPoint& b) {
    if (a.dim != b.dim) throw std::invalid_argument("torus_dist: dimension mismatch");
    double m = 0.0;
    for (int i = 0; i < a.dim; ++i) m = std::max(m, circle_dist(a.c[static_cast<size_t>(i)], b.c[static_cast<size_t>(i)]));
    return m;
}

}  // namespace recur

#endif
