#ifndef RECUR_DYNAMICS_HPP
#define RECUR_DYNAMICS_HPP

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "recur/mapspec.hpp"
#include "recur/torus.hpp"

namespace recur {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct Orbit {
    TorusPoint start;
    std::vector<TorusPoint> points;  // points[0] == start, size n+1
    long length() const { return static_cast<long>(points.size()) - 1; }
};

TorusPoint apply(const MapSpec& map, const TorusPoint& x);
Orbit orbit(const MapSpec& map, const TorusPoint& x, long n);

// only for invertible kinds (toral_auto_2d, product_4d)
TorusPoint inverse_apply(const MapSpec& map, const TorusPoint& x);

// Orthonormal tangent frame with accumulated per-column log stretch.
struct TangentFrame {
    int dim = 0;
    std::vector<double> basis;      // row-major d x d, columns orthonormal
    std::vector<double> log_norms;  // nats, one per column

    static TangentFrame identity(int d);
};

// Push the frame through the (constant) derivative, re-orthonormalize,
// accumulate log stretch.
TangentFrame tangent_step(const MapSpec& map, const TangentFrame& frame);

// Exact rational reference path. Linear integer maps preserve
// rationality, so these orbits are error-free.
struct RatPoint {
    std::vector<BigRat> c;
};
RatPoint rat_apply(const MapSpec& map, const RatPoint& x);
// least p >= 1 with f^(s+p) x = f^s x for some s >= 0, searched up to p_max
long rational_period(const MapSpec& map, const RatPoint& x, long p_max);

BigRat frac(const BigRat& v);  // representative in [0,1)

}  // namespace recur

#endif
