#ifndef RECUR_RNG_HPP
#define RECUR_RNG_HPP

#include <cmath>
#include <cstdint>

#include "recur/torus.hpp"

namespace recur {

// splitmix64; per-stream state derived from (seed, index) so results do
// not depend on evaluation order or thread count.
struct SplitMix64 {
    std::uint64_t s;
    explicit SplitMix64(std::uint64_t seed) : s(seed) {}
    SplitMix64(std::uint64_t seed, std::uint64_t stream) : s(seed * 0x9E3779B97F4A7C15ULL + stream * 0xBF58476D1CE4E5B9ULL + 0x94D049BB133111EBULL) {}

    std::uint64_t next() {
        std::uint64_t z = (s += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// i-th point of a seed-scrambled Kronecker (R_d) lattice in the max-norm
// ball around `center`; i = 0 is the center itself. Low discrepancy, so
// the boundary region where overlaps first appear gets covered.
inline TorusPoint ball_lattice_point(const TorusPoint& center, double radius, long i, std::uint64_t seed) {
    // generalized-golden-ratio (R_d) lattice directions, d = 1,2,4
    static const double g1[1] = {0.6180339887498949};
    static const double g2[2] = {0.7548776662466927, 0.5698402909980532};
    static const double g4[4] = {0.8566748838545029, 0.7338918566271260, 0.6287067210378086, 0.5385972572236101};
    const double* g = center.dim == 1 ? g1 : (center.dim == 2 ? g2 : g4);

    if (i == 0) return center;
    SplitMix64 scramble(seed, 0x5bba11);
    double c[4] = {0, 0, 0, 0};
    for (int k = 0; k < center.dim; ++k) {
        double shift = scramble.uniform01();
        double u = static_cast<double>(i) * g[k] + shift;
        u -= std::floor(u);                               // in [0,1)
        c[k] = center[k] + radius * (2.0 * u - 1.0);      // in max-norm ball
    }
    if (center.dim == 1) return TorusPoint(c[0]);
    if (center.dim == 2) return TorusPoint(c[0], c[1]);
    return TorusPoint(c[0], c[1], c[2], c[3]);
}

inline TorusPoint random_torus_point(int dim, SplitMix64& rng) {
    double c[4] = {0, 0, 0, 0};
    for (int k = 0; k < dim; ++k) c[k] = rng.uniform01();
    if (dim == 1) return TorusPoint(c[0]);
    if (dim == 2) return TorusPoint(c[0], c[1]);
    return TorusPoint(c[0], c[1], c[2], c[3]);
}

}  // namespace recur

#endif
