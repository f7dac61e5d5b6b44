#ifndef RECUR_NUMTHEORY_HPP
#define RECUR_NUMTHEORY_HPP

#include <cstdint>
#include <vector>

#include "recur/dynamics.hpp"
#include "recur/mapspec.hpp"

namespace recur {

struct Convergent {
    BigInt p;
    BigInt q;
    int index;
};

// continued-fraction convergents of theta in (0,1); rational inputs are
// detected (remainder underflow) and rejected
std::vector<Convergent> convergents(double theta, int count);

// certified covering radius (largest gap / 2) of the rotation orbit
// {k theta mod 1 : 0 <= k < k_max}
double rotation_density(double theta, long k_max);

// all circle gaps of the orbit, sorted (three-distance diagnostics)
std::vector<double> rotation_gaps(double theta, long k_max);

struct CoveringCertificate {
    double r;
    long n_formula;
    long n_observed;
    double density_gap;  // required density minus achieved, at n_observed
    bool valid;          // n_observed <= n_formula
};

// covering time of the expanding example's unstable strip, certified by
// reducing the 2-D covering question to rotation-orbit density on the
// fiber
CoveringCertificate covering_time(double r);

// |det(A^p - I)| for p = 1..p_max, exact big integers
std::vector<BigInt> periodic_point_counts(const IntMatrix& matrix, int p_max);

// the rational fixed points of A^p on T^2, i.e. solutions of
// (A^p - I) x = 0 mod Z^2; the list has |det(A^p - I)| elements
std::vector<RatPoint> enumerate_periodic_points(const IntMatrix& matrix, int p);

struct BorelCantelliRow {
    long n;
    double empirical_freq;  // fraction of trials with tau(B(x, a^n)) <= n
    double envelope;        // summable theoretical bound
};

std::vector<BorelCantelliRow> borel_cantelli_lower(const MapSpec& map, double a, long n_max,
                                                   long trials, std::uint64_t seed);

// exact matrix power (2x2, big integers)
struct BigMat {
    BigInt a00, a01, a10, a11;
    BigInt det() const { return a00 * a11 - a01 * a10; }
};
BigMat int_matrix_power(const IntMatrix& m, int p);

}  // namespace recur

#endif
