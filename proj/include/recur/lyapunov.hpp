#ifndef RECUR_LYAPUNOV_HPP
#define RECUR_LYAPUNOV_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "recur/dynamics.hpp"
#include "recur/mapspec.hpp"

namespace recur {

// Ordered Lyapunov exponents plus the four constants of the recurrence
// bounds: lambda_u_min/max over the positive class, lambda_s_max/min
// over the negative class. A class can be empty (expanding maps have
// no negative exponents).
struct ExponentSpectrum {
    std::vector<double> exponents;  // ascending, nats per iteration
    std::optional<double> lambda_u_min;  // smallest positive
    std::optional<double> lambda_u_max;  // largest
    std::optional<double> lambda_s_max;  // largest negative
    std::optional<double> lambda_s_min;  // smallest

    static ExponentSpectrum from_exponents(std::vector<double> lams);
};

// logs of eigenvalue moduli of the defining integer matrix (union over
// factors for products, log 2 for doubling)
ExponentSpectrum exact_exponents(const MapSpec& map);

// tangent-cocycle estimate with per-step re-orthonormalization, started
// from a seeded random orthonormal frame
ExponentSpectrum estimate_exponents(const MapSpec& map, const TorusPoint& x, long iters,
                                    std::uint64_t seed);

struct TheoremBounds {
    double lower;                  // 1/Lambda_u - 1/Lambda_s (second term dropped when no stable class)
    std::optional<double> upper;   // 1/lambda_u - 1/lambda_s, absent when not hyperbolic
};

TheoremBounds theorem_bounds(const ExponentSpectrum& spec);

}  // namespace recur

#endif
