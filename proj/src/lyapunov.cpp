#include "recur/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "recur/rng.hpp"

namespace recur {

namespace {
constexpr double kZeroTol = 1e-9;  // |lambda| below this counts as zero
}

ExponentSpectrum ExponentSpectrum::from_exponents(std::vector<double> lams) {
    std::sort(lams.begin(), lams.end());
    ExponentSpectrum s;
    s.exponents = std::move(lams);
    for (double l : s.exponents) {
        if (l > kZeroTol) {
            if (!s.lambda_u_min) s.lambda_u_min = l;
            s.lambda_u_max = l;
        } else if (l < -kZeroTol) {
            if (!s.lambda_s_min) s.lambda_s_min = l;
            s.lambda_s_max = l;
        }
    }
    return s;
}

ExponentSpectrum exact_exponents(const MapSpec& map) {
    std::vector<double> lams;
    switch (map.kind()) {
        case MapKind::Doubling1d:
            lams = {std::log(2.0)};
            break;
        case MapKind::ToralAuto2d:
        case MapKind::ToralEndo2d: {
            auto mod = map.matrix().eigen_moduli();
            lams = {std::log(mod[0]), std::log(mod[1])};
            break;
        }
        case MapKind::Product4d: {
            for (int i = 0; i < 2; ++i) {
                auto f = exact_exponents(map.factor(i));
                lams.insert(lams.end(), f.exponents.begin(), f.exponents.end());
            }
            break;
        }
    }
    return ExponentSpectrum::from_exponents(std::move(lams));
}

ExponentSpectrum estimate_exponents(const MapSpec& map, const TorusPoint& x, long iters,
                                    std::uint64_t seed) {
    if (iters < 1000) throw std::invalid_argument("estimate_exponents: iters must be >= 1000");
    if (x.dim != map.dim()) throw std::invalid_argument("estimate_exponents: dimension mismatch");
    int d = map.dim();

    // random frame: orthonormalize a random matrix through one tangent_step
    // of Gram-Schmidt -- seed only the initial directions
    TangentFrame frame = TangentFrame::identity(d);
    SplitMix64 rng(seed, 0x11a9);
    for (auto& b : frame.basis) b = 2.0 * rng.uniform01() - 1.0;
    {
        // orthonormalize the random basis in place via one step with zero stretch
        std::vector<double> w = frame.basis;
        for (int j = 0; j < d; ++j) {
            for (int p = 0; p < j; ++p) {
                double dot = 0.0;
                for (int i = 0; i < d; ++i) dot += w[static_cast<size_t>(i * d + j)] * frame.basis[static_cast<size_t>(i * d + p)];
                for (int i = 0; i < d; ++i) w[static_cast<size_t>(i * d + j)] -= dot * frame.basis[static_cast<size_t>(i * d + p)];
            }
            double nrm = 0.0;
            for (int i = 0; i < d; ++i) nrm += w[static_cast<size_t>(i * d + j)] * w[static_cast<size_t>(i * d + j)];
            nrm = std::sqrt(nrm);
            if (nrm < 1e-12) {  // unlucky draw, fall back to identity column
                for (int i = 0; i < d; ++i) w[static_cast<size_t>(i * d + j)] = i == j ? 1.0 : 0.0;
                nrm = 1.0;
            }
            for (int i = 0; i < d; ++i) frame.basis[static_cast<size_t>(i * d + j)] = w[static_cast<size_t>(i * d + j)] / nrm;
        }
    }

    for (long k = 0; k < iters; ++k) frame = tangent_step(map, frame);

    std::vector<double> lams(frame.log_norms);
    for (auto& l : lams) l /= static_cast<double>(iters);
    return ExponentSpectrum::from_exponents(std::move(lams));
}

TheoremBounds theorem_bounds(const ExponentSpectrum& spec) {
    if (!spec.lambda_u_max) throw std::domain_error("theorem_bounds: no positive exponent");
    TheoremBounds b{};
    b.lower = 1.0 / *spec.lambda_u_max;
    if (spec.lambda_s_min) b.lower -= 1.0 / *spec.lambda_s_min;

    // hyperbolic means no zero exponents
    bool hyperbolic = true;
    for (double l : spec.exponents)
        if (std::fabs(l) <= kZeroTol) hyperbolic = false;
    if (hyperbolic) {
        double u = 1.0 / *spec.lambda_u_min;
        if (spec.lambda_s_max) u -= 1.0 / *spec.lambda_s_max;
        b.upper = u;
    }
    return b;
}

}  // namespace recur
