#include "recur/numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "recur/recurrence.hpp"
#include "recur/rng.hpp"

namespace recur {

std::vector<Convergent> convergents(double theta, int count) {
    if (!(theta > 0.0 && theta < 1.0)) throw std::invalid_argument("convergents: theta must be in (0,1)");
    if (count < 1 || count > 40) throw std::invalid_argument("convergents: count must be in [1,40]");

    std::vector<Convergent> out;
    out.push_back({0, 1, 0});  // a0 = 0 since theta in (0,1)
    BigInt pm1 = 0, pm2 = 1, qm1 = 1, qm2 = 0;
    double t = theta;
    for (int i = 1; i < count; ++i) {
        if (t < 1e-15) throw std::invalid_argument("convergents: rational input detected (remainder underflow)");
        double inv = 1.0 / t;
        double af = std::floor(inv);
        BigInt a = static_cast<long long>(af);
        t = inv - af;
        BigInt p = a * pm1 + pm2;
        BigInt q = a * qm1 + qm2;
        out.push_back({p, q, i});
        pm2 = pm1;
        pm1 = p;
        qm2 = qm1;
        qm1 = q;
    }
    return out;
}

std::vector<double> rotation_gaps(double theta, long k_max) {
    if (k_max < 1) throw std::invalid_argument("rotation_gaps: k_max must be >= 1");
    std::vector<double> pts(static_cast<size_t>(k_max));
    double cur = 0.0;
    for (long k = 0; k < k_max; ++k) {
        pts[static_cast<size_t>(k)] = cur;
        cur += theta;
        if (cur >= 1.0) cur -= 1.0;
    }
    std::sort(pts.begin(), pts.end());
    std::vector<double> gaps;
    gaps.reserve(pts.size());
    for (size_t i = 1; i < pts.size(); ++i) gaps.push_back(pts[i] - pts[i - 1]);
    gaps.push_back(1.0 - pts.back() + pts.front());  // wrap-around gap
    std::sort(gaps.begin(), gaps.end());
    return gaps;
}

double rotation_density(double theta, long k_max) {
    return rotation_gaps(theta, k_max).back() / 2.0;
}

namespace {
// constants of the expanding example [[6,3],[3,3]]
const double kTheta = (std::sqrt(5.0) - 1.0) / 2.0;
const double kC = 1.0 / std::sqrt(1.0 + kTheta * kTheta);
const double kLamU = std::log((9.0 - 3.0 * std::sqrt(5.0)) / 2.0);
const double kLamUU = std::log((9.0 + 3.0 * std::sqrt(5.0)) / 2.0);
}  // namespace

CoveringCertificate covering_time(double r) {
    if (!(r > 0.0 && r < 0.05)) throw std::invalid_argument("covering_time: r must be in (0, 0.05)");
    CoveringCertificate cert{};
    cert.r = r;
    cert.n_formula = static_cast<long>(std::ceil((-2.0 * std::log(r) + std::log(4.0 * kC / 3.0)) / (kLamUU + kLamU)));

    // observed covering: the strip A^n L(r) wraps floor(e^{Lambda n} r)
    // times; the fiber points of the strong unstable piece must be
    // c e^{lambda n} r dense on the circle
    cert.n_observed = -1;
    for (long n = 1; n <= cert.n_formula + 16; ++n) {
        double wraps_f = std::floor(std::exp(kLamUU * static_cast<double>(n)) * r);
        if (wraps_f < 1.0) continue;
        long wraps = static_cast<long>(std::min(wraps_f, 5e7));
        double required = kC * std::exp(kLamU * static_cast<double>(n)) * r;
        double achieved = rotation_density(kTheta, wraps);
        if (achieved <= required) {
            cert.n_observed = n;
            cert.density_gap = required - achieved;
            break;
        }
    }
    cert.valid = cert.n_observed > 0 && cert.n_observed <= cert.n_formula;
    return cert;
}

BigMat int_matrix_power(const IntMatrix& m, int p) {
    BigMat r{1, 0, 0, 1};
    for (int i = 0; i < p; ++i) {
        BigMat n;
        n.a00 = r.a00 * m.a[0][0] + r.a01 * m.a[1][0];
        n.a01 = r.a00 * m.a[0][1] + r.a01 * m.a[1][1];
        n.a10 = r.a10 * m.a[0][0] + r.a11 * m.a[1][0];
        n.a11 = r.a10 * m.a[0][1] + r.a11 * m.a[1][1];
        r = n;
    }
    return r;
}

std::vector<BigInt> periodic_point_counts(const IntMatrix& matrix, int p_max) {
    if (p_max < 1 || p_max > 64) throw std::invalid_argument("periodic_point_counts: p_max must be in [1,64]");
    std::vector<BigInt> counts;
    BigMat m{1, 0, 0, 1};
    for (int p = 1; p <= p_max; ++p) {
        BigMat n;
        n.a00 = m.a00 * matrix.a[0][0] + m.a01 * matrix.a[1][0];
        n.a01 = m.a00 * matrix.a[0][1] + m.a01 * matrix.a[1][1];
        n.a10 = m.a10 * matrix.a[0][0] + m.a11 * matrix.a[1][0];
        n.a11 = m.a10 * matrix.a[0][1] + m.a11 * matrix.a[1][1];
        m = n;
        BigMat shifted{m.a00 - 1, m.a01, m.a10, m.a11 - 1};
        counts.push_back(abs(shifted.det()));
    }
    return counts;
}

std::vector<RatPoint> enumerate_periodic_points(const IntMatrix& matrix, int p) {
    BigMat mp = int_matrix_power(matrix, p);
    BigMat m{mp.a00 - 1, mp.a01, mp.a10, mp.a11 - 1};
    BigInt det = m.det();
    if (det == 0) throw std::domain_error("enumerate_periodic_points: A^p - I is singular");
    BigInt d = abs(det);
    if (d > 100000) throw std::invalid_argument("enumerate_periodic_points: too many points to enumerate");

    // solutions of (A^p - I) x = 0 mod Z^2 are adj(M) t / det over residues t
    std::set<std::pair<BigRat, BigRat>> uniq;
    for (BigInt t0 = 0; t0 < d; ++t0)
        for (BigInt t1 = 0; t1 < d; ++t1) {
            BigRat x0 = frac(BigRat(m.a11 * t0 - m.a01 * t1) / det);
            BigRat x1 = frac(BigRat(-m.a10 * t0 + m.a00 * t1) / det);
            uniq.emplace(x0, x1);
        }
    std::vector<RatPoint> pts;
    for (const auto& [x0, x1] : uniq) {
        RatPoint rp;
        rp.c = {x0, x1};
        pts.push_back(rp);
    }
    return pts;
}

std::vector<BorelCantelliRow> borel_cantelli_lower(const MapSpec& map, double a, long n_max,
                                                   long trials, std::uint64_t seed) {
    if (map.kind() != MapKind::ToralEndo2d) throw std::invalid_argument("borel_cantelli_lower: map must be toral_endo_2d");
    double det = std::fabs(static_cast<double>(map.matrix().det()));
    if (!(a > 0.0 && a < 1.0 / std::sqrt(det)))
        throw std::invalid_argument("borel_cantelli_lower: need a in (0, det(A)^{-1/2})");

    // c = 1 - ||A^{-1}||, Euclidean operator norm = 1 / sigma_min(A)
    const auto& mm = map.matrix().a;
    double g00 = 0, g01 = 0, g11 = 0;  // A^T A
    for (int i = 0; i < 2; ++i) {
        g00 += static_cast<double>(mm[i][0]) * static_cast<double>(mm[i][0]);
        g01 += static_cast<double>(mm[i][0]) * static_cast<double>(mm[i][1]);
        g11 += static_cast<double>(mm[i][1]) * static_cast<double>(mm[i][1]);
    }
    double tr = g00 + g11, dd = g00 * g11 - g01 * g01;
    double sig_min = std::sqrt((tr - std::sqrt(tr * tr - 4.0 * dd)) / 2.0);
    double c = 1.0 - 1.0 / sig_min;
    double pref = (1.0 + 2.0 / c) * (1.0 + 2.0 / c) * det / (det - 1.0);

    std::vector<BorelCantelliRow> rows;
    for (long n = 1; n <= n_max; ++n) {
        double radius = std::min(std::pow(a, static_cast<double>(n)), 0.2499);
        long hits = 0;
        for (long t = 0; t < trials; ++t) {
            SplitMix64 rng(seed, static_cast<std::uint64_t>(t));
            TorusPoint x = random_torus_point(2, rng);
            // sampled tau is an upper-bound certificate, so a hit is conclusive
            auto rt = tau_ball_sample(map, Ball(x, radius), n, 256, seed + static_cast<std::uint64_t>(t));
            if (rt.tau && *rt.tau <= n) ++hits;
        }
        rows.push_back({n, static_cast<double>(hits) / static_cast<double>(trials),
                        pref * std::pow(a * a * det, static_cast<double>(n))});
    }
    return rows;
}

}  // namespace recur
