#include "recur/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "recur/parallel.hpp"
#include "recur/rng.hpp"
#include "recur/stats.hpp"

namespace recur {

EmpiricalMeasure::EmpiricalMeasure(const Orbit& orbit, double cell_size) {
    if (orbit.points.empty()) throw std::invalid_argument("EmpiricalMeasure: empty orbit");
    dim_ = orbit.start.dim;
    n_ = static_cast<long>(orbit.points.size());
    if (!(cell_size > 0.0 && cell_size <= 1.0)) throw std::invalid_argument("EmpiricalMeasure: bad cell size");
    cells_per_dim_ = std::max<long>(1, static_cast<long>(std::floor(1.0 / cell_size)));
    cell_ = 1.0 / static_cast<double>(cells_per_dim_);

    pts_.resize(static_cast<size_t>(n_) * static_cast<size_t>(dim_));
    for (long i = 0; i < n_; ++i)
        for (int d = 0; d < dim_; ++d) pts_[static_cast<size_t>(i * dim_ + d)] = orbit.points[static_cast<size_t>(i)][d];

    // group point indices by cell key (sparse CSR over sorted keys)
    std::vector<std::pair<std::uint64_t, std::uint32_t>> tagged(static_cast<size_t>(n_));
    for (long i = 0; i < n_; ++i) tagged[static_cast<size_t>(i)] = {cell_key(point(i)), static_cast<std::uint32_t>(i)};
    std::sort(tagged.begin(), tagged.end());
    order_.resize(static_cast<size_t>(n_));
    for (long i = 0; i < n_; ++i) {
        order_[static_cast<size_t>(i)] = tagged[static_cast<size_t>(i)].second;
        if (i == 0 || tagged[static_cast<size_t>(i)].first != tagged[static_cast<size_t>(i - 1)].first) {
            keys_.push_back(tagged[static_cast<size_t>(i)].first);
            start_.push_back(static_cast<std::uint32_t>(i));
        }
    }
    start_.push_back(static_cast<std::uint32_t>(n_));
}

TorusPoint EmpiricalMeasure::point(long i) const {
    const double* p = &pts_[static_cast<size_t>(i * dim_)];
    if (dim_ == 1) return TorusPoint(p[0]);
    if (dim_ == 2) return TorusPoint(p[0], p[1]);
    return TorusPoint(p[0], p[1], p[2], p[3]);
}

std::uint64_t EmpiricalMeasure::cell_key(const TorusPoint& p) const {
    std::uint64_t key = 0;
    for (int d = 0; d < dim_; ++d) {
        long c = static_cast<long>(std::floor(p[d] / cell_));
        if (c >= cells_per_dim_) c = cells_per_dim_ - 1;
        key = key * static_cast<std::uint64_t>(cells_per_dim_) + static_cast<std::uint64_t>(c);
    }
    return key;
}

long EmpiricalMeasure::ball_count_brute(const TorusPoint& center, double r) const {
    long cnt = 0;
    for (long i = 0; i < n_; ++i)
        if (torus_dist(point(i), center) <= r) ++cnt;
    return cnt;
}

long EmpiricalMeasure::ball_count(const TorusPoint& center, double r) const {
    if (center.dim != dim_) throw std::invalid_argument("ball_count: dimension mismatch");
    // candidate cell ranges per dimension (with wrap)
    std::array<std::vector<long>, 4> cells;
    for (int d = 0; d < dim_; ++d) {
        long lo = static_cast<long>(std::floor((center[d] - r) / cell_));
        long hi = static_cast<long>(std::floor((center[d] + r) / cell_));
        if (hi - lo + 1 >= cells_per_dim_) {
            lo = 0;
            hi = cells_per_dim_ - 1;
        }
        for (long c = lo; c <= hi; ++c) cells[static_cast<size_t>(d)].push_back(((c % cells_per_dim_) + cells_per_dim_) % cells_per_dim_);
        auto& v = cells[static_cast<size_t>(d)];
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }

    long cnt = 0;
    std::array<size_t, 4> idx{};
    while (true) {
        std::uint64_t key = 0;
        for (int d = 0; d < dim_; ++d) key = key * static_cast<std::uint64_t>(cells_per_dim_) + static_cast<std::uint64_t>(cells[static_cast<size_t>(d)][idx[static_cast<size_t>(d)]]);
        auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
        if (it != keys_.end() && *it == key) {
            size_t b = static_cast<size_t>(it - keys_.begin());
            for (std::uint32_t j = start_[b]; j < start_[b + 1]; ++j)
                if (torus_dist(point(static_cast<long>(order_[j])), center) <= r) ++cnt;
        }
        // advance the multi-index
        int d = dim_ - 1;
        while (d >= 0) {
            if (++idx[static_cast<size_t>(d)] < cells[static_cast<size_t>(d)].size()) break;
            idx[static_cast<size_t>(d)] = 0;
            --d;
        }
        if (d < 0) break;
    }
    return cnt;
}

double EmpiricalMeasure::ball_mass(const Ball& ball) const {
    if (n_ < 1000) throw std::invalid_argument("ball_mass: measure needs >= 10^3 orbit points");
    return static_cast<double>(ball_count(ball.center, ball.radius)) / static_cast<double>(n_);
}

RadiusProfile radius_profile(const MapSpec& map, const EmpiricalMeasure& measure,
                             const TorusPoint& x, const std::vector<double>& r_grid, long k_max,
                             std::uint64_t seed) {
    RadiusProfile prof;
    for (size_t j = 0; j < r_grid.size(); ++j) {
        double r = r_grid[j];
        long cnt = measure.ball_count(x, r);
        if (cnt == 0) {
            ++prof.dropped_zero_mass;
            continue;
        }
        long km = k_max > 0 ? k_max : default_k_max(map, r);
        ReturnTimeResult rt = map.dim() <= 2 || map.kind() == MapKind::Product4d
                                  ? tau_ball_exact(map, Ball(x, r), km)
                                  : tau_ball_sample(map, Ball(x, r), km, 4096, seed + j);
        if (!rt.tau) {
            prof.censored = true;
            continue;
        }
        prof.log_r.push_back(std::log(r));
        prof.log_mass.push_back(std::log(static_cast<double>(cnt) / static_cast<double>(measure.size())));
        prof.tau.push_back(*rt.tau);
    }
    return prof;
}

namespace {

double dim_from_profile(const RadiusProfile& prof, double q) {
    if (prof.log_r.size() < 4) throw std::runtime_error("pointwise_dim: fewer than 4 usable radii");
    std::vector<double> ys(prof.log_r.size());
    for (size_t j = 0; j < ys.size(); ++j) ys[j] = prof.log_mass[j] + q * static_cast<double>(prof.tau[j]);
    return linear_fit(prof.log_r, ys).slope;
}

}  // namespace

double pointwise_dim(const MapSpec& map, const EmpiricalMeasure& measure, const TorusPoint& x,
                     double q, const std::vector<double>& r_grid, long k_max,
                     std::uint64_t seed) {
    return dim_from_profile(radius_profile(map, measure, x, r_grid, k_max, seed), q);
}

SpectrumCurve spectrum_curve(const MapSpec& map, const EmpiricalMeasure& measure,
                             const std::vector<double>& q_list, long sample_points,
                             const std::vector<double>& r_grid, std::uint64_t seed) {
    if (sample_points < 20) throw std::invalid_argument("spectrum_curve: need >= 20 sample points");

    // mu-distributed sample: draw start indices from the orbit itself
    std::vector<TorusPoint> xs(static_cast<size_t>(sample_points));
    SplitMix64 rng(seed, 0xa1fa);
    for (long i = 0; i < sample_points; ++i)
        xs[static_cast<size_t>(i)] = measure.point(static_cast<long>(rng.next() % static_cast<std::uint64_t>(measure.size())));

    std::vector<std::optional<RadiusProfile>> profiles(static_cast<size_t>(sample_points));
    parallel_for(sample_points, [&](long i) {
        try {
            profiles[static_cast<size_t>(i)] = radius_profile(map, measure, xs[static_cast<size_t>(i)], r_grid, 0, seed + static_cast<std::uint64_t>(i));
        } catch (const std::exception&) {
            profiles[static_cast<size_t>(i)] = std::nullopt;
        }
    });

    SpectrumCurve curve;
    for (double q : q_list) {
        std::vector<double> dvals, r2s;
        for (const auto& prof : profiles) {
            if (!prof || prof->log_r.size() < 4) continue;
            std::vector<double> ys(prof->log_r.size());
            for (size_t j = 0; j < ys.size(); ++j) ys[j] = prof->log_mass[j] + q * static_cast<double>(prof->tau[j]);
            auto fit = linear_fit(prof->log_r, ys);
            dvals.push_back(fit.slope);
            r2s.push_back(fit.r2);
        }
        if (dvals.size() * 2 < static_cast<size_t>(sample_points)) continue;  // q dropped: >50% failures
        curve.q_values.push_back(q);
        // robust ess-sup proxy: finite-sample max is noise-dominated
        curve.alpha_values.push_back(percentile(dvals, curve.percentile_level));
        curve.median_r2.push_back(median(r2s));
        curve.n_points.push_back(static_cast<long>(dvals.size()));
    }
    return curve;
}

double box_dimension(const EmpiricalMeasure& measure, const std::vector<double>& scales) {
    if (scales.size() < 5) throw std::invalid_argument("box_dimension: need at least 5 scales");
    std::vector<double> xs, ys;
    for (double s : scales) {
        if (!(s > 0.0 && s < 1.0)) throw std::invalid_argument("box_dimension: scale out of (0,1)");
        long m = std::max<long>(1, static_cast<long>(std::floor(1.0 / s)));
        std::vector<std::uint64_t> keys(static_cast<size_t>(measure.size()));
        for (long i = 0; i < measure.size(); ++i) {
            TorusPoint p = measure.point(i);
            std::uint64_t key = 0;
            for (int d = 0; d < measure.dim(); ++d) {
                long c = std::min<long>(static_cast<long>(std::floor(p[d] * static_cast<double>(m))), m - 1);
                key = key * static_cast<std::uint64_t>(m) + static_cast<std::uint64_t>(c);
            }
            keys[static_cast<size_t>(i)] = key;
        }
        std::sort(keys.begin(), keys.end());
        long occupied = static_cast<long>(std::unique(keys.begin(), keys.end()) - keys.begin());
        if (occupied >= (9 * measure.size()) / 10) continue;  // saturated: one box per point
        xs.push_back(-std::log(s));
        ys.push_back(std::log(static_cast<double>(occupied)));
    }
    if (xs.size() < 2) throw std::runtime_error("box_dimension: all scales saturated");
    return linear_fit(xs, ys).slope;
}

YoungsReport youngs_check(const ExponentSpectrum& spec, double entropy, double dim_est) {
    if (spec.exponents.size() != 2 || !spec.lambda_u_min || !spec.lambda_s_max)
        throw std::domain_error("youngs_check: needs a 2-D hyperbolic spectrum");
    YoungsReport rep{};
    rep.entropy = entropy;
    rep.predicted_dim = entropy * (1.0 / *spec.lambda_u_min - 1.0 / *spec.lambda_s_max);
    rep.estimate = dim_est;
    rep.rel_error = rep.predicted_dim == 0.0 ? std::fabs(dim_est)
                                             : std::fabs(dim_est - rep.predicted_dim) / std::fabs(rep.predicted_dim);
    return rep;
}

}  // namespace recur
