#ifndef RECUR_STATS_HPP
#define RECUR_STATS_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace recur {

struct LinFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    long n = 0;
};

inline LinFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("linear_fit: need >= 2 paired samples");
    long n = static_cast<long>(x.size());
    double sx = 0, sy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
    }
    double mx = sx / static_cast<double>(n), my = sy / static_cast<double>(n);
    double sxx = 0, sxy = 0, syy = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mx, dy = y[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    LinFit f;
    f.n = n;
    if (sxx == 0.0) throw std::invalid_argument("linear_fit: degenerate abscissae");
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    f.r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    return f;
}

// percentile with linear interpolation, p in [0,100]
inline double percentile(std::vector<double> v, double p) {
    if (v.empty()) throw std::invalid_argument("percentile: empty sample");
    std::sort(v.begin(), v.end());
    double idx = p / 100.0 * static_cast<double>(v.size() - 1);
    size_t lo = static_cast<size_t>(std::floor(idx));
    size_t hi = static_cast<size_t>(std::ceil(idx));
    double w = idx - static_cast<double>(lo);
    return v[lo] * (1.0 - w) + v[hi] * w;
}

inline double median(std::vector<double> v) { return percentile(std::move(v), 50.0); }

}  // namespace recur

#endif
