#include "recur/dynamics.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace recur {

TorusPoint apply(const MapSpec& map, const TorusPoint& x) {
    if (x.dim != map.dim()) throw std::invalid_argument("apply: dimension mismatch");
    switch (map.kind()) {
        case MapKind::Doubling1d:
            return TorusPoint(2.0 * x[0]);
        case MapKind::ToralAuto2d:
        case MapKind::ToralEndo2d: {
            const auto& m = map.matrix().a;
            return TorusPoint(static_cast<double>(m[0][0]) * x[0] + static_cast<double>(m[0][1]) * x[1],
                              static_cast<double>(m[1][0]) * x[0] + static_cast<double>(m[1][1]) * x[1]);
        }
        case MapKind::Product4d: {
            TorusPoint a(x[0], x[1]), b(x[2], x[3]);
            TorusPoint fa = apply(map.factor(0), a);
            TorusPoint fb = apply(map.factor(1), b);
            return TorusPoint(fa[0], fa[1], fb[0], fb[1]);
        }
    }
    throw std::logic_error("unreachable");
}

Orbit orbit(const MapSpec& map, const TorusPoint& x, long n) {
    if (n < 1) throw std::invalid_argument("orbit: n must be >= 1");
    Orbit o;
    o.start = x;
    o.points.reserve(static_cast<size_t>(n) + 1);
    o.points.push_back(x);
    TorusPoint cur = x;
    for (long k = 0; k < n; ++k) {
        cur = apply(map, cur);
        o.points.push_back(cur);
    }
    return o;
}

TorusPoint inverse_apply(const MapSpec& map, const TorusPoint& x) {
    if (x.dim != map.dim()) throw std::invalid_argument("inverse_apply: dimension mismatch");
    switch (map.kind()) {
        case MapKind::ToralAuto2d: {
            // adjugate over det, det = +-1 so entries stay integer
            const auto& m = map.matrix().a;
            std::int64_t d = map.matrix().det();
            double i00 = static_cast<double>(m[1][1] * d), i01 = static_cast<double>(-m[0][1] * d);
            double i10 = static_cast<double>(-m[1][0] * d), i11 = static_cast<double>(m[0][0] * d);
            return TorusPoint(i00 * x[0] + i01 * x[1], i10 * x[0] + i11 * x[1]);
        }
        case MapKind::Product4d: {
            TorusPoint a(x[0], x[1]), b(x[2], x[3]);
            TorusPoint fa = inverse_apply(map.factor(0), a);
            TorusPoint fb = inverse_apply(map.factor(1), b);
            return TorusPoint(fa[0], fa[1], fb[0], fb[1]);
        }
        default:
            throw std::domain_error("inverse_apply: map is not invertible");
    }
}

TangentFrame TangentFrame::identity(int d) {
    TangentFrame f;
    f.dim = d;
    f.basis.assign(static_cast<size_t>(d * d), 0.0);
    f.log_norms.assign(static_cast<size_t>(d), 0.0);
    for (int i = 0; i < d; ++i) f.basis[static_cast<size_t>(i * d + i)] = 1.0;
    return f;
}

TangentFrame tangent_step(const MapSpec& map, const TangentFrame& frame) {
    int d = map.dim();
    if (frame.dim != d) throw std::invalid_argument("tangent_step: dimension mismatch");
    std::vector<double> df = map.derivative();

    // w = Df * basis
    std::vector<double> w(static_cast<size_t>(d * d), 0.0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            double s = 0.0;
            for (int k = 0; k < d; ++k) s += df[static_cast<size_t>(i * d + k)] * frame.basis[static_cast<size_t>(k * d + j)];
            w[static_cast<size_t>(i * d + j)] = s;
        }

    // modified Gram-Schmidt on columns
    TangentFrame out = frame;
    for (int j = 0; j < d; ++j) {
        for (int p = 0; p < j; ++p) {
            double dot = 0.0;
            for (int i = 0; i < d; ++i) dot += w[static_cast<size_t>(i * d + j)] * out.basis[static_cast<size_t>(i * d + p)];
            for (int i = 0; i < d; ++i) w[static_cast<size_t>(i * d + j)] -= dot * out.basis[static_cast<size_t>(i * d + p)];
        }
        double nrm = 0.0;
        for (int i = 0; i < d; ++i) nrm += w[static_cast<size_t>(i * d + j)] * w[static_cast<size_t>(i * d + j)];
        nrm = std::sqrt(nrm);
        if (nrm < 1e-300) throw std::runtime_error("tangent_step: degenerate basis");
        for (int i = 0; i < d; ++i) out.basis[static_cast<size_t>(i * d + j)] = w[static_cast<size_t>(i * d + j)] / nrm;
        out.log_norms[static_cast<size_t>(j)] += std::log(nrm);
    }
    return out;
}

BigRat frac(const BigRat& v) {
    BigInt n = boost::multiprecision::numerator(v);
    BigInt d = boost::multiprecision::denominator(v);
    BigInt q = n / d;
    if (n < 0 && q * d != n) q -= 1;  // floor division
    return v - BigRat(q);
}

RatPoint rat_apply(const MapSpec& map, const RatPoint& x) {
    if (static_cast<int>(x.c.size()) != map.dim())
        throw std::invalid_argument("rat_apply: dimension mismatch");
    RatPoint y;
    switch (map.kind()) {
        case MapKind::Doubling1d:
            y.c = {frac(2 * x.c[0])};
            return y;
        case MapKind::ToralAuto2d:
        case MapKind::ToralEndo2d: {
            const auto& m = map.matrix().a;
            y.c = {frac(BigRat(m[0][0]) * x.c[0] + BigRat(m[0][1]) * x.c[1]),
                   frac(BigRat(m[1][0]) * x.c[0] + BigRat(m[1][1]) * x.c[1])};
            return y;
        }
        case MapKind::Product4d: {
            RatPoint a, b;
            a.c = {x.c[0], x.c[1]};
            b.c = {x.c[2], x.c[3]};
            RatPoint fa = rat_apply(map.factor(0), a);
            RatPoint fb = rat_apply(map.factor(1), b);
            y.c = {fa.c[0], fa.c[1], fb.c[0], fb.c[1]};
            return y;
        }
    }
    throw std::logic_error("unreachable");
}

long rational_period(const MapSpec& map, const RatPoint& x, long p_max) {
    std::map<std::vector<BigRat>, long> seen;
    RatPoint cur = x;
    for (long k = 0; k <= 2 * p_max; ++k) {
        auto it = seen.find(cur.c);
        if (it != seen.end()) return k - it->second;
        seen.emplace(cur.c, k);
        cur = rat_apply(map, cur);
    }
    return -1;  // no cycle of length <= p_max found
}

}  // namespace recur
