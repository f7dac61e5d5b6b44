#ifndef RECUR_SPECTRUM_HPP
#define RECUR_SPECTRUM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "recur/dynamics.hpp"
#include "recur/lyapunov.hpp"
#include "recur/recurrence.hpp"

namespace recur {

// Empirical invariant measure carried by an orbit, with a uniform-grid
// bucket index. Ball masses are exact visit counts; the index is an
// accelerator, never an approximation.
class EmpiricalMeasure {
  public:
    EmpiricalMeasure(const Orbit& orbit, double cell_size);

    long size() const { return n_; }
    int dim() const { return dim_; }
    double cell_size() const { return cell_; }
    const std::vector<double>& flat_points() const { return pts_; }

    long ball_count(const TorusPoint& center, double r) const;
    long ball_count_brute(const TorusPoint& center, double r) const;
    double ball_mass(const Ball& ball) const;

    TorusPoint point(long i) const;

  private:
    int dim_;
    long n_;
    double cell_;
    long cells_per_dim_;
    std::vector<double> pts_;              // n * dim, row-major
    std::vector<std::uint64_t> keys_;      // sorted unique cell keys
    std::vector<std::uint32_t> start_;     // CSR offsets into order_
    std::vector<std::uint32_t> order_;     // point indices grouped by cell
    std::uint64_t cell_key(const TorusPoint& p) const;
};

struct RadiusProfile {
    // per usable radius: log r, log mass, tau; shared by every q
    std::vector<double> log_r, log_mass;
    std::vector<long> tau;
    int dropped_zero_mass = 0;
    bool censored = false;
};

RadiusProfile radius_profile(const MapSpec& map, const EmpiricalMeasure& measure,
                             const TorusPoint& x, const std::vector<double>& r_grid, long k_max,
                             std::uint64_t seed);

// regression estimate of d_{mu,q}: slope of log mu(B(x,r)) + q tau(B(x,r))
// against log r; the inner infimum over y in B(x,r) is evaluated at y = x
double pointwise_dim(const MapSpec& map, const EmpiricalMeasure& measure, const TorusPoint& x,
                     double q, const std::vector<double>& r_grid, long k_max = 0,
                     std::uint64_t seed = 1);

struct SpectrumCurve {
    std::vector<double> q_values;
    std::vector<double> alpha_values;
    std::vector<double> median_r2;   // per q, median regression R^2 over points
    std::vector<long> n_points;      // per q, usable sample size
    // approximation flags recorded in output metadata
    double percentile_level = 90.0;
    bool inf_at_center = true;
};

SpectrumCurve spectrum_curve(const MapSpec& map, const EmpiricalMeasure& measure,
                             const std::vector<double>& q_list, long sample_points,
                             const std::vector<double>& r_grid, std::uint64_t seed = 1);

// box counting on the orbit: slope of log(#occupied boxes) vs -log(scale)
double box_dimension(const EmpiricalMeasure& measure, const std::vector<double>& scales);

struct YoungsReport {
    double entropy;
    double predicted_dim;  // h (1/lambda_u - 1/lambda_s)
    double estimate;
    double rel_error;
};

YoungsReport youngs_check(const ExponentSpectrum& spec, double entropy, double dim_est);

}  // namespace recur

#endif
