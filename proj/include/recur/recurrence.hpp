#ifndef RECUR_RECURRENCE_HPP
#define RECUR_RECURRENCE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "recur/dynamics.hpp"
#include "recur/mapspec.hpp"
#include "recur/torus.hpp"

namespace recur {

// max-norm torus ball; radius < 1/4 so the ball lifts injectively
struct Ball {
    TorusPoint center;
    double radius;

    Ball(TorusPoint c, double r) : center(c), radius(r) {
        if (!(r > 0.0 && r < 0.25)) throw std::invalid_argument("Ball: radius must be in (0, 1/4)");
    }
    bool contains(const TorusPoint& p) const { return torus_dist(center, p) <= radius; }
};

enum class TauMethod { ExactLattice, IntervalExact, MonteCarlo, WordOverlap };

struct ReturnTimeResult {
    std::optional<long> tau;  // nullopt = NOT_FOUND within cutoff
    long cutoff = 0;
    TauMethod method = TauMethod::ExactLattice;
    bool ambiguous = false;  // some decision fell in the support-boundary margin band
    // returning point pair for the sampled methods
    std::optional<std::pair<TorusPoint, TorusPoint>> witness;
    // lattice translate certifying f^tau(B) meets B + t, exact method
    std::optional<std::array<long long, 2>> lattice_witness;
};

// least k in [1, k_max] with f^k(B) meeting B, decided exactly:
// the translate c_k = A^k x - x (mod Z^2) must admit a lattice point in
// the Minkowski sum A^k([-r,r]^2) + [-r,r]^2, tested by support-function
// half-planes; A^k is carried in exact big integers and c_k in exact
// rationals. Doubling tracks the interval image exactly; products are
// handled factorwise (a max-norm product ball is a product of balls).
ReturnTimeResult tau_ball_exact(const MapSpec& map, const Ball& ball, long k_max);

// upper-bound certificate: least k with some sampled y in B having
// f^k(y) in B; samples come from a seeded low-discrepancy lattice plus
// the center
ReturnTimeResult tau_ball_sample(const MapSpec& map, const Ball& ball, long k_max, long samples,
                                 std::uint64_t seed);

// symbolic word over {0,...,m-1}
struct Word {
    std::vector<int> symbols;
    bool boundary_flag = false;  // some orbit point fell within 1e-12 of a cell boundary
};

// minimal self-overlap shift: min{k >= 1 : symbols[k..] is a prefix},
// = length when no proper self-overlap exists. The two-sided flag keeps
// the cylinder A_{-m..n} reading; the overlap rule on the full word is
// the same.
long tau_word(const Word& word, bool two_sided = false);

enum class PartitionKind { BinaryMarkov, Grid };

// word of length n with symbol j = partition cell of f^j(x)
Word itinerary(const MapSpec& map, const TorusPoint& x, long n, PartitionKind partition,
               int grid_m = 2);

struct BowenBallSpec {
    TorusPoint center;
    long m = 0;  // backward depth
    long n = 0;  // forward depth
    double eps = 0.0;
};

// rejection-samples the Bowen ball from the eps-ball around the center,
// then proceeds as tau_ball_sample; upper-bound semantics
ReturnTimeResult tau_bowen_sample(const MapSpec& map, const BowenBallSpec& spec, long k_max,
                                  long samples, std::uint64_t seed);

struct SlopeSeries {
    struct Row {
        double r;
        std::optional<long> tau;
        double ratio;  // tau / -log r, NaN when censored
        bool ambiguous;
    };
    std::vector<Row> rows;
    TauMethod method;
    bool censored = false;       // some radius hit the search cutoff
    bool degenerate = false;     // all tau equal (e.g. center is a fixed/periodic point)
    double liminf_est = 0.0;     // min ratio over the smallest-radius half
    double limsup_est = 0.0;     // max ratio over the same window
    double slope = 0.0;          // least-squares tau vs -log r
    double r2 = 0.0;
};

// default search horizon: well past the theorem's upper bound at radius r
long default_k_max(const MapSpec& map, double r);

SlopeSeries slope_series(const MapSpec& map, const TorusPoint& x, double r_min, double r_max,
                         int grid, TauMethod method, long k_max = 0, long samples = 4096,
                         std::uint64_t seed = 1);

}  // namespace recur

#endif
