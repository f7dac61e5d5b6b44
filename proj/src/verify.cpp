#include "recur/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "recur/csvio.hpp"
#include "recur/lyapunov.hpp"
#include "recur/numtheory.hpp"
#include "recur/parallel.hpp"
#include "recur/recurrence.hpp"
#include "recur/rng.hpp"
#include "recur/spectrum.hpp"
#include "recur/stats.hpp"

namespace recur {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

double elapsed(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rel_err(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

struct Ctx {
    bool quick;
    std::uint64_t seed;
};

// ---- criterion 1: exponent oracle agreement ----
CriterionResult c1_exponents(const Ctx& ctx) {
    auto t0 = Clock::now();
    long iters = 100000;
    MapSpec cat = catmap(), exp_map = expanding_example();

    SplitMix64 rng(ctx.seed, 1);
    auto est_cat = estimate_exponents(cat, random_torus_point(2, rng), iters, ctx.seed);
    auto ex_cat = exact_exponents(cat);
    double err_cat = std::max(std::fabs(est_cat.exponents[0] - ex_cat.exponents[0]),
                              std::fabs(est_cat.exponents[1] - ex_cat.exponents[1]));

    auto est_exp = estimate_exponents(exp_map, random_torus_point(2, rng), iters, ctx.seed + 1);
    auto ex_exp = exact_exponents(exp_map);
    double err_exp = std::max(std::fabs(est_exp.exponents[0] - ex_exp.exponents[0]),
                              std::fabs(est_exp.exponents[1] - ex_exp.exponents[1]));

    double secs = elapsed(t0);
    bool pass = err_cat < 1e-3 && err_exp < 1e-3 && secs < 1.0;
    std::ostringstream d;
    d << "catmap err=" << err_cat << " expanding err=" << err_exp << " t=" << secs << "s";
    return {"1 exponent oracle agreement", pass, d.str(), secs};
}

// ---- criteria 2-4: slope vs exponent bounds ----
CriterionResult slope_criterion(const Ctx& ctx, const std::string& name, const MapSpec& map,
                                double target, double tol, int n_points, double r_min,
                                double r_max, int grid, double time_limit, double liminf_floor,
                                double strict_lo, double strict_hi) {
    auto t0 = Clock::now();
    SplitMix64 rng(ctx.seed, std::hash<std::string>{}(name));

    std::vector<double> slopes;
    bool liminf_ok = true, strict_ok = true;
    int censored = 0;
    std::vector<TorusPoint> xs;
    for (int i = 0; i < n_points; ++i) xs.push_back(random_torus_point(map.dim(), rng));
    std::vector<SlopeSeries> results(static_cast<size_t>(n_points));
    parallel_for(n_points, [&](long i) {
        results[static_cast<size_t>(i)] =
            slope_series(map, xs[static_cast<size_t>(i)], r_min, r_max, grid, TauMethod::ExactLattice);
    });
    double min_liminf = std::numeric_limits<double>::infinity();
    double min_slope = std::numeric_limits<double>::infinity();
    for (const auto& s : results) {
        if (s.censored) {
            ++censored;
            continue;
        }
        slopes.push_back(s.slope);
        min_liminf = std::min(min_liminf, s.liminf_est);
        min_slope = std::min(min_slope, s.slope);
        // the raw window minimum is a biased-low estimate of the r->0
        // liminf (a dozen samples of a sawtooth almost surely dip); the
        // per-point regression slope estimates the same limit
        // consistently, so the floor is applied to it
        if (liminf_floor > 0.0 && s.slope < liminf_floor) liminf_ok = false;
        if (strict_lo > 0.0 && !(s.slope > strict_lo && s.slope < strict_hi)) strict_ok = false;
    }
    double med = median(slopes);
    double secs = elapsed(t0);
    bool pass = rel_err(med, target) <= tol && liminf_ok && strict_ok && censored == 0 &&
                secs < time_limit;
    std::ostringstream d;
    d << "median slope=" << med << " target=" << target << " rel=" << rel_err(med, target)
      << (liminf_floor > 0
              ? (liminf_ok ? " floor ok" : " floor FAIL") + std::string(" min per-point slope=") +
                    std::to_string(min_slope) + " floor=" + std::to_string(liminf_floor) +
                    " min window liminf_est=" + std::to_string(min_liminf)
              : "")
      << (strict_lo > 0 ? (strict_ok ? " strict ok" : " strict FAIL") : "")
      << " censored=" << censored << " t=" << secs << "s";
    return {name, pass, d.str(), secs};
}

CriterionResult c2_catmap_slope(const Ctx& ctx) {
    double target = theorem_bounds(exact_exponents(catmap())).upper.value();  // 2.078087
    if (ctx.quick)
        return slope_criterion(ctx, "2 catmap slope lower bound", catmap(), target, 0.25, 8,
                               1e-4, 1e-2, 16, 120.0, 0.75 * target, 0, 0);
    return slope_criterion(ctx, "2 catmap slope lower bound", catmap(), target, 0.25, 20, 1e-5,
                           1e-2, 24, 120.0, 0.75 * target, 0, 0);
}

CriterionResult c3_expanding_slope(const Ctx& ctx) {
    auto spec = exact_exponents(expanding_example());
    double target = 2.0 / (*spec.lambda_u_min + *spec.lambda_u_max);  // 2/log 9
    double lo = 1.0 / *spec.lambda_u_max, hi = 1.0 / *spec.lambda_u_min;
    int pts = ctx.quick ? 8 : 20;
    double rmin = ctx.quick ? 1e-4 : 1e-5;
    return slope_criterion(ctx, "3 expanding strict inequality", expanding_example(), target, 0.20,
                           pts, rmin, 1e-2, ctx.quick ? 16 : 24, 120.0, 0, lo, hi);
}

CriterionResult c4_doubling_slope(const Ctx& ctx) {
    double target = 1.0 / std::log(2.0);
    return slope_criterion(ctx, "4 doubling endomorphism bound", MapSpec::doubling(), target, 0.25,
                           ctx.quick ? 8 : 20, 1e-5, 1e-2, 20, 120.0, 0, 0, 0);
}

// ---- criterion 5: product examples ----
CriterionResult c5_products(const Ctx& ctx) {
    auto t0 = Clock::now();
    IntMatrix m2;
    m2.a = {{{3, 2}, {1, 1}}};  // exponents +-log(2+sqrt 3), larger than catmap's
    MapSpec a1 = catmap(), a2 = MapSpec::toral_auto(m2);
    MapSpec prod = MapSpec::product(a1, a2);

    long n_balls = ctx.quick ? 100 : 500;
    long samples = ctx.quick ? 1000 : 2000;
    SplitMix64 rng(ctx.seed, 5);

    // (a) sampled product tau dominates both exact factor taus
    long viol_a = 0;
    for (long i = 0; i < n_balls; ++i) {
        TorusPoint x = random_torus_point(4, rng);
        double r = 1e-3 * std::pow(10.0, rng.uniform01());  // [1e-3, 1e-2]
        long km = default_k_max(prod, r);
        auto t1 = tau_ball_exact(a1, Ball(TorusPoint(x[0], x[1]), r), km);
        auto t2 = tau_ball_exact(a2, Ball(TorusPoint(x[2], x[3]), r), km);
        auto tp = tau_ball_sample(prod, Ball(x, r), km, samples, ctx.seed + static_cast<std::uint64_t>(i));
        long factor_max = std::max(t1.tau.value_or(km + 1), t2.tau.value_or(km + 1));
        if (!tp.tau || *tp.tau < factor_max) ++viol_a;
    }

    // (a) slope of the product consistent with the smaller-exponent factor
    double target = theorem_bounds(exact_exponents(a1)).upper.value();
    std::vector<double> slopes;
    int n_slope_pts = ctx.quick ? 4 : 8;
    std::vector<TorusPoint> xs;
    for (int i = 0; i < n_slope_pts; ++i) xs.push_back(random_torus_point(4, rng));
    std::vector<SlopeSeries> sres(static_cast<size_t>(n_slope_pts));
    parallel_for(n_slope_pts, [&](long i) {
        sres[static_cast<size_t>(i)] = slope_series(prod, xs[static_cast<size_t>(i)],
                                                    ctx.quick ? 3e-4 : 1e-4, 1e-2, 16,
                                                    TauMethod::ExactLattice);
    });
    for (const auto& s : sres)
        if (!s.censored) slopes.push_back(s.slope);
    double med = median(slopes);
    bool slope_ok = rel_err(med, target) <= 0.30;

    // (b) Dirac factor at a fixed point: product tau equals factor-1 tau
    long viol_b = 0;
    for (long i = 0; i < n_balls; ++i) {
        TorusPoint x1 = random_torus_point(2, rng);
        double r = 1e-3 * std::pow(10.0, rng.uniform01());
        TorusPoint x(x1[0], x1[1], 0.0, 0.0);  // second factor sits at the fixed point
        long km = default_k_max(prod, r);
        auto t1 = tau_ball_exact(a1, Ball(x1, r), km);
        auto tp = tau_ball_exact(prod, Ball(x, r), km);
        if (t1.tau != tp.tau) ++viol_b;
    }

    double secs = elapsed(t0);
    bool pass = viol_a == 0 && viol_b == 0 && slope_ok;
    std::ostringstream d;
    d << "product-min violations=" << viol_a << "/" << n_balls << " dirac mismatches=" << viol_b << "/"
      << n_balls << " slope=" << med << " target=" << target << " t=" << secs << "s";
    return {"5 product return times", pass, d.str(), secs};
}

// ---- criterion 6: word-return law ----
CriterionResult c6_words(const Ctx& ctx) {
    auto t0 = Clock::now();
    long n_words = ctx.quick ? 2000 : 10000;
    long len = 128;
    SplitMix64 rng(ctx.seed, 6);
    double sum = 0;
    std::vector<double> ratios;
    double maxr = 0;
    bool bound_ok = true;
    for (long i = 0; i < n_words; ++i) {
        Word w;
        w.symbols.resize(static_cast<size_t>(len));
        for (long j = 0; j < len; ++j) w.symbols[static_cast<size_t>(j)] = static_cast<int>(rng.next() & 1);
        long tau = tau_word(w);
        if (tau > len) bound_ok = false;
        double ratio = static_cast<double>(tau) / static_cast<double>(len);
        sum += ratio;
        maxr = std::max(maxr, ratio);
        ratios.push_back(ratio);
    }
    double mean = sum / static_cast<double>(n_words);
    double p5 = percentile(ratios, 5.0);

    Word w0101;
    w0101.symbols = {0, 1, 0, 1};
    Word wconst;
    wconst.symbols.assign(40, 0);
    bool exact_ok = tau_word(w0101) == 2 && tau_word(wconst) == 1;

    double secs = elapsed(t0);
    bool pass = mean >= 0.95 && p5 >= 0.8 && maxr == 1.0 && bound_ok && exact_ok && secs < 5.0;
    std::ostringstream d;
    d << "mean=" << mean << " p5=" << p5 << " max=" << maxr << " t=" << secs << "s";
    return {"6 word-return law", pass, d.str(), secs};
}

// ---- criterion 7: periodic-point arithmetic ----
CriterionResult c7_periodic(const Ctx& ctx) {
    auto t0 = Clock::now();
    MapSpec cat = catmap();
    auto counts = periodic_point_counts(cat.matrix(), 4);
    bool counts_ok = counts[0] == 1 && counts[1] == 5 && counts[2] == 16 && counts[3] == 45;
    auto exp_counts = periodic_point_counts(expanding_example().matrix(), 1);
    bool exp_ok = exp_counts[0] == 1;

    bool tau_ok = true;
    int max_p = ctx.quick ? 3 : 4;
    for (int p = 1; p <= max_p && tau_ok; ++p) {
        for (const auto& pt : enumerate_periodic_points(cat.matrix(), p)) {
            TorusPoint c(pt.c[0].convert_to<double>(), pt.c[1].convert_to<double>());
            auto rt = tau_ball_exact(cat, Ball(c, 1e-3), p + 2);
            if (!rt.tau || *rt.tau > p) {
                tau_ok = false;
                break;
            }
        }
    }
    for (const auto& pt : enumerate_periodic_points(expanding_example().matrix(), 1)) {
        TorusPoint c(pt.c[0].convert_to<double>(), pt.c[1].convert_to<double>());
        auto rt = tau_ball_exact(expanding_example(), Ball(c, 1e-3), 3);
        if (!rt.tau || *rt.tau > 1) tau_ok = false;
    }

    double secs = elapsed(t0);
    bool pass = counts_ok && exp_ok && tau_ok;
    std::ostringstream d;
    d << "catmap counts " << counts[0] << "," << counts[1] << "," << counts[2] << "," << counts[3]
      << " expanding p1=" << exp_counts[0] << (tau_ok ? " tau<=p ok" : " tau>p FAIL") << " t="
      << secs << "s";
    return {"7 periodic-point arithmetic", pass, d.str(), secs};
}

// ---- criterion 8: covering certificate ----
CriterionResult c8_covering(const Ctx&) {
    auto t0 = Clock::now();
    auto cert01 = covering_time(0.01);
    bool base_ok = cert01.n_formula == 5 && cert01.n_observed > 0 && cert01.n_observed <= 5;
    bool others_ok = true;
    for (double r : {0.02, 0.005, 0.002}) {
        auto c = covering_time(r);
        if (!c.valid) others_ok = false;
    }
    // rotation-density bound along Fibonacci denominators
    double theta = (std::sqrt(5.0) - 1.0) / 2.0;
    auto conv = convergents(theta, 17);
    bool rot_ok = true;
    for (int i = 2; i <= 15; ++i) {
        long qi = conv[static_cast<size_t>(i)].q.convert_to<long>();
        long qim1 = conv[static_cast<size_t>(i - 1)].q.convert_to<long>();
        if (!(rotation_density(theta, qi + 1) < 1.0 / static_cast<double>(qim1))) rot_ok = false;
    }
    double secs = elapsed(t0);
    bool pass = base_ok && others_ok && rot_ok && secs < 10.0;
    std::ostringstream d;
    d << "r=0.01: n_formula=" << cert01.n_formula << " n_observed=" << cert01.n_observed
      << (others_ok ? " grid ok" : " grid FAIL") << (rot_ok ? " rotation bound ok" : " rotation bound FAIL") << " t="
      << secs << "s";
    return {"8 covering certificate", pass, d.str(), secs};
}

// ---- criterion 9: spectrum affinity + Young ----
CriterionResult c9_spectrum(const Ctx& ctx) {
    auto t0 = Clock::now();
    MapSpec cat = catmap();
    long N = ctx.quick ? 200000 : 1000000;
    SplitMix64 rng(ctx.seed, 9);
    TorusPoint x0 = random_torus_point(2, rng);
    Orbit orb = orbit(cat, x0, N);

    // a wide radius window tames the per-point regression noise that the
    // 90th-percentile aggregation would otherwise amplify
    double r_lo = ctx.quick ? 2e-3 : 1e-3, r_hi = 0.1;
    int n_r = ctx.quick ? 14 : 16;
    EmpiricalMeasure mu(orb, r_lo);
    std::vector<double> r_grid;
    for (int j = 0; j < n_r; ++j)
        r_grid.push_back(r_hi * std::pow(r_lo / r_hi, static_cast<double>(j) / (n_r - 1)));

    std::vector<double> qs = {-1.0, -0.75, -0.5, -0.25, 0.0};
    auto curve = spectrum_curve(cat, mu, qs, ctx.quick ? 25 : 60, r_grid, ctx.seed);
    bool enough = curve.q_values.size() == qs.size();

    auto fit = linear_fit(curve.q_values, curve.alpha_values);
    double slope_target = theorem_bounds(exact_exponents(cat)).upper.value();
    bool affine_ok = enough && rel_err(fit.intercept, 2.0) <= 0.15 &&
                     rel_err(std::fabs(fit.slope), slope_target) <= 0.25 && fit.r2 > 0.95;

    std::vector<double> scales = {0.004, 0.0063, 0.01, 0.016, 0.025, 0.04};
    double boxdim = box_dimension(mu, scales);
    double alpha0 = enough ? curve.alpha_values.back() : 0.0;  // q list ends at 0
    bool alpha0_ok = enough && rel_err(alpha0, boxdim) <= 0.15;

    double entropy = *exact_exponents(cat).lambda_u_max;  // Pesin: h(Lebesgue) = sum of positive exponents
    auto young = youngs_check(exact_exponents(cat), entropy, boxdim);
    bool young_ok = young.rel_error <= 0.10 && rel_err(young.predicted_dim, 2.0) < 1e-12;

    double secs = elapsed(t0);
    bool pass = affine_ok && alpha0_ok && young_ok && secs < 300.0;
    std::ostringstream d;
    d << "intercept=" << fit.intercept << " slope=" << fit.slope << " r2=" << fit.r2 << " alpha0="
      << alpha0 << " boxdim=" << boxdim << " t=" << secs << "s";
    return {"9 spectrum affinity", pass, d.str(), secs};
}

// ---- criterion 10: oracle cross-validation ----
CriterionResult c10_oracles(const Ctx& ctx) {
    auto t0 = Clock::now();
    MapSpec cat = catmap();
    long n_balls = ctx.quick ? 60 : 200;
    long samples = ctx.quick ? 3000 : 10000;
    SplitMix64 rng(ctx.seed, 10);
    long equal = 0, below = 0, mono_viol = 0;
    for (long i = 0; i < n_balls; ++i) {
        TorusPoint x = random_torus_point(2, rng);
        double r = 1e-4 * std::pow(100.0, rng.uniform01());  // log-uniform [1e-4, 1e-2]
        long km = default_k_max(cat, r);
        auto te = tau_ball_exact(cat, Ball(x, r), km);
        auto ts = tau_ball_sample(cat, Ball(x, r), km, samples, ctx.seed + static_cast<std::uint64_t>(i));
        if (te.tau && ts.tau) {
            if (*ts.tau == *te.tau) ++equal;
            if (*ts.tau < *te.tau) ++below;
        }
        auto te2 = tau_ball_exact(cat, Ball(x, 2.0 * r), km);
        if (te.tau && te2.tau && *te2.tau > *te.tau) ++mono_viol;
    }
    double eq_frac = static_cast<double>(equal) / static_cast<double>(n_balls);
    double secs = elapsed(t0);
    bool pass = eq_frac >= 0.99 && below == 0 && mono_viol == 0;
    std::ostringstream d;
    d << "equality=" << eq_frac << " below=" << below << " monotonicity violations=" << mono_viol
      << " t=" << secs << "s";
    return {"10 oracle cross-validation", pass, d.str(), secs};
}

// ---- criterion 11: thread-count determinism ----
std::string slurp_dir(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir)) files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::string all;
    for (const auto& f : files) {
        std::ifstream in(f, std::ios::binary);
        std::stringstream ss;
        ss << in.rdbuf();
        all += f.filename().string() + "\n" + ss.str();
    }
    return all;
}

CriterionResult c11_determinism(const Ctx& ctx) {
    auto t0 = Clock::now();
    fs::path base = fs::temp_directory_path() / "recur_det";
    fs::remove_all(base);
    fs::create_directories(base / "t1");
    fs::create_directories(base / "t8");

    ::setenv("RECUR_THREADS", "1", 1);
    write_verify_outputs((base / "t1").string(), ctx.seed);
    ::setenv("RECUR_THREADS", "8", 1);
    write_verify_outputs((base / "t8").string(), ctx.seed);
    ::unsetenv("RECUR_THREADS");

    bool pass = slurp_dir(base / "t1") == slurp_dir(base / "t8");
    double secs = elapsed(t0);
    return {"11 determinism at 1 vs 8 threads", pass,
            pass ? "byte-identical CSVs" : "outputs differ between thread counts", secs};
}

}  // namespace

void write_verify_outputs(const std::string& dir, std::uint64_t seed) {
    fs::create_directories(dir);
    MapSpec cat = catmap();

    {
        CsvWriter w;
        w.meta("config: {\"experiment\":\"exponents\",\"map\":" + cat.to_json() + ",\"seed\":" + std::to_string(seed) + "}");
        w.header({"map_id", "lambda_1", "lambda_2", "Lambda_u", "lambda_u", "lambda_s", "Lambda_s", "lower_bound", "upper_bound"});
        SplitMix64 rng(seed, 0xe);
        auto est = estimate_exponents(cat, random_torus_point(2, rng), 20000, seed);
        auto b = theorem_bounds(est);
        w.row({"catmap", CsvWriter::fmt(est.exponents[0]), CsvWriter::fmt(est.exponents[1]),
               CsvWriter::fmt(*est.lambda_u_max), CsvWriter::fmt(*est.lambda_u_min),
               CsvWriter::fmt(*est.lambda_s_max), CsvWriter::fmt(*est.lambda_s_min),
               CsvWriter::fmt(b.lower), CsvWriter::fmt(*b.upper)});
        w.write_file(dir + "/exponents.csv");
    }

    {
        // sampled slope series: exercises the parallel radius loop and the
        // per-sample RNG streams
        SplitMix64 rng(seed, 0xf);
        TorusPoint x = random_torus_point(2, rng);
        auto s = slope_series(cat, x, 1e-3, 1e-2, 12, TauMethod::MonteCarlo, 0, 2048, seed);
        CsvWriter w;
        w.meta("config: {\"experiment\":\"slope\",\"map\":" + cat.to_json() + ",\"seed\":" + std::to_string(seed) + ",\"method\":\"sample\"}");
        w.header({"r", "tau", "ratio", "method", "censored"});
        for (const auto& row : s.rows)
            w.row({CsvWriter::fmt(row.r), row.tau ? CsvWriter::fmt(*row.tau) : "NOT_FOUND",
                   row.tau ? CsvWriter::fmt(row.ratio) : "", "sample", row.tau ? "0" : "1"});
        w.write_file(dir + "/slope.csv");
    }

    {
        SplitMix64 rng(seed, 0x10);
        CsvWriter w;
        w.meta("config: {\"experiment\":\"word-return\",\"n\":64,\"words\":200,\"seed\":" + std::to_string(seed) + "}");
        w.header({"word_index", "tau", "ratio"});
        for (long i = 0; i < 200; ++i) {
            Word word;
            word.symbols.resize(64);
            for (int j = 0; j < 64; ++j) word.symbols[static_cast<size_t>(j)] = static_cast<int>(rng.next() & 1);
            long tau = tau_word(word);
            w.row({CsvWriter::fmt(i), CsvWriter::fmt(tau), CsvWriter::fmt(static_cast<double>(tau) / 64.0)});
        }
        w.write_file(dir + "/words.csv");
    }
}

std::vector<CriterionResult> run_verification(const VerifyOptions& opts, std::ostream& log) {
    Ctx ctx{opts.quick, opts.seed};
    std::vector<CriterionResult> results;
    auto run = [&](CriterionResult (*fn)(const Ctx&)) {
        auto r = fn(ctx);
        log << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " -- " << r.detail << "\n";
        log.flush();
        results.push_back(std::move(r));
    };
    run(c1_exponents);
    run(c2_catmap_slope);
    run(c3_expanding_slope);
    run(c4_doubling_slope);
    run(c5_products);
    run(c6_words);
    run(c7_periodic);
    run(c8_covering);
    run(c9_spectrum);
    run(c10_oracles);
    run(c11_determinism);

    if (!opts.out_dir.empty()) write_verify_outputs(opts.out_dir, opts.seed);
    return results;
}

}  // namespace recur
