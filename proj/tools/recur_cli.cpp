#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "recur/csvio.hpp"
#include "recur/lyapunov.hpp"
#include "recur/numtheory.hpp"
#include "recur/recurrence.hpp"
#include "recur/rng.hpp"
#include "recur/spectrum.hpp"
#include "recur/svg.hpp"
#include "recur/verify.hpp"

namespace fs = std::filesystem;
using namespace recur;

namespace {

TorusPoint parse_point(const std::string& s) {
    std::vector<double> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stod(tok));
    if (v.size() == 1) return TorusPoint(v[0]);
    if (v.size() == 2) return TorusPoint(v[0], v[1]);
    if (v.size() == 4) return TorusPoint(v[0], v[1], v[2], v[3]);
    throw CLI::ValidationError("--x must have 1, 2 or 4 comma-separated coordinates");
}

std::string config_line(const std::string& experiment, const std::string& extra) {
    return "config: {\"experiment\":\"" + experiment + "\"" + (extra.empty() ? "" : "," + extra) + "}";
}

std::string out_path(const std::string& dir, const std::string& name) {
    if (!dir.empty()) fs::create_directories(dir);
    return dir.empty() ? name : dir + "/" + name;
}

TauMethod parse_method(const std::string& m) {
    return m == "sample" ? TauMethod::MonteCarlo : TauMethod::ExactLattice;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poincare return times, Lyapunov exponents and the recurrence spectrum for linear toral maps"};
    app.require_subcommand(1);

    std::string map_file, out_dir, x_str = "0.337,0.521", method = "exact", q_str = "-1,-0.75,-0.5,-0.25,0";
    std::uint64_t seed = 1;
    bool plot = false, quick = false, full = false;
    double rmin = 1e-5, rmax = 1e-2, radius = 1e-3, eps = 0.05;
    long iters = 100000, kmax = 0, samples = 4096, orbit_n = 1000000, word_len = 128, n_words = 10000;
    long bowen_m = 0, bowen_n = 0, points = 40;
    int grid = 24, pmax = 10;
    std::vector<double> cover_r = {0.02, 0.01, 0.005, 0.002};

    auto add_common = [&](CLI::App* sub, bool needs_map) {
        if (needs_map) sub->add_option("--map", map_file, "map spec JSON file")->required();
        sub->add_option("--seed", seed, "RNG seed");
        sub->add_option("--out", out_dir, "output directory");
        sub->add_flag("--plot", plot, "also write an SVG plot");
    };

    auto* c_exp = app.add_subcommand("exponents", "Lyapunov spectrum: cocycle estimate vs closed form");
    add_common(c_exp, true);
    c_exp->add_option("--iters", iters, "cocycle iterations");

    auto* c_rt = app.add_subcommand("return-time", "tau of one ball");
    add_common(c_rt, true);
    c_rt->add_option("--x", x_str, "ball center");
    c_rt->add_option("--r", radius, "ball radius");
    c_rt->add_option("--method", method, "exact|sample");
    c_rt->add_option("--kmax", kmax, "search horizon (0 = auto)");
    c_rt->add_option("--samples", samples, "sample count");

    auto* c_slope = app.add_subcommand("slope", "tau(B(x,r)) / -log r over a radius grid");
    add_common(c_slope, true);
    c_slope->add_option("--x", x_str, "center point");
    c_slope->add_option("--rmin", rmin, "smallest radius");
    c_slope->add_option("--rmax", rmax, "largest radius");
    c_slope->add_option("--grid", grid, "number of radii");
    c_slope->add_option("--method", method, "exact|sample");
    c_slope->add_option("--kmax", kmax, "search horizon (0 = auto)");
    c_slope->add_option("--samples", samples, "sample count");

    auto* c_spec = app.add_subcommand("spectrum", "recurrence-dimension spectrum alpha(q)");
    add_common(c_spec, true);
    c_spec->add_option("--n", orbit_n, "orbit length");
    c_spec->add_option("--q", q_str, "comma-separated q values");
    c_spec->add_option("--rmin", rmin, "smallest radius");
    c_spec->add_option("--rmax", rmax, "largest radius");
    c_spec->add_option("--grid", grid, "number of radii");
    c_spec->add_option("--points", points, "mu-distributed sample points");

    auto* c_cov = app.add_subcommand("covering", "covering-time certificates for the expanding example");
    add_common(c_cov, false);
    c_cov->add_option("--r", cover_r, "radii");

    auto* c_per = app.add_subcommand("periodic", "|det(A^p - I)| periodic-point counts");
    add_common(c_per, true);
    c_per->add_option("--pmax", pmax, "largest period");

    auto* c_word = app.add_subcommand("word-return", "cylinder return times via word self-overlap");
    add_common(c_word, false);
    c_word->add_option("--n", word_len, "word length");
    c_word->add_option("--words", n_words, "number of random words");

    auto* c_bowen = app.add_subcommand("bowen", "sampled tau of a Bowen ball");
    add_common(c_bowen, true);
    c_bowen->add_option("--x", x_str, "center point");
    c_bowen->add_option("--m", bowen_m, "backward depth");
    c_bowen->add_option("--fwd", bowen_n, "forward depth");
    c_bowen->add_option("--eps", eps, "Bowen radius");
    c_bowen->add_option("--kmax", kmax, "search horizon (0 = auto)");
    c_bowen->add_option("--samples", samples, "sample count");

    auto* c_ver = app.add_subcommand("verify", "run the self-verification suite");
    c_ver->add_option("--seed", seed, "RNG seed");
    c_ver->add_option("--out", out_dir, "output directory");
    c_ver->add_flag("--quick", quick, "reduced tier (<= 60 s)");
    c_ver->add_flag("--full", full, "full tier");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_exp->parsed()) {
            MapSpec map = MapSpec::from_json_file(map_file);
            if (iters < 1000) throw std::invalid_argument("--iters must be >= 1000");
            SplitMix64 rng(seed, 0xc11);
            auto est = estimate_exponents(map, random_torus_point(map.dim(), rng), iters, seed);
            auto exact = exact_exponents(map);
            auto b = theorem_bounds(exact);
            CsvWriter w;
            w.meta(config_line("exponents", "\"map\":" + map.to_json() + ",\"iters\":" + std::to_string(iters) + ",\"seed\":" + std::to_string(seed)));
            w.meta("units: nats/iter");
            std::vector<std::string> hdr = {"map_id"};
            for (size_t i = 0; i < est.exponents.size(); ++i) hdr.push_back("lambda_" + std::to_string(i + 1));
            hdr.insert(hdr.end(), {"Lambda_u", "lambda_u", "lambda_s", "Lambda_s", "lower_bound", "upper_bound"});
            w.header(hdr);
            std::vector<std::string> row = {"map"};
            for (double l : est.exponents) row.push_back(CsvWriter::fmt(l));
            auto opt = [](const std::optional<double>& v) { return v ? CsvWriter::fmt(*v) : std::string(); };
            row.insert(row.end(), {opt(est.lambda_u_max), opt(est.lambda_u_min), opt(est.lambda_s_max), opt(est.lambda_s_min), CsvWriter::fmt(b.lower), opt(b.upper)});
            w.row(row);
            w.write_file(out_path(out_dir, "exponents.csv"));
            std::cout << "exponents: estimated vs exact max |err| = ";
            double err = 0;
            for (size_t i = 0; i < est.exponents.size(); ++i) err = std::max(err, std::fabs(est.exponents[i] - exact.exponents[i]));
            std::cout << err << ", bounds [" << b.lower << ", " << (b.upper ? std::to_string(*b.upper) : "-") << "]\n";
            return 0;
        }

        if (c_rt->parsed()) {
            MapSpec map = MapSpec::from_json_file(map_file);
            TorusPoint x = parse_point(x_str);
            long km = kmax > 0 ? kmax : default_k_max(map, radius);
            ReturnTimeResult rt = method == "sample"
                                      ? tau_ball_sample(map, Ball(x, radius), km, samples, seed)
                                      : tau_ball_exact(map, Ball(x, radius), km);
            CsvWriter w;
            w.meta(config_line("return-time", "\"map\":" + map.to_json() + ",\"r\":" + CsvWriter::fmt(radius) + ",\"method\":\"" + method + "\",\"seed\":" + std::to_string(seed)));
            w.header({"r", "tau", "ratio", "method", "censored"});
            w.row({CsvWriter::fmt(radius), rt.tau ? CsvWriter::fmt(*rt.tau) : "NOT_FOUND",
                   rt.tau ? CsvWriter::fmt(static_cast<double>(*rt.tau) / -std::log(radius)) : "", method,
                   rt.tau ? "0" : "1"});
            w.write_file(out_path(out_dir, "return_time.csv"));
            if (!rt.tau) {
                std::cout << "tau: NOT_FOUND within k_max=" << km << "\n";
                return 2;
            }
            std::cout << "tau = " << *rt.tau << " (k_max " << km << (rt.ambiguous ? ", boundary-ambiguous" : "") << ")\n";
            return 0;
        }

        if (c_slope->parsed()) {
            MapSpec map = MapSpec::from_json_file(map_file);
            TorusPoint x = parse_point(x_str);
            auto s = slope_series(map, x, rmin, rmax, grid, parse_method(method), kmax, samples, seed);
            CsvWriter w;
            w.meta(config_line("slope", "\"map\":" + map.to_json() + ",\"x\":\"" + x_str + "\",\"rmin\":" + CsvWriter::fmt(rmin) + ",\"rmax\":" + CsvWriter::fmt(rmax) + ",\"grid\":" + std::to_string(grid) + ",\"method\":\"" + method + "\",\"seed\":" + std::to_string(seed)));
            w.meta("summary: slope=" + CsvWriter::fmt(s.slope) + " r2=" + CsvWriter::fmt(s.r2) + " liminf_est=" + CsvWriter::fmt(s.liminf_est) + " limsup_est=" + CsvWriter::fmt(s.limsup_est));
            w.header({"r", "tau", "ratio", "method", "censored"});
            for (const auto& row : s.rows)
                w.row({CsvWriter::fmt(row.r), row.tau ? CsvWriter::fmt(*row.tau) : "NOT_FOUND",
                       row.tau ? CsvWriter::fmt(row.ratio) : "", method, row.tau ? "0" : "1"});
            w.write_file(out_path(out_dir, "slope.csv"));

            if (plot) {
                PlotSeries ratio_series{"tau/-log r", {}};
                for (const auto& row : s.rows)
                    if (row.tau) ratio_series.points.push_back({-std::log(row.r), row.ratio});
                std::vector<PlotSeries> series = {ratio_series};
                auto b = theorem_bounds(exact_exponents(map));
                if (b.upper) {
                    PlotSeries ref{"theorem limit", {{ratio_series.points.front().first, *b.upper}, {ratio_series.points.back().first, *b.upper}}};
                    series.push_back(ref);
                }
                write_svg(out_path(out_dir, "slope.svg"), series, "-log r", "tau / -log r");
            }
            std::cout << "slope=" << s.slope << " r2=" << s.r2 << " liminf_est=" << s.liminf_est
                      << " limsup_est=" << s.limsup_est << (s.degenerate ? " [degenerate: atypical center]" : "") << "\n";
            return s.censored ? 2 : 0;
        }

        if (c_spec->parsed()) {
            MapSpec map = MapSpec::from_json_file(map_file);
            if (!(rmin > 0 && rmin < rmax && rmax < 0.25)) throw std::invalid_argument("need 0 < rmin < rmax < 1/4");
            SplitMix64 rng(seed, 0x5bec);
            Orbit orb = orbit(map, random_torus_point(map.dim(), rng), orbit_n);
            EmpiricalMeasure mu(orb, rmin);
            std::vector<double> r_grid;
            for (int j = 0; j < grid; ++j) r_grid.push_back(rmax * std::pow(rmin / rmax, static_cast<double>(j) / (grid - 1)));
            std::vector<double> qs;
            {
                std::stringstream ss(q_str);
                std::string tok;
                while (std::getline(ss, tok, ',')) qs.push_back(std::stod(tok));
            }
            auto curve = spectrum_curve(map, mu, qs, points, r_grid, seed);
            CsvWriter w;
            w.meta(config_line("spectrum", "\"map\":" + map.to_json() + ",\"n\":" + std::to_string(orbit_n) + ",\"points\":" + std::to_string(points) + ",\"seed\":" + std::to_string(seed)));
            w.meta("approximations: {\"inf_at_center\":true,\"percentile_level\":90,\"censored_radii_dropped\":true}");
            if (map.kind() == MapKind::Doubling1d)
                w.meta("note: endomorphism spectrum values for q<0 are exploratory");
            w.header({"q", "alpha", "r2", "n_points"});
            for (size_t i = 0; i < curve.q_values.size(); ++i)
                w.row({CsvWriter::fmt(curve.q_values[i]), CsvWriter::fmt(curve.alpha_values[i]),
                       CsvWriter::fmt(curve.median_r2[i]), CsvWriter::fmt(curve.n_points[i])});
            w.write_file(out_path(out_dir, "spectrum.csv"));
            if (plot && !curve.q_values.empty()) {
                PlotSeries s{"alpha(q)", {}};
                for (size_t i = 0; i < curve.q_values.size(); ++i) s.points.push_back({curve.q_values[i], curve.alpha_values[i]});
                write_svg(out_path(out_dir, "spectrum.svg"), {s}, "q", "alpha");
            }
            std::cout << "spectrum: " << curve.q_values.size() << "/" << qs.size() << " q-values computed\n";
            return curve.q_values.size() == qs.size() ? 0 : 2;
        }

        if (c_cov->parsed()) {
            CsvWriter w;
            w.meta(config_line("covering", ""));
            w.header({"r", "n_formula", "n_observed", "density_gap"});
            bool all_valid = true;
            for (double r : cover_r) {
                auto c = covering_time(r);
                if (!c.valid) all_valid = false;
                w.row({CsvWriter::fmt(r), CsvWriter::fmt(c.n_formula), CsvWriter::fmt(c.n_observed), CsvWriter::fmt(c.density_gap)});
                std::cout << "r=" << r << " n_formula=" << c.n_formula << " n_observed=" << c.n_observed << "\n";
            }
            w.write_file(out_path(out_dir, "covering.csv"));
            return all_valid ? 0 : 2;
        }

        if (c_per->parsed()) {
            MapSpec map = MapSpec::from_json_file(map_file);
            auto counts = periodic_point_counts(map.matrix(), pmax);
            CsvWriter w;
            w.meta(config_line("periodic", "\"map\":" + map.to_json() + ",\"pmax\":" + std::to_string(pmax)));
            w.header({"p", "count"});
            for (int p = 1; p <= pmax; ++p) w.row({CsvWriter::fmt(static_cast<long>(p)), counts[static_cast<size_t>(p - 1)].str()});
            w.write_file(out_path(out_dir, "periodic.csv"));
            std::cout << "periodic-point counts written for p=1.." << pmax << "\n";
            return 0;
        }

        if (c_word->parsed()) {
            SplitMix64 rng(seed, 0x30);
            CsvWriter w;
            w.meta(config_line("word-return", "\"n\":" + std::to_string(word_len) + ",\"words\":" + std::to_string(n_words) + ",\"seed\":" + std::to_string(seed)));
            w.header({"word_index", "tau", "ratio"});
            double sum = 0;
            for (long i = 0; i < n_words; ++i) {
                Word word;
                word.symbols.resize(static_cast<size_t>(word_len));
                for (long j = 0; j < word_len; ++j) word.symbols[static_cast<size_t>(j)] = static_cast<int>(rng.next() & 1);
                long tau = tau_word(word);
                sum += static_cast<double>(tau) / static_cast<double>(word_len);
                w.row({CsvWriter::fmt(i), CsvWriter::fmt(tau), CsvWriter::fmt(static_cast<double>(tau) / static_cast<double>(word_len))});
            }
            w.write_file(out_path(out_dir, "words.csv"));
            std::cout << "mean tau/n = " << sum / static_cast<double>(n_words) << " over " << n_words << " words\n";
            return 0;
        }

        if (c_bowen->parsed()) {
            MapSpec map = MapSpec::from_json_file(map_file);
            TorusPoint x = parse_point(x_str);
            BowenBallSpec bspec{x, bowen_m, bowen_n, eps};
            long km = kmax > 0 ? kmax : default_k_max(map, eps) + bowen_m + bowen_n;
            auto rt = tau_bowen_sample(map, bspec, km, samples, seed);
            CsvWriter w;
            w.meta(config_line("bowen", "\"map\":" + map.to_json() + ",\"m\":" + std::to_string(bowen_m) + ",\"fwd\":" + std::to_string(bowen_n) + ",\"eps\":" + CsvWriter::fmt(eps) + ",\"seed\":" + std::to_string(seed)));
            w.header({"m", "n", "eps", "tau", "censored"});
            w.row({CsvWriter::fmt(bowen_m), CsvWriter::fmt(bowen_n), CsvWriter::fmt(eps),
                   rt.tau ? CsvWriter::fmt(*rt.tau) : "NOT_FOUND", rt.tau ? "0" : "1"});
            w.write_file(out_path(out_dir, "bowen.csv"));
            if (!rt.tau) {
                std::cout << "tau: NOT_FOUND within k_max=" << km << "\n";
                return 2;
            }
            std::cout << "tau = " << *rt.tau << " (upper-bound certificate)\n";
            return 0;
        }

        if (c_ver->parsed()) {
            VerifyOptions opts;
            opts.quick = quick && !full;
            opts.seed = seed;
            opts.out_dir = out_dir;
            auto results = run_verification(opts, std::cout);
            long failed = 0;
            for (const auto& r : results)
                if (!r.pass) ++failed;
            std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria FAILED") << "\n";
            return failed == 0 ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
