#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "recur/csvio.hpp"
#include "recur/mapspec.hpp"
#include "recur/parallel.hpp"
#include "recur/svg.hpp"

using namespace recur;

TEST_CASE("csv layout: metadata, header, rows") {
    CsvWriter w;
    w.meta("config: {\"experiment\":\"demo\"}");
    w.header({"a", "b"});
    w.row({"1", "2"});
    std::string s = w.str();
    CHECK(s == "# config: {\"experiment\":\"demo\"}\na,b\n1,2\n");
    CsvWriter bad;
    CHECK_THROWS_AS(bad.row({"1"}), std::logic_error);  // header is mandatory
}

TEST_CASE("numbers round-trip through the csv formatter") {
    for (double v : {0.1, 1.0 / 3.0, 2.078087, 1e-300, 123456.789, 0.9624236501192069}) {
        double back = std::strtod(CsvWriter::fmt(v).c_str(), nullptr);
        CHECK(back == v);  // bit-exact
    }
    CHECK(CsvWriter::fmt(42L) == "42");
}

TEST_CASE("csv write_file emits exactly the in-memory bytes") {
    CsvWriter w;
    w.header({"x"});
    w.row({CsvWriter::fmt(1.0 / 7.0)});
    auto path = std::filesystem::temp_directory_path() / "recur_csv_test.csv";
    w.write_file(path.string());
    std::ifstream f(path, std::ios::binary);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == w.str());
    std::filesystem::remove(path);
}

TEST_CASE("map specs round-trip through json") {
    for (const MapSpec& m : {catmap(), expanding_example(), MapSpec::doubling(),
                             MapSpec::product(catmap(), MapSpec::toral_auto(IntMatrix{{{{3, 2}, {1, 1}}}}))}) {
        MapSpec back = MapSpec::from_json(m.to_json());
        CHECK(back.to_json() == m.to_json());
        CHECK(back.kind() == m.kind());
        CHECK(back.dim() == m.dim());
    }
    CHECK_THROWS(MapSpec::from_json("{\"kind\":\"nope\"}"));
    CHECK_THROWS(MapSpec::from_json("not json"));
    // parabolic matrix: |trace| = 2, not hyperbolic
    CHECK_THROWS_AS(MapSpec::toral_auto(IntMatrix{{{{1, 1}, {0, 1}}}}), std::invalid_argument);
    // |det| != 1 cannot be an automorphism
    CHECK_THROWS_AS(MapSpec::toral_auto(IntMatrix{{{{2, 0}, {0, 2}}}}), std::invalid_argument);
    // endomorphism needs every eigenvalue modulus > 1
    CHECK_THROWS_AS(MapSpec::toral_endo(IntMatrix{{{{2, 1}, {1, 1}}}}), std::invalid_argument);
}

TEST_CASE("svg plots are deterministic and well-formed") {
    std::vector<PlotSeries> series = {
        {"ratio", {{1.0, 2.0}, {2.0, 2.1}, {3.0, 2.05}}},
        {"limit", {{1.0, 2.078087}, {3.0, 2.078087}}},
    };
    std::string a = render_svg(series, "-log r", "tau / -log r");
    std::string b = render_svg(series, "-log r", "tau / -log r");
    CHECK(a == b);
    CHECK(a.find("<svg") == 0);
    CHECK(a.find("polyline") != std::string::npos);
    CHECK(a.find("-log r") != std::string::npos);
    CHECK(a.find("ratio") != std::string::npos);
    std::string single = render_svg({{"pt", {{1.0, 1.0}}}}, "x", "y");
    CHECK(single.find("circle") != std::string::npos);
    CHECK_THROWS_AS(render_svg({}, "x", "y"), std::invalid_argument);
}

TEST_CASE("parallel loops fill per-index slots identically at any width") {
    auto run = [](const char* threads) {
        setenv("RECUR_THREADS", threads, 1);
        std::vector<double> out(10000);
        parallel_for(10000, [&](long i) { out[static_cast<size_t>(i)] = std::sin(static_cast<double>(i)) * i; });
        return out;
    };
    auto one = run("1");
    auto four = run("4");
    unsetenv("RECUR_THREADS");
    CHECK(one == four);
}
