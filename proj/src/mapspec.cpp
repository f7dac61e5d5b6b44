#include "recur/mapspec.hpp"

#include <cmath>
#include <complex>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace recur {

std::array<double, 2> IntMatrix::eigen_moduli() const {
    // roots of x^2 - t x + d
    double t = static_cast<double>(trace());
    double d = static_cast<double>(det());
    double disc = t * t - 4.0 * d;
    double m1, m2;
    if (disc >= 0.0) {
        double s = std::sqrt(disc);
        m1 = std::fabs((t - s) / 2.0);
        m2 = std::fabs((t + s) / 2.0);
    } else {
        // complex pair, common modulus sqrt(det)
        m1 = m2 = std::sqrt(std::fabs(d));
    }
    if (m1 > m2) std::swap(m1, m2);
    return {m1, m2};
}

MapSpec MapSpec::toral_auto(const IntMatrix& m) {
    if (std::abs(m.det()) != 1)
        throw std::invalid_argument("toral_auto_2d requires |det| = 1");
    if (std::abs(m.trace()) <= 2)
        throw std::invalid_argument("toral_auto_2d requires |trace| > 2 (hyperbolicity)");
    MapSpec s;
    s.kind_ = MapKind::ToralAuto2d;
    s.dim_ = 2;
    s.mat_ = m;
    return s;
}

MapSpec MapSpec::toral_endo(const IntMatrix& m) {
    auto mod = m.eigen_moduli();
    if (!(mod[0] > 1.0 + 1e-9))
        throw std::invalid_argument("toral_endo_2d requires all eigenvalue moduli > 1");
    MapSpec s;
    s.kind_ = MapKind::ToralEndo2d;
    s.dim_ = 2;
    s.mat_ = m;
    return s;
}

MapSpec MapSpec::doubling() {
    MapSpec s;
    s.kind_ = MapKind::Doubling1d;
    s.dim_ = 1;
    return s;
}

MapSpec MapSpec::product(const MapSpec& f1, const MapSpec& f2) {
    if (f1.kind() != MapKind::ToralAuto2d || f2.kind() != MapKind::ToralAuto2d)
        throw std::invalid_argument("product_4d requires both factors toral_auto_2d");
    MapSpec s;
    s.kind_ = MapKind::Product4d;
    s.dim_ = 4;
    s.f1_ = std::make_shared<MapSpec>(f1);
    s.f2_ = std::make_shared<MapSpec>(f2);
    return s;
}

const IntMatrix& MapSpec::matrix() const {
    if (kind_ != MapKind::ToralAuto2d && kind_ != MapKind::ToralEndo2d)
        throw std::logic_error("map kind has no matrix");
    return mat_;
}

const MapSpec& MapSpec::factor(int i) const {
    if (kind_ != MapKind::Product4d) throw std::logic_error("not a product map");
    return i == 0 ? *f1_ : *f2_;
}

std::vector<double> MapSpec::derivative() const {
    switch (kind_) {
        case MapKind::Doubling1d:
            return {2.0};
        case MapKind::ToralAuto2d:
        case MapKind::ToralEndo2d: {
            std::vector<double> d(4);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) d[static_cast<size_t>(2 * i + j)] = static_cast<double>(mat_.a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            return d;
        }
        case MapKind::Product4d: {
            std::vector<double> d(16, 0.0);
            auto d1 = f1_->derivative();
            auto d2 = f2_->derivative();
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    d[static_cast<size_t>(4 * i + j)] = d1[static_cast<size_t>(2 * i + j)];
                    d[static_cast<size_t>(4 * (i + 2) + (j + 2))] = d2[static_cast<size_t>(2 * i + j)];
                }
            return d;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

MapSpec parse_json(const nlohmann::json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "doubling_1d") return MapSpec::doubling();
    if (kind == "product_4d") {
        const auto& f = j.at("factors");
        if (!f.is_array() || f.size() != 2)
            throw std::invalid_argument("product_4d needs exactly 2 factors");
        return MapSpec::product(parse_json(f[0]), parse_json(f[1]));
    }
    if (kind == "toral_auto_2d" || kind == "toral_endo_2d") {
        const auto& m = j.at("matrix");
        IntMatrix im;
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k) im.a[static_cast<size_t>(i)][static_cast<size_t>(k)] = m.at(static_cast<size_t>(i)).at(static_cast<size_t>(k)).get<std::int64_t>();
        return kind == "toral_auto_2d" ? MapSpec::toral_auto(im) : MapSpec::toral_endo(im);
    }
    throw std::invalid_argument("unknown map kind: " + kind);
}

nlohmann::json to_json_obj(const MapSpec& s) {
    nlohmann::json j;
    switch (s.kind()) {
        case MapKind::Doubling1d:
            j["kind"] = "doubling_1d";
            break;
        case MapKind::ToralAuto2d:
        case MapKind::ToralEndo2d: {
            j["kind"] = s.kind() == MapKind::ToralAuto2d ? "toral_auto_2d" : "toral_endo_2d";
            const auto& m = s.matrix();
            j["matrix"] = {{m.a[0][0], m.a[0][1]}, {m.a[1][0], m.a[1][1]}};
            break;
        }
        case MapKind::Product4d:
            j["kind"] = "product_4d";
            j["factors"] = {to_json_obj(s.factor(0)), to_json_obj(s.factor(1))};
            break;
    }
    return j;
}

}  // namespace

MapSpec MapSpec::from_json(const std::string& text) {
    return parse_json(nlohmann::json::parse(text));
}

MapSpec MapSpec::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

std::string MapSpec::to_json() const { return to_json_obj(*this).dump(); }

MapSpec catmap() {
    IntMatrix m;
    m.a = {{{2, 1}, {1, 1}}};
    return MapSpec::toral_auto(m);
}

MapSpec expanding_example() {
    IntMatrix m;
    m.a = {{{6, 3}, {3, 3}}};
    return MapSpec::toral_endo(m);
}

}  // namespace recur
