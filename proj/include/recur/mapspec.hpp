#ifndef RECUR_MAPSPEC_HPP
#define RECUR_MAPSPEC_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "recur/torus.hpp"

namespace recur {

// 2x2 integer matrix of a linear toral map.
struct IntMatrix {
    std::array<std::array<std::int64_t, 2>, 2> a{};

    std::int64_t det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }
    std::int64_t trace() const { return a[0][0] + a[1][1]; }

    // eigenvalue moduli, ascending
    std::array<double, 2> eigen_moduli() const;
};

enum class MapKind { ToralAuto2d, ToralEndo2d, Product4d, Doubling1d };

// Declarative description of one of the built-in systems. Hyperbolicity
// is checked at construction; downstream code can assume it.
class MapSpec {
  public:
    static MapSpec toral_auto(const IntMatrix& m);
    static MapSpec toral_endo(const IntMatrix& m);
    static MapSpec doubling();
    static MapSpec product(const MapSpec& f1, const MapSpec& f2);

    static MapSpec from_json(const std::string& text);
    static MapSpec from_json_file(const std::string& path);
    std::string to_json() const;

    MapKind kind() const { return kind_; }
    int dim() const { return dim_; }
    const IntMatrix& matrix() const;
    const MapSpec& factor(int i) const;
    bool invertible() const { return kind_ == MapKind::ToralAuto2d || kind_ == MapKind::Product4d; }

    // constant derivative, row-major d x d
    std::vector<double> derivative() const;

  private:
    MapSpec() = default;
    MapKind kind_{};
    int dim_ = 0;
    IntMatrix mat_{};
    std::shared_ptr<const MapSpec> f1_, f2_;
};

// the two standard examples used throughout
MapSpec catmap();                 // [[2,1],[1,1]]
MapSpec expanding_example();      // [[6,3],[3,3]]

}  // namespace recur

#endif
