#ifndef RECUR_SVG_HPP
#define RECUR_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace recur {

struct PlotSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

// Standalone SVG line plot: linear axes with tick labels, one polyline
// (or marker, for single points) per series, legend. Byte-deterministic
// for identical input.
std::string render_svg(const std::vector<PlotSeries>& series, const std::string& x_label,
                       const std::string& y_label);

void write_svg(const std::string& path, const std::vector<PlotSeries>& series,
               const std::string& x_label, const std::string& y_label);

}  // namespace recur

#endif
