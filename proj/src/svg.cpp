#include "recur/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace recur {

namespace {

const int kW = 720, kH = 480;
const int kMargL = 70, kMargR = 160, kMargT = 30, kMargB = 50;
const char* kColors[] = {"#1f6fb4", "#d0552a", "#3a8f3a", "#8451a8", "#b03060", "#777722"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string render_svg(const std::vector<PlotSeries>& series, const std::string& x_label,
                       const std::string& y_label) {
    bool any = false;
    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    for (const auto& s : series)
        for (const auto& [x, y] : s.points) {
            if (!any) {
                xmin = xmax = x;
                ymin = ymax = y;
                any = true;
            }
            xmin = std::min(xmin, x);
            xmax = std::max(xmax, x);
            ymin = std::min(ymin, y);
            ymax = std::max(ymax, y);
        }
    if (!any) throw std::invalid_argument("render_svg: no points to plot");
    if (xmax == xmin) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    if (ymax == ymin) {
        ymin -= 1.0;
        ymax += 1.0;
    }

    auto px = [&](double x) { return kMargL + (x - xmin) / (xmax - xmin) * (kW - kMargL - kMargR); };
    auto py = [&](double y) { return kH - kMargB - (y - ymin) / (ymax - ymin) * (kH - kMargT - kMargB); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kW) + "\" height=\"" + std::to_string(kH) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // axes
    svg += "<line x1=\"" + num(kMargL) + "\" y1=\"" + num(kH - kMargB) + "\" x2=\"" + num(kW - kMargR) + "\" y2=\"" + num(kH - kMargB) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(kMargL) + "\" y1=\"" + num(kMargT) + "\" x2=\"" + num(kMargL) + "\" y2=\"" + num(kH - kMargB) + "\" stroke=\"black\"/>\n";

    // ticks: 5 per axis
    for (int t = 0; t <= 4; ++t) {
        double fx = xmin + (xmax - xmin) * t / 4.0;
        double fy = ymin + (ymax - ymin) * t / 4.0;
        svg += "<line x1=\"" + num(px(fx)) + "\" y1=\"" + num(kH - kMargB) + "\" x2=\"" + num(px(fx)) + "\" y2=\"" + num(kH - kMargB + 5) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(px(fx)) + "\" y=\"" + num(kH - kMargB + 18) + "\" font-size=\"11\" text-anchor=\"middle\">" + num(fx) + "</text>\n";
        svg += "<line x1=\"" + num(kMargL - 5) + "\" y1=\"" + num(py(fy)) + "\" x2=\"" + num(kMargL) + "\" y2=\"" + num(py(fy)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(kMargL - 8) + "\" y=\"" + num(py(fy) + 4) + "\" font-size=\"11\" text-anchor=\"end\">" + num(fy) + "</text>\n";
    }
    svg += "<text x=\"" + num((kMargL + kW - kMargR) / 2.0) + "\" y=\"" + num(kH - 10) + "\" font-size=\"13\" text-anchor=\"middle\">" + x_label + "</text>\n";
    svg += "<text x=\"16\" y=\"" + num((kMargT + kH - kMargB) / 2.0) + "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " + num((kMargT + kH - kMargB) / 2.0) + ")\">" + y_label + "</text>\n";

    for (size_t i = 0; i < series.size(); ++i) {
        const char* color = kColors[i % 6];
        const auto& pts = series[i].points;
        if (pts.size() == 1) {
            svg += "<circle cx=\"" + num(px(pts[0].first)) + "\" cy=\"" + num(py(pts[0].second)) + "\" r=\"4\" fill=\"" + color + "\"/>\n";
        } else {
            svg += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"";
            for (const auto& [x, y] : pts) svg += num(px(x)) + "," + num(py(y)) + " ";
            svg += "\"/>\n";
        }
        // legend entry
        double ly = kMargT + 16.0 * static_cast<double>(i) + 10.0;
        svg += "<line x1=\"" + num(kW - kMargR + 10) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(kW - kMargR + 34) + "\" y2=\"" + num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + num(kW - kMargR + 40) + "\" y=\"" + num(ly + 4) + "\" font-size=\"12\">" + series[i].label + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

void write_svg(const std::string& path, const std::vector<PlotSeries>& series,
               const std::string& x_label, const std::string& y_label) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("write_svg: cannot open " + path);
    f << render_svg(series, x_label, y_label);
}

}  // namespace recur
