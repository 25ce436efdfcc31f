#include "tpht/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tpht::svg {

namespace {

constexpr double kW = 720.0, kH = 480.0;
constexpr double kPad = 50.0;

struct Frame {
    double xmin, xmax, ymin, ymax;
    double px(double x) const { return kPad + (x - xmin) / (xmax - xmin) * (kW - 2 * kPad); }
    double py(double y) const { return kH - kPad - (y - ymin) / (ymax - ymin) * (kH - 2 * kPad); }
};

std::ofstream open_svg(const std::string& path, const std::string& title) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("svg: cannot open " + path);
    f << "<svg xmlns='http://www.w3.org/2000/svg' width='" << kW << "' height='" << kH << "'>\n";
    f << "<rect width='100%' height='100%' fill='white'/>\n";
    f << "<text x='" << kW / 2 << "' y='24' text-anchor='middle' font-size='15'>" << title
      << "</text>\n";
    return f;
}

void draw_axes(std::ofstream& f, const Frame& fr) {
    f << "<line x1='" << kPad << "' y1='" << kH - kPad << "' x2='" << kW - kPad << "' y2='"
      << kH - kPad << "' stroke='black'/>\n";
    f << "<line x1='" << kPad << "' y1='" << kPad << "' x2='" << kPad << "' y2='" << kH - kPad
      << "' stroke='black'/>\n";
    for (int k = 0; k <= 4; ++k) {
        const double x = fr.xmin + (fr.xmax - fr.xmin) * k / 4.0;
        const double y = fr.ymin + (fr.ymax - fr.ymin) * k / 4.0;
        f << "<text x='" << fr.px(x) << "' y='" << kH - kPad + 18
          << "' text-anchor='middle' font-size='11'>" << x << "</text>\n";
        f << "<text x='" << kPad - 6 << "' y='" << fr.py(y) + 4
          << "' text-anchor='end' font-size='11'>" << y << "</text>\n";
    }
}

} // namespace

void write_histogram(const std::string& path, const std::vector<double>& edges,
                     const std::vector<std::size_t>& counts, const std::string& title, bool log_x,
                     const std::vector<std::pair<double, std::string>>& marks) {
    if (edges.size() != counts.size() + 1 || counts.empty())
        throw std::invalid_argument("write_histogram: edges must be counts+1");
    auto tx = [&](double v) { return log_x ? std::log10(std::max(v, 1e-300)) : v; };
    Frame fr{tx(edges.front()), tx(edges.back()), 0.0,
             static_cast<double>(*std::max_element(counts.begin(), counts.end()))};
    if (fr.ymax == 0.0) fr.ymax = 1.0;
    if (fr.xmax == fr.xmin) fr.xmax = fr.xmin + 1.0;
    std::ofstream f = open_svg(path, title);
    draw_axes(f, fr);
    for (std::size_t k = 0; k < counts.size(); ++k) {
        const double x0 = fr.px(tx(edges[k]));
        const double x1 = fr.px(tx(edges[k + 1]));
        const double y = fr.py(static_cast<double>(counts[k]));
        f << "<rect x='" << x0 << "' y='" << y << "' width='" << std::max(0.5, x1 - x0)
          << "' height='" << (kH - kPad - y) << "' fill='steelblue' stroke='white'/>\n";
    }
    for (const auto& [value, label] : marks) {
        const double x = fr.px(tx(value));
        f << "<line x1='" << x << "' y1='" << kPad << "' x2='" << x << "' y2='" << kH - kPad
          << "' stroke='goldenrod' stroke-width='2' stroke-dasharray='6,3'/>\n";
        f << "<text x='" << x << "' y='" << kPad - 4 << "' text-anchor='middle' font-size='11'>"
          << label << "</text>\n";
    }
    f << "</svg>\n";
}

void write_scatter(const std::string& path, const std::vector<double>& xs,
                   const std::vector<double>& ys, const std::vector<double>& curve_x,
                   const std::vector<double>& curve_y, const std::string& title) {
    if (xs.size() != ys.size() || curve_x.size() != curve_y.size())
        throw std::invalid_argument("write_scatter: coordinate size mismatch");
    Frame fr{0, 1, 0, 1};
    bool first = true;
    auto grow = [&](double x, double y) {
        if (first) {
            fr = {x, x, y, y};
            first = false;
        }
        fr.xmin = std::min(fr.xmin, x);
        fr.xmax = std::max(fr.xmax, x);
        fr.ymin = std::min(fr.ymin, y);
        fr.ymax = std::max(fr.ymax, y);
    };
    for (std::size_t i = 0; i < xs.size(); ++i) grow(xs[i], ys[i]);
    for (std::size_t i = 0; i < curve_x.size(); ++i) grow(curve_x[i], curve_y[i]);
    const double dx = (fr.xmax - fr.xmin) * 0.05 + 1e-12;
    const double dy = (fr.ymax - fr.ymin) * 0.05 + 1e-12;
    fr.xmin -= dx;
    fr.xmax += dx;
    fr.ymin -= dy;
    fr.ymax += dy;

    std::ofstream f = open_svg(path, title);
    draw_axes(f, fr);
    if (!curve_x.empty()) {
        f << "<polyline fill='none' stroke='crimson' stroke-width='1.5' points='";
        for (std::size_t i = 0; i < curve_x.size(); ++i)
            f << fr.px(curve_x[i]) << ',' << fr.py(curve_y[i]) << ' ';
        f << "'/>\n";
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
        f << "<circle cx='" << fr.px(xs[i]) << "' cy='" << fr.py(ys[i])
          << "' r='1.6' fill='black' fill-opacity='0.55'/>\n";
    f << "</svg>\n";
}

void write_oscillation(const std::string& path, const Matrix& vectors,
                       const std::vector<std::vector<double>>& nodes, const std::string& title) {
    const std::size_t n = vectors.rows();
    const std::size_t cols = vectors.cols();
    if (cols == 0 || nodes.size() != cols)
        throw std::invalid_argument("write_oscillation: one node list per column required");
    std::ofstream f = open_svg(path, title);
    const double panel_w = (kW - 2 * kPad) / static_cast<double>(cols);
    for (std::size_t k = 0; k < cols; ++k) {
        const double x0 = kPad + panel_w * static_cast<double>(k);
        double vmax = 1e-300;
        for (std::size_t i = 0; i < n; ++i) vmax = std::max(vmax, std::abs(vectors(i, k)));
        auto px = [&](double value) { return x0 + (0.5 + 0.45 * value / vmax) * panel_w; };
        auto py = [&](double t) {
            return kPad + 14 + (t - 1.0) / std::max(1.0, static_cast<double>(n - 1)) *
                                   (kH - 2 * kPad - 14);
        };
        // dotted zero axis
        f << "<line x1='" << px(0.0) << "' y1='" << py(1.0) << "' x2='" << px(0.0) << "' y2='"
          << py(static_cast<double>(n)) << "' stroke='crimson' stroke-dasharray='2,3'/>\n";
        f << "<polyline fill='none' stroke='black' stroke-width='1.2' points='";
        for (std::size_t i = 0; i < n; ++i)
            f << px(vectors(i, k)) << ',' << py(static_cast<double>(i + 1)) << ' ';
        f << "'/>\n";
        for (double t : nodes[k]) {
            f << "<line x1='" << x0 + 0.18 * panel_w << "' y1='" << py(t) << "' x2='"
              << x0 + 0.82 * panel_w << "' y2='" << py(t)
              << "' stroke='steelblue' stroke-width='2'/>\n";
        }
        f << "<text x='" << x0 + 0.5 * panel_w << "' y='" << kPad + 8
          << "' text-anchor='middle' font-size='10'>u" << k + 1 << "</text>\n";
    }
    f << "</svg>\n";
}

} // namespace tpht::svg
