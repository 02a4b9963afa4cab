#include "btda/barcode_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <vector>

namespace btda {

namespace {

std::string fmt(const char* spec, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

} // namespace

void write_barcode_csv(const barcode& b, std::ostream& os) {
    os << "dim,birth,death\n";
    for (const auto& iv : b.intervals) {
        if (!std::isinf(iv.death) && !(iv.death > iv.birth)) continue;
        os << iv.dim << ',' << fmt("%.17g", iv.birth) << ',';
        if (std::isinf(iv.death))
            os << "inf";
        else
            os << fmt("%.17g", iv.death);
        os << '\n';
    }
}

void write_barcode_svg(const barcode& b, std::ostream& os, radius_scale scale,
                       std::size_t top_per_dim, double axis_max) {
    const double unit = scale == radius_scale::ball ? 0.5 : 1.0;

    int max_dim = 0;
    double data_max = 0.0;
    for (const auto& iv : b.intervals) {
        max_dim = std::max(max_dim, iv.dim);
        if (!std::isinf(iv.death)) data_max = std::max(data_max, iv.death * unit);
        data_max = std::max(data_max, iv.birth * unit);
    }
    if (axis_max <= 0.0) axis_max = data_max > 0.0 ? data_max * 1.05 : 1.0;

    // collect bars per dimension: longest first, infinite bars leading
    std::vector<std::vector<bar>> groups(max_dim + 1);
    for (const auto& iv : b.intervals) {
        if (!std::isinf(iv.death) && !(iv.death > iv.birth)) continue;
        groups[iv.dim].push_back(iv);
    }
    std::size_t total_bars = 0;
    for (auto& g : groups) {
        std::sort(g.begin(), g.end(), [](const bar& x, const bar& y) {
            const bool xi = std::isinf(x.death), yi = std::isinf(y.death);
            if (xi != yi) return xi;
            const double lx = x.length(), ly = y.length();
            if (lx != ly) return lx > ly;
            return x.birth < y.birth;
        });
        if (g.size() > top_per_dim) g.resize(top_per_dim);
        total_bars += g.size();
    }

    const double left = 60.0, right = 780.0, bar_step = 8.0, group_gap = 26.0;
    const double plot_w = right - left;
    const double height =
        40.0 + total_bars * bar_step + groups.size() * group_gap + 30.0;
    auto x_of = [&](double v) { return left + plot_w * (v * unit) / axis_max; };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
       << fmt("%.0f", height) << "\" viewBox=\"0 0 800 " << fmt("%.0f", height)
       << "\">\n";
    os << "<rect width=\"800\" height=\"" << fmt("%.0f", height)
       << "\" fill=\"white\"/>\n";

    const char* colors[4] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};
    double y = 30.0;
    for (int d = 0; d <= max_dim; ++d) {
        os << "<text x=\"8\" y=\"" << fmt("%.1f", y + 4)
           << "\" font-family=\"monospace\" font-size=\"12\">H" << d << "</text>\n";
        for (const auto& iv : groups[d]) {
            const double x0 = x_of(iv.birth);
            const double x1 = std::isinf(iv.death)
                                  ? right
                                  : std::min(right, x_of(iv.death));
            os << "<line x1=\"" << fmt("%.2f", x0) << "\" y1=\"" << fmt("%.1f", y)
               << "\" x2=\"" << fmt("%.2f", x1) << "\" y2=\"" << fmt("%.1f", y)
               << "\" stroke=\"" << colors[d % 4] << "\" stroke-width=\"3\"/>\n";
            if (std::isinf(iv.death))
                os << "<text x=\"" << fmt("%.2f", x1 + 2) << "\" y=\""
                   << fmt("%.1f", y + 4)
                   << "\" font-family=\"monospace\" font-size=\"10\">&#8594;</text>\n";
            y += bar_step;
        }
        y += group_gap;
    }

    // axis with 6 ticks
    const double axis_y = y;
    os << "<line x1=\"" << fmt("%.1f", left) << "\" y1=\"" << fmt("%.1f", axis_y)
       << "\" x2=\"" << fmt("%.1f", right) << "\" y2=\"" << fmt("%.1f", axis_y)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int t = 0; t <= 5; ++t) {
        const double v = axis_max * t / 5.0;
        const double x = left + plot_w * t / 5.0;
        os << "<line x1=\"" << fmt("%.1f", x) << "\" y1=\"" << fmt("%.1f", axis_y)
           << "\" x2=\"" << fmt("%.1f", x) << "\" y2=\"" << fmt("%.1f", axis_y + 5)
           << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << fmt("%.1f", x - 10) << "\" y=\""
           << fmt("%.1f", axis_y + 18)
           << "\" font-family=\"monospace\" font-size=\"10\">" << fmt("%.3g", v)
           << "</text>\n";
    }
    os << "<text x=\"" << fmt("%.1f", right - 120) << "\" y=\""
       << fmt("%.1f", axis_y + 18)
       << "\" font-family=\"monospace\" font-size=\"10\">r ("
       << (scale == radius_scale::ball ? "ball radius" : "diameter")
       << ")</text>\n";
    os << "</svg>\n";
}

} // namespace btda
