#include "adsq/render.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

namespace adsq {
namespace {

struct Rgb {
    int r, g, b;
};

// diverging blue-white-red for signed data, white-red for non-negative
Rgb palette(double t, bool diverging) {
    auto channel = [](double v) { return static_cast<int>(std::lround(255.0 * std::clamp(v, 0.0, 1.0))); };
    if (diverging) {
        if (t < 0.5) {
            double u = t / 0.5;
            return {channel(0.2 + 0.8 * u), channel(0.3 + 0.7 * u), 255};
        }
        double u = (t - 0.5) / 0.5;
        return {255, channel(1.0 - 0.7 * u), channel(1.0 - 0.8 * u)};
    }
    return {255, channel(1.0 - 0.75 * t), channel(1.0 - 0.85 * t)};
}

std::string color(const Rgb& c) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

const char* kSeriesColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                               "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void render_heatmap(const CsvTable& t, std::ofstream& out) {
    if (t.columns.size() < 3) throw std::runtime_error("render: heatmap needs >= 3 columns");
    std::set<double> xs, ys;
    for (const auto& r : t.rows) {
        xs.insert(r[0]);
        ys.insert(r[1]);
    }
    std::map<double, int> xi, yi;
    int k = 0;
    for (double x : xs) xi[x] = k++;
    k = 0;
    for (double y : ys) yi[y] = k++;
    const int nx = static_cast<int>(xs.size()), ny = static_cast<int>(ys.size());

    double vmin = t.rows[0][2], vmax = vmin;
    for (const auto& r : t.rows) {
        vmin = std::min(vmin, r[2]);
        vmax = std::max(vmax, r[2]);
    }
    bool diverging = vmin < 0 && vmax > 0;
    double scale = diverging ? std::max(std::abs(vmin), std::abs(vmax)) : vmax;
    if (scale == 0) scale = 1;

    const double W = 520, H = 420, ml = 60, mb = 40, mt = 20, mr = 80;
    const double pw = (W - ml - mr) / nx, ph = (H - mt - mb) / ny;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\">\n";
    for (const auto& r : t.rows) {
        double tval = diverging ? 0.5 + 0.5 * r[2] / scale : (vmax > vmin ? (r[2] - vmin) / (vmax - vmin) : 0.5);
        double x = ml + xi[r[0]] * pw;
        double y = H - mb - (yi[r[1]] + 1) * ph;
        out << "<rect x=\"" << fmt(x) << "\" y=\"" << fmt(y) << "\" width=\"" << fmt(pw)
            << "\" height=\"" << fmt(ph) << "\" fill=\"" << color(palette(tval, diverging))
            << "\"/>\n";
    }
    // axes
    out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
        << H - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << ml << "\" y=\"" << H - mb + 16 << "\" font-size=\"11\">"
        << fmt(*xs.begin()) << "</text>\n";
    out << "<text x=\"" << W - mr - 30 << "\" y=\"" << H - mb + 16 << "\" font-size=\"11\">"
        << fmt(*xs.rbegin()) << "</text>\n";
    out << "<text x=\"8\" y=\"" << H - mb << "\" font-size=\"11\">" << fmt(*ys.begin())
        << "</text>\n";
    out << "<text x=\"8\" y=\"" << mt + 10 << "\" font-size=\"11\">" << fmt(*ys.rbegin())
        << "</text>\n";
    out << "<text x=\"" << ml + 100 << "\" y=\"" << H - 8 << "\" font-size=\"12\">"
        << t.columns[0] << " vs " << t.columns[1] << " : " << t.columns[2] << "</text>\n";
    // colorbar
    const int steps = 20;
    double cbh = (H - mt - mb) / steps;
    for (int i = 0; i < steps; ++i) {
        double tv = (i + 0.5) / steps;
        out << "<rect x=\"" << W - mr + 20 << "\" y=\"" << fmt(H - mb - (i + 1) * cbh)
            << "\" width=\"18\" height=\"" << fmt(cbh) << "\" fill=\""
            << color(palette(tv, diverging)) << "\"/>\n";
    }
    out << "<text x=\"" << W - mr + 42 << "\" y=\"" << H - mb << "\" font-size=\"10\">"
        << fmt(diverging ? -scale : vmin) << "</text>\n";
    out << "<text x=\"" << W - mr + 42 << "\" y=\"" << mt + 10 << "\" font-size=\"10\">"
        << fmt(diverging ? scale : vmax) << "</text>\n";
    out << "</svg>\n";
}

void render_line(const CsvTable& t, std::ofstream& out) {
    if (t.columns.size() < 2) throw std::runtime_error("render: line plot needs >= 2 columns");
    double xmin = t.rows[0][0], xmax = xmin, ymin = t.rows[0][1], ymax = ymin;
    for (const auto& r : t.rows) {
        xmin = std::min(xmin, r[0]);
        xmax = std::max(xmax, r[0]);
        for (std::size_t c = 1; c < r.size(); ++c) {
            ymin = std::min(ymin, r[c]);
            ymax = std::max(ymax, r[c]);
        }
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    const double W = 560, H = 400, ml = 64, mb = 44, mt = 16, mr = 16;
    auto px = [&](double x) { return ml + (x - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (y - ymin) / (ymax - ymin) * (H - mt - mb); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\">\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
        << H - mb << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
        << "\" stroke=\"black\"/>\n";
    for (std::size_t c = 1; c < t.columns.size(); ++c) {
        out << "<polyline fill=\"none\" stroke=\"" << kSeriesColors[(c - 1) % 8]
            << "\" stroke-width=\"1.5\" points=\"";
        for (const auto& r : t.rows) out << fmt(px(r[0])) << "," << fmt(py(r[c])) << " ";
        out << "\"/>\n";
        out << "<text x=\"" << W - mr - 120 << "\" y=\"" << mt + 14 * c << "\" font-size=\"11\" fill=\""
            << kSeriesColors[(c - 1) % 8] << "\">" << t.columns[c] << "</text>\n";
    }
    out << "<text x=\"" << ml << "\" y=\"" << H - mb + 16 << "\" font-size=\"11\">" << fmt(xmin)
        << "</text>\n";
    out << "<text x=\"" << W - mr - 40 << "\" y=\"" << H - mb + 16 << "\" font-size=\"11\">"
        << fmt(xmax) << "</text>\n";
    out << "<text x=\"6\" y=\"" << H - mb << "\" font-size=\"11\">" << fmt(ymin) << "</text>\n";
    out << "<text x=\"6\" y=\"" << mt + 10 << "\" font-size=\"11\">" << fmt(ymax) << "</text>\n";
    out << "<text x=\"" << (W - ml) / 2 << "\" y=\"" << H - 6 << "\" font-size=\"12\">"
        << t.columns[0] << "</text>\n";
    out << "</svg>\n";
}

}  // namespace

void render_svg(const CsvTable& table, const std::string& kind,
                const std::filesystem::path& out_path) {
    if (table.rows.empty()) throw std::runtime_error("render: empty series input");
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("render: cannot open " + out_path.string());
    if (kind == "heatmap")
        render_heatmap(table, out);
    else if (kind == "line")
        render_line(table, out);
    else
        throw std::invalid_argument("render: unknown kind '" + kind + "'");
}

}  // namespace adsq
