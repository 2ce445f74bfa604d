#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

// Minimal self-contained SVG line charts: one polyline per line series, one
// circle set per marker series, linear axes with ticks and a legend. Output
// is fully deterministic (fixed-precision coordinates, no timestamps).

namespace cmsep {

class LineChart {
public:
    LineChart(std::string title, std::string x_label, std::string y_label)
        : title_(std::move(title)), x_label_(std::move(x_label)),
          y_label_(std::move(y_label)) {}

    void add_line(std::string label,
                  std::vector<std::pair<double, double>> points,
                  bool dashed = false) {
        series_.push_back({std::move(label), std::move(points), dashed, false});
    }

    void add_markers(std::string label,
                     std::vector<std::pair<double, double>> points) {
        series_.push_back({std::move(label), std::move(points), false, true});
    }

    void render(std::ostream& os) const {
        double xlo = 0.0, xhi = 1.0, ylo = 0.0, yhi = 1.0;
        bool any = false;
        for (const auto& s : series_)
            for (const auto& [x, y] : s.points) {
                if (!any) { xlo = xhi = x; ylo = yhi = y; any = true; }
                xlo = std::min(xlo, x); xhi = std::max(xhi, x);
                ylo = std::min(ylo, y); yhi = std::max(yhi, y);
            }
        auto pad = [](double& lo, double& hi) {
            double span = hi - lo;
            if (span <= 0.0) span = std::max(1.0, std::abs(hi));
            lo -= 0.05 * span;
            hi += 0.05 * span;
        };
        pad(xlo, xhi);
        pad(ylo, yhi);

        auto px = [&](double x) { return kLeft + (x - xlo) / (xhi - xlo) * (kRight - kLeft); };
        auto py = [&](double y) { return kBottom - (y - ylo) / (yhi - ylo) * (kBottom - kTop); };

        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
           << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
           << kHeight << "\" font-family=\"sans-serif\">\n";
        os << "<rect width=\"" << kWidth << "\" height=\"" << kHeight
           << "\" fill=\"#ffffff\"/>\n";
        os << "<text x=\"" << kWidth / 2
           << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
           << escape(title_) << "</text>\n";

        // Gridlines, ticks, tick labels.
        for (int i = 0; i <= kTicks; ++i) {
            const double fx = xlo + (xhi - xlo) * i / kTicks;
            const double fy = ylo + (yhi - ylo) * i / kTicks;
            const std::string gx = num(px(fx)), gy = num(py(fy));
            os << "<line x1=\"" << gx << "\" y1=\"" << kTop << "\" x2=\"" << gx
               << "\" y2=\"" << kBottom << "\" stroke=\"#e8e8e8\"/>\n";
            os << "<line x1=\"" << kLeft << "\" y1=\"" << gy << "\" x2=\""
               << kRight << "\" y2=\"" << gy << "\" stroke=\"#e8e8e8\"/>\n";
            os << "<text x=\"" << gx << "\" y=\"" << kBottom + 18
               << "\" text-anchor=\"middle\" font-size=\"11\">" << tick(fx)
               << "</text>\n";
            os << "<text x=\"" << kLeft - 8 << "\" y=\"" << gy
               << "\" text-anchor=\"end\" dominant-baseline=\"middle\" "
                  "font-size=\"11\">"
               << tick(fy) << "</text>\n";
        }
        os << "<line x1=\"" << kLeft << "\" y1=\"" << kBottom << "\" x2=\""
           << kRight << "\" y2=\"" << kBottom << "\" stroke=\"#333333\"/>\n";
        os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
           << "\" y2=\"" << kBottom << "\" stroke=\"#333333\"/>\n";
        os << "<text x=\"" << (kLeft + kRight) / 2 << "\" y=\"" << kBottom + 40
           << "\" text-anchor=\"middle\" font-size=\"13\">" << escape(x_label_)
           << "</text>\n";
        os << "<text x=\"18\" y=\"" << (kTop + kBottom) / 2
           << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 "
              "18 "
           << (kTop + kBottom) / 2 << ")\">" << escape(y_label_) << "</text>\n";

        for (std::size_t i = 0; i < series_.size(); ++i) {
            const auto& s = series_[i];
            const char* color = kPalette[i % 4];
            if (s.markers) {
                for (const auto& [x, y] : s.points)
                    os << "<circle cx=\"" << num(px(x)) << "\" cy=\""
                       << num(py(y)) << "\" r=\"3.5\" fill=\"" << color
                       << "\"/>\n";
            } else {
                os << "<polyline fill=\"none\" stroke=\"" << color
                   << "\" stroke-width=\"1.8\"";
                if (s.dashed) os << " stroke-dasharray=\"7 4\"";
                os << " points=\"";
                for (const auto& [x, y] : s.points)
                    os << num(px(x)) << "," << num(py(y)) << " ";
                os << "\"/>\n";
            }
        }

        // Legend, top-right inside the plot area.
        for (std::size_t i = 0; i < series_.size(); ++i) {
            const auto& s = series_[i];
            const char* color = kPalette[i % 4];
            const int y = kTop + 16 + 18 * static_cast<int>(i);
            if (s.markers) {
                os << "<circle cx=\"" << kRight - 150 << "\" cy=\"" << y - 4
                   << "\" r=\"3.5\" fill=\"" << color << "\"/>\n";
            } else {
                os << "<line x1=\"" << kRight - 160 << "\" y1=\"" << y - 4
                   << "\" x2=\"" << kRight - 140 << "\" y2=\"" << y - 4
                   << "\" stroke=\"" << color << "\" stroke-width=\"1.8\"";
                if (s.dashed) os << " stroke-dasharray=\"7 4\"";
                os << "/>\n";
            }
            os << "<text x=\"" << kRight - 132 << "\" y=\"" << y
               << "\" font-size=\"12\">" << escape(s.label) << "</text>\n";
        }
        os << "</svg>\n";
    }

private:
    struct Series {
        std::string label;
        std::vector<std::pair<double, double>> points;
        bool dashed = false;
        bool markers = false;
    };

    static constexpr int kWidth = 720, kHeight = 520;
    static constexpr int kLeft = 80, kRight = 700, kTop = 40, kBottom = 460;
    static constexpr int kTicks = 4;
    static constexpr const char* kPalette[4] = {"#1f6feb", "#d1242f", "#2da44e",
                                                "#8250df"};

    static std::string num(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return buf;
    }

    static std::string tick(double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.4g", v);
        return buf;
    }

    static std::string escape(const std::string& s) {
        std::string out;
        out.reserve(s.size());
        for (char c : s) {
            switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
            }
        }
        return out;
    }

    std::string title_, x_label_, y_label_;
    std::vector<Series> series_;
};

} // namespace cmsep
