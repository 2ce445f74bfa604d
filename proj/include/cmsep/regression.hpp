#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

// Ordinary least squares with intercept, via centered sums.

namespace cmsep {

struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::vector<double> residuals;
};

inline RegressionFit fit_linear(const std::vector<std::pair<double, double>>& pts) {
    const std::size_t n = pts.size();
    if (n < 2)
        throw std::domain_error("linear fit needs at least 2 points");

    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : pts) { mx += x; my += y; }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0, ymax = 0.0;
    for (const auto& [x, y] : pts) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
        syy += (y - my) * (y - my);
        ymax = std::max(ymax, std::abs(y));
    }
    if (sxx == 0.0)
        throw std::domain_error("degenerate fit: all x values identical");

    RegressionFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.residuals.reserve(n);
    double ss_res = 0.0;
    for (const auto& [x, y] : pts) {
        const double r = y - (fit.slope * x + fit.intercept);
        fit.residuals.push_back(r);
        ss_res += r * r;
    }
    // Constant-y data leaves ss_tot at (or within rounding of) zero with all
    // residuals vanishing; define r^2 = 1 there rather than evaluating 0/0.
    const double tot_floor =
        1e-28 * static_cast<double>(n) * std::max(1.0, ymax * ymax);
    if (syy <= tot_floor)
        fit.r_squared = 1.0;
    else
        fit.r_squared = std::clamp(1.0 - ss_res / syy, 0.0, 1.0);
    return fit;
}

inline RegressionFit fit_linear(const std::vector<double>& xs,
                                const std::vector<double>& ys) {
    if (xs.size() != ys.size())
        throw std::domain_error("x and y lengths differ");
    std::vector<std::pair<double, double>> pts;
    pts.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) pts.emplace_back(xs[i], ys[i]);
    return fit_linear(pts);
}

} // namespace cmsep
