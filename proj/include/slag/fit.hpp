#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace slag {

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
inline FitResult linear_fit(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("linear_fit: need at least two matched points");
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-300) throw std::invalid_argument("linear_fit: degenerate abscissae");
    FitResult f;
    f.slope = (n * sxy - sx * sy) / denom;
    f.intercept = (sy - f.slope * sx) / n;
    double ss_res = 0, ss_tot = 0, mean_y = sy / n;
    for (size_t i = 0; i < xs.size(); ++i) {
        double resid = ys[i] - (f.slope * xs[i] + f.intercept);
        ss_res += resid * resid;
        ss_tot += (ys[i] - mean_y) * (ys[i] - mean_y);
    }
    f.r_squared = ss_tot > 0 ? std::max(0.0, 1.0 - ss_res / ss_tot) : 1.0;
    return f;
}

}  // namespace slag
