#pragma once

#include <array>
#include <vector>

#include "slag/fit.hpp"
#include "slag/iwasawa.hpp"
#include "slag/lie.hpp"

namespace slag {

/// Angular grid over the maximal torus of K with weights summing to 1
/// (the K-measure is normalized to total mass 1).  Nodes follow a graded
/// periodic parameterization that clusters where the integrand peaks, so
/// the node count stays flat in t; see the builder for details.
struct QuadratureGrid {
    std::vector<std::array<double, 2>> nodes;  // angles; second entry unused for one circle
    std::vector<double> weights;
    int circles = 1;
    int nodes_per_circle = 0;

    static QuadratureGrid build(const GroupSpec& spec, int nodes_per_circle);
};

/// Harish-Chandra function at the boost a_t:
///   Xi(a_t) = int_K exp(-rho(H(k a_t^{-1}))) dk
/// by trapezoidal quadrature (spectrally accurate for the periodic
/// integrand).  Supported specs: (1,2) and (2,2).
double xi_value(const GroupSpec& spec, double t, const QuadratureGrid& grid);

/// Evaluates at the given resolution and at twice it; throws
/// std::runtime_error when the two disagree by more than 1e-6.
double xi_value_checked(const GroupSpec& spec, double t, int nodes_per_circle);

struct XiSample {
    double t = 0.0;
    double xi = 0.0;
    double log_xi = 0.0;
};

struct XiFitReport {
    /// decay rate r from the log-corrected model  log Xi = -r t + d log t + c,
    /// d = number of positive restricted roots not vanishing on H
    FitResult log_corrected;
    /// decay rate from the plain model  log Xi = -r t + c
    FitResult pure_exponential;
    int log_degree = 1;
    double rho_H_expected = 0.0;
    std::vector<XiSample> samples;
};

/// Core regression, exposed for synthetic-data tests: returns r (positive
/// decay rate) fitted from log Xi = -r t + log_degree * log t + c.
FitResult fit_decay_model(const std::vector<double>& ts, const std::vector<double>& log_xis,
                          int log_degree);

/// Polynomial degree of the spherical-function asymptotic along the boost:
/// the number of distinct positive restricted roots with alpha(H_1) > 0.
int xi_log_degree(const GroupSpec& spec);

/// Samples Xi(a_t) on [t_min, t_max] and fits both decay models.
/// t_min >= 4 (asymptotic regime), samples >= 8.
XiFitReport xi_decay_fit(const GroupSpec& spec, double t_min, double t_max, int samples,
                         int nodes_per_circle = 1024);

}  // namespace slag
