#include "slag/enumerate.hpp"

#include <algorithm>
#include <cmath>

namespace slag {

namespace {

constexpr double kRelMargin = 1e-12;

double margin_bound(double bound) { return bound * (1.0 + kRelMargin) + 1e-12; }

long long isqrt_i128(__int128 d) {
    if (d < 0) return -1;
    long long s = static_cast<long long>(std::sqrt(static_cast<double>(d)));
    while (s > 0 && static_cast<__int128>(s) * s > d) --s;
    while (static_cast<__int128>(s + 1) * (s + 1) <= d) ++s;
    return s;
}

/// Fincke-Pohst backtracking over the Cholesky factor R (M = R^T R).
/// t_i = R_ii x_i + sum_{j>i} R_ij x_j and M(v) = sum t_i^2; fixing
/// coordinates from the top, the running sum prunes the tree.
struct Walker {
    const Eigen::MatrixXd& R;
    const MatZ* gram = nullptr;  // set in isotropic mode
    int n;
    double bound_exact;
    double bound_soft;
    VecZ x;

    // enumerate mode
    const std::function<bool(const VecZ&, double)>* yield = nullptr;
    bool stopped = false;

    // isotropic mode
    const std::function<void(const VecZ&, double)>* visit = nullptr;

    explicit Walker(const MajorantForm& M)
        : R(M.cholesky), n(M.rank), bound_exact(0), bound_soft(0), x(VecZ::Zero(M.rank)) {}

    void level_bounds(int i, double partial, double budget, long long& lo, long long& hi) const {
        double rii = R(i, i);
        double hw = std::sqrt(std::max(0.0, budget));
        lo = static_cast<long long>(std::ceil((-hw - partial) / rii - 1e-9));
        hi = static_cast<long long>(std::floor((hw - partial) / rii + 1e-9));
    }

    void run_enumerate(long long top_lo, long long top_hi) {
        if (n == 1) {
            // degenerate rank: handle the single level directly
            double rii = R(0, 0);
            for (long long v = top_lo; v <= top_hi && !stopped; ++v) {
                if (v == 0) continue;
                double t = rii * v;
                double m = t * t;
                if (m <= bound_exact) {
                    x(0) = v;
                    if (!(*yield)(x, m)) stopped = true;
                }
            }
            return;
        }
        descend_enumerate(n - 1, 0.0, true, top_lo, top_hi);
    }

    void descend_enumerate(int i, double sumsq, bool zero_above, long long forced_lo,
                           long long forced_hi) {
        double partial = 0.0;
        for (int j = i + 1; j < n; ++j) partial += R(i, j) * x(j);
        long long lo, hi;
        level_bounds(i, partial, bound_soft - sumsq, lo, hi);
        if (i == n - 1) {
            lo = std::max(lo, forced_lo);
            hi = std::min(hi, forced_hi);
        }
        for (long long v = lo; v <= hi && !stopped; ++v) {
            double t = R(i, i) * v + partial;
            double ss = sumsq + t * t;
            if (ss > bound_soft) continue;
            x(i) = v;
            if (i == 0) {
                if (!(zero_above && v == 0) && ss <= bound_exact) {
                    if (!(*yield)(x, ss)) stopped = true;
                }
            } else {
                descend_enumerate(i - 1, ss, zero_above && v == 0, forced_lo, forced_hi);
            }
        }
        x(i) = 0;
    }

    void run_isotropic(long long top_lo, long long top_hi) {
        if (n == 1) {
            // Q(v) = g00 v^2 = 0 has nonzero solutions only for g00 = 0
            if ((*gram)(0, 0) == 0) {
                double rii = R(0, 0);
                for (long long v = top_lo; v <= top_hi; ++v) {
                    if (v == 0) continue;
                    double t = rii * v;
                    if (t * t <= bound_soft) {
                        x(0) = v;
                        (*visit)(x, t * t);
                    }
                }
            }
            return;
        }
        descend_isotropic(n - 1, 0.0, 0, true, top_lo, top_hi);
    }

    void descend_isotropic(int i, double sumsq, long long qfix, bool zero_above,
                           long long forced_lo, long long forced_hi) {
        double partial = 0.0;
        long long qlin = 0;
        for (int j = i + 1; j < n; ++j) {
            partial += R(i, j) * x(j);
            qlin += (*gram)(i, j) * x(j);
        }
        long long lo, hi;
        level_bounds(i, partial, bound_soft - sumsq, lo, hi);
        if (i == n - 1) {
            lo = std::max(lo, forced_lo);
            hi = std::min(hi, forced_hi);
        }
        if (i > 0) {
            for (long long v = lo; v <= hi; ++v) {
                double t = R(i, i) * v + partial;
                double ss = sumsq + t * t;
                if (ss > bound_soft) continue;
                x(i) = v;
                long long qnext = qfix + v * ((*gram)(i, i) * v + 2 * qlin);
                descend_isotropic(i - 1, ss, qnext, zero_above && v == 0, forced_lo, forced_hi);
            }
            x(i) = 0;
            return;
        }

        // Innermost level: Q(v) = a x0^2 + b x0 + c with the suffix fixed.
        const long long a = (*gram)(0, 0);
        const long long b = 2 * qlin;
        const long long c = qfix;
        long long roots[2];
        int nroots = 0;
        if (a == 0 && b == 0) {
            if (c == 0) {
                // whole fiber isotropic; fall back to the plain loop
                for (long long v = lo; v <= hi; ++v) {
                    if (zero_above && v == 0) continue;
                    double t = R(0, 0) * v + partial;
                    double ss = sumsq + t * t;
                    if (ss > bound_soft) continue;
                    x(0) = v;
                    (*visit)(x, ss);
                }
                x(0) = 0;
            }
            return;
        } else if (a == 0) {
            if (c % b == 0) roots[nroots++] = -c / b;
        } else {
            __int128 disc = static_cast<__int128>(b) * b - static_cast<__int128>(4) * a * c;
            if (disc < 0) return;
            long long s = isqrt_i128(disc);
            if (static_cast<__int128>(s) * s != disc) return;
            long long den = 2 * a;
            long long num1 = -b - s, num2 = -b + s;
            if (num1 % den == 0) roots[nroots++] = num1 / den;
            if (s != 0 && num2 % den == 0) roots[nroots++] = num2 / den;
            if (nroots == 2 && roots[0] > roots[1]) std::swap(roots[0], roots[1]);
        }
        for (int r = 0; r < nroots; ++r) {
            long long v = roots[r];
            if (zero_above && v == 0) continue;
            double t = R(0, 0) * v + partial;
            double ss = sumsq + t * t;
            if (ss > bound_soft) continue;
            x(0) = v;
            (*visit)(x, ss);
        }
        x(0) = 0;
    }
};

}  // namespace

double m_via_cholesky(const MajorantForm& M, const VecZ& v) {
    const Eigen::MatrixXd& R = M.cholesky;
    double acc = 0.0;
    for (int i = M.rank - 1; i >= 0; --i) {
        double partial = 0.0;
        for (int j = i + 1; j < M.rank; ++j) partial += R(i, j) * static_cast<double>(v(j));
        double t = R(i, i) * static_cast<double>(v(i)) + partial;
        acc += t * t;
    }
    return acc;
}

std::pair<long long, long long> top_coordinate_range(const MajorantForm& M, double bound) {
    if (bound <= 0) return {0, -1};
    int i = M.rank - 1;
    double hw = std::sqrt(margin_bound(bound)) / M.cholesky(i, i);
    auto h = static_cast<long long>(std::floor(hw + 1e-9));
    return {-h, h};
}

void enumerate_ball(const MajorantForm& M, double bound,
                    const std::function<bool(const VecZ&, double)>& yield) {
    auto [lo, hi] = top_coordinate_range(M, bound);
    enumerate_ball_partition(M, bound, lo, hi, yield);
}

void enumerate_ball_partition(const MajorantForm& M, double bound, long long top_lo,
                              long long top_hi,
                              const std::function<bool(const VecZ&, double)>& yield) {
    if (bound <= 0 || top_lo > top_hi) return;
    Walker w(M);
    w.bound_exact = bound;
    w.bound_soft = margin_bound(bound);
    w.yield = &yield;
    w.run_enumerate(top_lo, top_hi);
}

void isotropic_ball_walk(const GramLattice& L, const MajorantForm& M, double bound,
                         long long top_lo, long long top_hi,
                         const std::function<void(const VecZ&, double)>& visit) {
    if (bound <= 0 || top_lo > top_hi) return;
    Walker w(M);
    w.gram = &L.gram();
    w.bound_exact = bound;
    w.bound_soft = margin_bound(bound);
    w.visit = &visit;
    w.run_isotropic(top_lo, top_hi);
}

}  // namespace slag
