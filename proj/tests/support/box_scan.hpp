#pragma once

// Brute-force oracles for the enumeration paths: scan the full coordinate
// box implied by the majorant and test every vector directly.  Deliberately
// independent of the backtracking enumerator.

#include <algorithm>
#include <vector>

#include "slag/enumerate.hpp"
#include "slag/lattice.hpp"
#include "slag/majorant.hpp"

namespace slag_test {

inline std::vector<long long> box_radii(const slag::MajorantForm& M, double bound) {
    // |x_i| <= sqrt(bound * (M^{-1})_ii); +1 covers rounding
    Eigen::MatrixXd Minv = M.matrix.inverse();
    std::vector<long long> r(M.rank);
    for (int i = 0; i < M.rank; ++i)
        r[i] = static_cast<long long>(std::floor(std::sqrt(bound * Minv(i, i)) + 1e-9)) + 1;
    return r;
}

template <class Visit>
void scan_box(const std::vector<long long>& radii, Visit&& visit) {
    const int n = static_cast<int>(radii.size());
    slag::VecZ v(n);
    for (int i = 0; i < n; ++i) v(i) = -radii[i];
    while (true) {
        visit(v);
        int i = 0;
        while (i < n && v(i) == radii[i]) {
            v(i) = -radii[i];
            ++i;
        }
        if (i == n) break;
        v(i) += 1;
    }
}

/// All nonzero vectors with the enumerator's own m-value <= bound, sorted.
inline std::vector<slag::VecZ> box_scan_ball(const slag::MajorantForm& M, double bound) {
    std::vector<slag::VecZ> out;
    scan_box(box_radii(M, bound), [&](const slag::VecZ& v) {
        if (v.isZero()) return;
        if (slag::m_via_cholesky(M, v) <= bound) out.push_back(v);
    });
    std::sort(out.begin(), out.end(), [](const slag::VecZ& a, const slag::VecZ& b) {
        for (int i = 0; i < a.size(); ++i)
            if (a(i) != b(i)) return a(i) < b(i);
        return false;
    });
    return out;
}

/// Primitive isotropic count with M-value <= 2 V^2, matching the census
/// bucket rule (relative 1e-9 slack on the threshold).
inline long long box_scan_isotropic_count(const slag::GramLattice& L,
                                          const slag::MajorantForm& M, double V) {
    const double threshold = 2.0 * V * V;
    long long count = 0;
    scan_box(box_radii(M, threshold * (1 + 1e-9)), [&](const slag::VecZ& v) {
        if (v.isZero()) return;
        if (L.q_value(v) != 0) return;
        if (!slag::is_primitive(v)) return;
        if (slag::m_via_cholesky(M, v) <= threshold * (1.0 + 1e-9)) ++count;
    });
    return count;
}

}  // namespace slag_test
