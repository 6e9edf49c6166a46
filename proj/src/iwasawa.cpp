#include "slag/iwasawa.hpp"

#include <cmath>
#include <stdexcept>

namespace slag {

namespace {

constexpr double kFormTol = 1e-9;

void check_form(const Eigen::MatrixXd& m, const Eigen::MatrixXd& J, const char* what) {
    double err = (m.transpose() * J * m - J).cwiseAbs().maxCoeff();
    if (err > kFormTol)
        throw std::invalid_argument(std::string(what) + ": matrix does not preserve the form");
}

Eigen::MatrixXd rotation_block(int size, int first, double angle) {
    Eigen::MatrixXd r = Eigen::MatrixXd::Identity(size, size);
    r(first, first) = std::cos(angle);
    r(first + 1, first + 1) = std::cos(angle);
    r(first, first + 1) = -std::sin(angle);
    r(first + 1, first) = std::sin(angle);
    return r;
}

}  // namespace

Eigen::MatrixXd flag_change_of_basis(const GroupSpec& spec) {
    const int p = spec.p, n = spec.n();
    const double rt = 1.0 / std::sqrt(2.0);
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < p; ++i) {
        // column i: f_{i+1}; column n-1-i: f'_{i+1}
        S(i, i) = rt;
        S(p + i, i) = rt;
        S(i, n - 1 - i) = rt;
        S(p + i, n - 1 - i) = -rt;
    }
    for (int j = 0; j < spec.q - p; ++j) S(2 * p + j, p + j) = 1.0;
    return S;
}

Eigen::MatrixXd form_matrix(const GroupSpec& spec, BasisKind basis) {
    const int p = spec.p, n = spec.n();
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    if (basis == BasisKind::diagonal) {
        for (int i = 0; i < n; ++i) J(i, i) = i < p ? 1.0 : -1.0;
    } else {
        for (int i = 0; i < p; ++i) {
            J(i, n - 1 - i) = 1.0;
            J(n - 1 - i, i) = 1.0;
        }
        for (int j = p; j < n - p; ++j) J(j, j) = -1.0;
    }
    return J;
}

GroupElement to_basis(const GroupElement& g, BasisKind target) {
    if (g.basis == target) return g;
    Eigen::MatrixXd S = flag_change_of_basis(g.spec);
    GroupElement out;
    out.spec = g.spec;
    out.basis = target;
    // S is Euclidean-orthogonal, so S^{-1} = S^T
    if (target == BasisKind::hyperbolic)
        out.matrix = S.transpose() * g.matrix * S;
    else
        out.matrix = S * g.matrix * S.transpose();
    return out;
}

GroupElement make_group_element(Eigen::MatrixXd m, const GroupSpec& spec, BasisKind basis) {
    if (m.rows() != spec.n() || m.cols() != spec.n())
        throw std::invalid_argument("GroupElement: matrix size != p+q");
    check_form(m, form_matrix(spec, basis), "GroupElement");
    return GroupElement{std::move(m), spec, basis};
}

GroupElement torus_element(const GroupSpec& spec, const Eigen::VectorXd& H, BasisKind basis) {
    if (H.size() != spec.p) throw std::invalid_argument("torus_element: H length != p");
    const int n = spec.n();
    Eigen::MatrixXd a = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < spec.p; ++i) {
        a(i, i) = std::exp(H(i));
        a(n - 1 - i, n - 1 - i) = std::exp(-H(i));
    }
    GroupElement g{std::move(a), spec, BasisKind::hyperbolic};
    return basis == BasisKind::hyperbolic ? g : to_basis(g, basis);
}

GroupElement boost_a_t(const GroupSpec& spec, double t, BasisKind basis) {
    Eigen::VectorXd H = Eigen::VectorXd::Zero(spec.p);
    H(0) = t;
    return torus_element(spec, H, basis);
}

GroupElement compact_from_angles(const GroupSpec& spec, const std::vector<double>& angles) {
    const int p = spec.p, q = spec.q, n = spec.n();
    const size_t expected = static_cast<size_t>(p / 2 + q / 2);
    if (angles.size() != expected)
        throw std::invalid_argument("compact_from_angles: expected floor(p/2)+floor(q/2) angles");
    Eigen::MatrixXd k = Eigen::MatrixXd::Identity(n, n);
    size_t idx = 0;
    for (int i = 0; i + 1 < p; i += 2) {
        Eigen::MatrixXd r = rotation_block(n, i, angles[idx++]);
        k = r * k;
    }
    for (int i = 0; i + 1 < q; i += 2) {
        Eigen::MatrixXd r = rotation_block(n, p + i, angles[idx++]);
        k = r * k;
    }
    return GroupElement{std::move(k), spec, BasisKind::diagonal};
}

GroupElement random_compact(const GroupSpec& spec, std::mt19937_64& rng) {
    const int p = spec.p, q = spec.q, n = spec.n();
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::MatrixXd k = Eigen::MatrixXd::Zero(n, n);
    auto fill_block = [&](int off, int size) {
        Eigen::MatrixXd g(size, size);
        for (int i = 0; i < size; ++i)
            for (int j = 0; j < size; ++j) g(i, j) = gauss(rng);
        Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
        Eigen::MatrixXd Q = qr.householderQ();
        k.block(off, off, size, size) = Q;
    };
    fill_block(0, p);
    fill_block(p, q);
    return GroupElement{std::move(k), spec, BasisKind::diagonal};
}

GroupElement random_unipotent(const GroupSpec& spec, std::mt19937_64& rng, double scale) {
    const int p = spec.p, n = spec.n();
    Eigen::MatrixXd J = form_matrix(spec, BasisKind::hyperbolic);
    std::uniform_real_distribution<double> coef(-scale, scale);
    Eigen::MatrixXd X = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool i_mid = (i >= p && i < n - p);
            bool j_mid = (j >= p && j < n - p);
            if (i_mid && j_mid) continue;  // middle pairs generate compact rotations, not N
            // E_ij - J E_ji J lies in the Lie algebra and is strictly upper
            Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
            C(i, j) = 1.0;
            Eigen::MatrixXd Eji = Eigen::MatrixXd::Zero(n, n);
            Eji(j, i) = 1.0;
            C -= J * Eji * J;
            if (C.cwiseAbs().maxCoeff() < 1e-15) continue;
            X += coef(rng) * C;
        }
    }
    // X is strictly upper triangular, hence nilpotent: the series is finite
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd expX = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k < n; ++k) {
        term = term * X / static_cast<double>(k);
        expX += term;
    }
    return GroupElement{std::move(expX), spec, BasisKind::hyperbolic};
}

Eigen::VectorXd iwasawa_H_from_flag(const Eigen::MatrixXd& h_flag, int p) {
    const int n = static_cast<int>(h_flag.rows());
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(h_flag);
    Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    Eigen::VectorXd Hp(p);
    double dmin = 1e300, dmax = 0;
    for (int i = 0; i < n; ++i) {
        double d = std::abs(R(i, i));
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
    }
    if (dmin <= 0 || dmax / dmin > 1e12)
        throw std::runtime_error("iwasawa: numerically degenerate input");
    for (int i = 0; i < p; ++i) Hp(i) = std::log(std::abs(R(i, i)));
    return Hp;
}

IwasawaTriple iwasawa(const GroupElement& g) {
    const GroupSpec& spec = g.spec;
    if (spec.n() > 6) throw std::invalid_argument("iwasawa: supported for p+q <= 6 only");
    GroupElement gf = to_basis(g, BasisKind::hyperbolic);
    Eigen::MatrixXd J = form_matrix(spec, BasisKind::hyperbolic);
    check_form(gf.matrix, J, "iwasawa");

    const int n = spec.n(), p = spec.p;
    // g = n a k  <=>  g^{-1} = k^{-1} a^{-1} n^{-1} in K(AN);the QR of
    // g^{-1} with positive diagonal is exactly that splitting.
    Eigen::MatrixXd h = gf.matrix.inverse();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(h);
    Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    Eigen::MatrixXd Q = qr.householderQ();
    for (int i = 0; i < n; ++i) {
        if (R(i, i) < 0) {
            R.row(i) *= -1.0;
            Q.col(i) *= -1.0;
        }
    }
    double dmin = 1e300, dmax = 0;
    for (int i = 0; i < n; ++i) {
        dmin = std::min(dmin, R(i, i));
        dmax = std::max(dmax, R(i, i));
    }
    if (dmin <= 0 || dmax / dmin > 1e12)
        throw std::runtime_error("iwasawa: numerically degenerate input");

    Eigen::VectorXd H(p);
    for (int i = 0; i < p; ++i) H(i) = -std::log(R(i, i));

    // a' n' = R with a' = exp(-H); n = (n')^{-1}, k = Q^{-1} = Q^T.
    Eigen::MatrixXd a_prime_inv = Eigen::MatrixXd::Identity(n, n);
    for (int i = 0; i < p; ++i) {
        a_prime_inv(i, i) = std::exp(H(i));
        a_prime_inv(n - 1 - i, n - 1 - i) = std::exp(-H(i));
    }
    Eigen::MatrixXd n_prime = a_prime_inv * R;
    Eigen::MatrixXd n_mat = n_prime.inverse();

    IwasawaTriple triple{
        GroupElement{std::move(n_mat), spec, BasisKind::hyperbolic},
        std::move(H),
        to_basis(GroupElement{Q.transpose(), spec, BasisKind::hyperbolic}, BasisKind::diagonal),
    };
    return triple;
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
    if (!(a.spec == b.spec)) throw std::invalid_argument("compose: mismatched specs");
    GroupElement bb = to_basis(b, a.basis);
    return GroupElement{a.matrix * bb.matrix, a.spec, a.basis};
}

}  // namespace slag
