#include "slag/lattice.hpp"

#include <cctype>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace slag {

namespace {

RatMat rat_from_int(const MatZ& m) {
    RatMat r(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

RatMat rat_column(const VecZ& v) {
    RatMat r(static_cast<int>(v.size()), 1);
    for (int i = 0; i < v.size(); ++i) r(i, 0) = Rational(v(i));
    return r;
}

Rational rat_det(RatMat a) {
    const int n = a.rows();
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col).num() != 0) { piv = r; break; }
        if (piv < 0) return Rational(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
            det = -det;
        }
        det *= a(col, col);
        for (int r = col + 1; r < n; ++r) {
            Rational f = a(r, col) / a(col, col);
            if (f.num() == 0) continue;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return det;
}

}  // namespace

GramLattice::GramLattice(MatZ gram) : gram_(std::move(gram)) {
    if (gram_.rows() != gram_.cols() || gram_.rows() == 0)
        throw std::invalid_argument("GramLattice: gram matrix must be square and non-empty");
    if (gram_ != MatZ(gram_.transpose()))
        throw std::invalid_argument("GramLattice: gram matrix must be symmetric");
    rank_ = static_cast<int>(gram_.rows());
    gram_d_ = gram_.cast<double>();
    signature_ = exact_signature(gram_);
}

GramLattice GramLattice::U() {
    MatZ g(2, 2);
    g << 0, 1, 1, 0;
    GramLattice L(std::move(g));
    L.spec_string_ = "U";
    return L;
}

GramLattice GramLattice::E8_minus() {
    // Bourbaki node ordering: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
    static const int edges[][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
    MatZ g = MatZ::Zero(8, 8);
    for (int i = 0; i < 8; ++i) g(i, i) = -2;
    for (const auto& e : edges) {
        g(e[0], e[1]) = 1;
        g(e[1], e[0]) = 1;
    }
    GramLattice L(std::move(g));
    L.spec_string_ = "E8m";
    return L;
}

GramLattice GramLattice::direct_sum(const std::vector<GramLattice>& parts) {
    if (parts.empty()) throw std::invalid_argument("direct_sum: empty part list");
    int n = 0;
    for (const auto& p : parts) n += p.rank();
    MatZ g = MatZ::Zero(n, n);
    int off = 0;
    std::string spec;
    for (const auto& p : parts) {
        g.block(off, off, p.rank(), p.rank()) = p.gram();
        off += p.rank();
        if (!spec.empty()) spec += "+";
        spec += p.spec_string().empty() ? "?" : p.spec_string();
    }
    GramLattice L(std::move(g));
    L.spec_string_ = spec;
    return L;
}

GramLattice GramLattice::parse(const std::string& spec) {
    std::vector<GramLattice> parts;
    size_t pos = 0;
    while (pos <= spec.size()) {
        size_t next = spec.find('+', pos);
        std::string tok = spec.substr(pos, next == std::string::npos ? next : next - pos);
        if (tok.empty()) throw std::invalid_argument("lattice spec: empty term in '" + spec + "'");
        size_t i = 0;
        while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i]))) ++i;
        long long count = i == 0 ? 1 : std::stoll(tok.substr(0, i));
        std::string name = tok.substr(i);
        if (count < 1) throw std::invalid_argument("lattice spec: bad multiplicity in '" + tok + "'");
        for (long long c = 0; c < count; ++c) {
            if (name == "U")
                parts.push_back(U());
            else if (name == "E8m")
                parts.push_back(E8_minus());
            else
                throw std::invalid_argument("lattice spec: unknown lattice '" + name + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (parts.size() == 1) return parts[0];
    GramLattice L = direct_sum(parts);
    L.spec_string_ = spec;
    return L;
}

long long GramLattice::q_value(const VecZ& v) const {
    if (v.size() != rank_) throw std::invalid_argument("q_value: vector length != rank");
    long long acc = 0;
    for (int i = 0; i < rank_; ++i) {
        long long row = 0;
        for (int j = 0; j < rank_; ++j) row += gram_(i, j) * v(j);
        acc += v(i) * row;
    }
    return acc;
}

long long GramLattice::pairing(const VecZ& v, const VecZ& w) const {
    if (v.size() != rank_ || w.size() != rank_)
        throw std::invalid_argument("pairing: vector length != rank");
    long long acc = 0;
    for (int i = 0; i < rank_; ++i) {
        long long row = 0;
        for (int j = 0; j < rank_; ++j) row += gram_(i, j) * w(j);
        acc += v(i) * row;
    }
    return acc;
}

double GramLattice::pairing_d(const Eigen::VectorXd& v, const Eigen::VectorXd& w) const {
    return v.dot(gram_d_ * w);
}

bool GramLattice::is_even() const {
    for (int i = 0; i < rank_; ++i)
        if (gram_(i, i) % 2 != 0) return false;
    return true;
}

Rational GramLattice::determinant() const { return exact_determinant(gram_); }

bool is_primitive(const VecZ& v) {
    long long g = 0;
    for (int i = 0; i < v.size(); ++i) g = std::gcd(g, v(i));
    return g == 1;
}

bool is_isotropic(const GramLattice& L, const VecZ& v) { return L.q_value(v) == 0; }

std::vector<VecZ> parse_vector_exprs(const std::string& text, int rank) {
    std::vector<VecZ> out;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(',', pos);
        std::string expr = text.substr(pos, next == std::string::npos ? next : next - pos);
        VecZ v = VecZ::Zero(rank);
        size_t i = 0;
        auto skip_ws = [&]() { while (i < expr.size() && std::isspace(static_cast<unsigned char>(expr[i]))) ++i; };
        skip_ws();
        if (i == expr.size()) throw std::invalid_argument("plane: empty vector expression");
        while (i < expr.size()) {
            long long sign = 1;
            if (expr[i] == '+' || expr[i] == '-') {
                sign = expr[i] == '-' ? -1 : 1;
                ++i;
                skip_ws();
            }
            long long coeff = 1;
            size_t d0 = i;
            while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
            if (i > d0) coeff = std::stoll(expr.substr(d0, i - d0));
            if (i >= expr.size() || expr[i] != 'e')
                throw std::invalid_argument("plane: expected 'e<index>' in '" + expr + "'");
            ++i;
            size_t e0 = i;
            while (i < expr.size() && std::isdigit(static_cast<unsigned char>(expr[i]))) ++i;
            if (i == e0) throw std::invalid_argument("plane: missing basis index in '" + expr + "'");
            long long idx = std::stoll(expr.substr(e0, i - e0));
            if (idx < 1 || idx > rank)
                throw std::invalid_argument("plane: basis index out of range in '" + expr + "'");
            v(idx - 1) += sign * coeff;
            skip_ws();
        }
        out.push_back(std::move(v));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

std::pair<int, int> exact_signature(const MatZ& gram) {
    int n = static_cast<int>(gram.rows());
    RatMat a = rat_from_int(gram);
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;
    int pos = 0, neg = 0;

    while (!active.empty()) {
        // Prefer a nonzero diagonal pivot; otherwise manufacture one by a
        // congruence row+column addition (keeps Sylvester inertia intact).
        int pi = -1;
        for (int i : active)
            if (a(i, i).num() != 0) { pi = i; break; }
        if (pi < 0) {
            int oi = -1, oj = -1;
            for (size_t x = 0; x < active.size() && oi < 0; ++x)
                for (size_t y = x + 1; y < active.size(); ++y)
                    if (a(active[x], active[y]).num() != 0) {
                        oi = active[x];
                        oj = active[y];
                        break;
                    }
            if (oi < 0) throw std::domain_error("signature: degenerate form");
            for (int k : active) a(oi, k) += a(oj, k);
            for (int k : active) a(k, oi) += a(k, oj);
            pi = oi;
        }
        Rational pivot = a(pi, pi);
        if (pivot.sign() > 0)
            ++pos;
        else
            ++neg;
        std::vector<int> rest;
        rest.reserve(active.size() - 1);
        for (int k : active)
            if (k != pi) rest.push_back(k);
        for (int r : rest) {
            Rational f = a(r, pi) / pivot;
            if (f.num() == 0) continue;
            for (int c : rest) a(r, c) -= f * a(pi, c);
        }
        active = std::move(rest);
    }
    if (pos + neg != n) throw std::domain_error("signature: degenerate form");
    return {pos, neg};
}

Rational exact_determinant(const MatZ& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square matrix");
    return rat_det(rat_from_int(m));
}

// --- PositivePlane -------------------------------------------------------

PositivePlane::PositivePlane(GramLattice L, Eigen::MatrixXd basis, std::optional<ExactData> exact)
    : lattice_(std::move(L)), basis_(std::move(basis)), exact_(std::move(exact)) {
    const int n = lattice_.rank();
    const int p = static_cast<int>(basis_.cols());
    if (p == 0) {
        projector_ = Eigen::MatrixXd::Zero(n, n);
        return;
    }
    const Eigen::MatrixXd& Q = lattice_.gram_d();
    Eigen::MatrixXd gramP = basis_.transpose() * Q * basis_;
    Eigen::LLT<Eigen::MatrixXd> llt(gramP);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("PositivePlane: form is not positive definite on the span");
    projector_ = basis_ * llt.solve(basis_.transpose() * Q);
}

PositivePlane PositivePlane::from_vectors(const GramLattice& L, const std::vector<VecZ>& vectors) {
    const int n = L.rank();
    const int p = static_cast<int>(vectors.size());
    for (const auto& v : vectors)
        if (v.size() != n) throw std::invalid_argument("PositivePlane: vector length != rank");

    std::optional<ExactData> exact;
    if (p > 0) {
        RatMat B(n, p);
        for (int j = 0; j < p; ++j)
            for (int i = 0; i < n; ++i) B(i, j) = Rational(vectors[j](i));
        RatMat Q = rat_from_int(L.gram());
        RatMat G = B.transpose() * Q * B;
        // Positive definiteness via leading principal minors, exactly.
        for (int k = 1; k <= p; ++k) {
            RatMat lead(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) lead(i, j) = G(i, j);
            if (!(rat_det(lead) > Rational(0)))
                throw std::invalid_argument("PositivePlane: form is not positive definite on the span");
        }
        ExactData ed;
        ed.basis = B;
        ed.projector = B * G.inverse() * B.transpose() * Q;
        exact = std::move(ed);
    } else {
        ExactData ed;
        ed.basis = RatMat(n, 0);
        ed.projector = RatMat(n, n);  // zero projector
        exact = std::move(ed);
    }

    Eigen::MatrixXd basis(n, p);
    for (int j = 0; j < p; ++j)
        for (int i = 0; i < n; ++i) basis(i, j) = static_cast<double>(vectors[j](i));
    return PositivePlane(L, std::move(basis), std::move(exact));
}

PositivePlane PositivePlane::from_seed(const GramLattice& L, std::uint64_t seed) {
    const int n = L.rank();
    const int p = L.signature().first;
    if (p == 0) return from_vectors(L, {});

    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() {
        // explicit mapping keeps the stream implementation-independent
        return static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0) * 2.0 - 1.0;
    };
    const Eigen::MatrixXd& Q = L.gram_d();

    for (int attempt = 0; attempt < 100; ++attempt) {
        Eigen::MatrixXd B(n, p);
        for (int j = 0; j < p; ++j)
            for (int i = 0; i < n; ++i) B(i, j) = uniform();
        // Gram-Schmidt with respect to the form; a draw fails when any
        // pivot is not safely positive.
        bool ok = true;
        for (int j = 0; j < p && ok; ++j) {
            Eigen::VectorXd w = B.col(j);
            for (int k = 0; k < j; ++k) {
                double num = B.col(k).dot(Q * w);
                w -= num * B.col(k);
            }
            double qn = w.dot(Q * w);
            if (qn < 1e-6 * std::max(1.0, w.squaredNorm())) {
                ok = false;
                break;
            }
            B.col(j) = w / std::sqrt(qn);
        }
        if (!ok) continue;
        return PositivePlane(L, std::move(B), std::nullopt);
    }
    throw std::runtime_error("PositivePlane: no positive-definite plane found in 100 attempts");
}

PositivePlane PositivePlane::from_basis(const GramLattice& L, Eigen::MatrixXd basis) {
    if (basis.rows() != L.rank()) throw std::invalid_argument("PositivePlane: basis rows != rank");
    return PositivePlane(L, std::move(basis), std::nullopt);
}

const RatMat& PositivePlane::projector_exact() const {
    if (!exact_) throw std::logic_error("PositivePlane: no exact data (seeded plane)");
    return exact_->projector;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> PositivePlane::project(const Eigen::VectorXd& v) const {
    if (v.size() != lattice_.rank()) throw std::invalid_argument("project: vector length != rank");
    Eigen::VectorXd vp = projector_ * v;
    return {vp, v - vp};
}

double PositivePlane::projection_q_norm(const VecZ& v) const {
    Eigen::VectorXd vd = v.cast<double>();
    Eigen::VectorXd vp = projector_ * vd;
    return lattice_.pairing_d(vp, vp);
}

Eigen::VectorXd PositivePlane::reflect_e_prime(const VecZ& e) const {
    if (!is_isotropic(lattice_, e))
        throw std::domain_error("reflect_e_prime: input vector is not isotropic");
    Eigen::VectorXd ed = e.cast<double>();
    return 2.0 * (projector_ * ed) - ed;
}

RatVec PositivePlane::reflect_e_prime_exact(const VecZ& e) const {
    if (!is_isotropic(lattice_, e))
        throw std::domain_error("reflect_e_prime: input vector is not isotropic");
    const RatMat& P = projector_exact();
    RatMat ev = rat_column(e);
    RatMat r = P * ev;
    RatVec out(lattice_.rank());
    for (int i = 0; i < lattice_.rank(); ++i) out[i] = Rational(2) * r(i, 0) - Rational(e(i));
    return out;
}

Eigen::MatrixXd PositivePlane::boost_matrix(const VecZ& e, const Rational& lambda) const {
    if (!(lambda > Rational(0))) throw std::invalid_argument("boost_matrix: lambda must be positive");
    if (!is_isotropic(lattice_, e)) throw std::domain_error("boost_matrix: e is not isotropic");
    const int n = lattice_.rank();
    Eigen::VectorXd ed = e.cast<double>();
    Eigen::VectorXd ep = reflect_e_prime(e);
    const Eigen::MatrixXd& Q = lattice_.gram_d();
    double c = ed.dot(Q * ep);
    if (std::abs(c) < 1e-12)
        throw std::domain_error("boost_matrix: degenerate pairing <e, e'>");
    double l = lambda.to_double();
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n, n);
    A += ((1.0 / l - 1.0) / c) * (ed * (ep.transpose() * Q));
    A += ((l - 1.0) / c) * (ep * (ed.transpose() * Q));
    return A;
}

RatMat PositivePlane::boost_matrix_exact(const VecZ& e, const Rational& lambda) const {
    if (!(lambda > Rational(0))) throw std::invalid_argument("boost_matrix: lambda must be positive");
    RatVec ep = reflect_e_prime_exact(e);
    const int n = lattice_.rank();
    RatMat Q = rat_from_int(lattice_.gram());
    RatMat ev = rat_column(e);
    RatMat epv(n, 1);
    for (int i = 0; i < n; ++i) epv(i, 0) = ep[i];
    Rational c;
    {
        RatMat prod = ev.transpose() * Q * epv;
        c = prod(0, 0);
    }
    if (c.num() == 0) throw std::domain_error("boost_matrix: degenerate pairing <e, e'>");
    Rational inv_l = Rational(1) / lambda;
    RatMat A = RatMat::identity(n);
    RatMat eQt = epv.transpose() * Q;  // row vector e'^T Q
    RatMat eQ = ev.transpose() * Q;    // row vector e^T Q
    A = A + ((inv_l - Rational(1)) / c) * (ev * eQt);
    A = A + ((lambda - Rational(1)) / c) * (epv * eQ);
    return A;
}

Eigen::MatrixXd PositivePlane::boost_from_time(const VecZ& e, double t) const {
    // same construction with a floating lambda = exp(t)
    if (!is_isotropic(lattice_, e)) throw std::domain_error("boost_matrix: e is not isotropic");
    const int n = lattice_.rank();
    Eigen::VectorXd ed = e.cast<double>();
    Eigen::VectorXd ep = reflect_e_prime(e);
    const Eigen::MatrixXd& Q = lattice_.gram_d();
    double c = ed.dot(Q * ep);
    if (std::abs(c) < 1e-12)
        throw std::domain_error("boost_matrix: degenerate pairing <e, e'>");
    double l = std::exp(t);
    Eigen::MatrixXd A = Eigen::MatrixXd::Identity(n, n);
    A += ((1.0 / l - 1.0) / c) * (ed * (ep.transpose() * Q));
    A += ((l - 1.0) / c) * (ep * (ed.transpose() * Q));
    return A;
}

}  // namespace slag
