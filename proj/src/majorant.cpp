#include "slag/majorant.hpp"

#include <stdexcept>

namespace slag {

double MajorantForm::value(const VecZ& v) const { return value(v.cast<double>().eval()); }

double MajorantForm::value(const Eigen::VectorXd& v) const {
    // fixed accumulation order so enumerator and oracles agree bit for bit
    double acc = 0.0;
    for (int i = 0; i < rank; ++i) {
        double row = 0.0;
        for (int j = 0; j < rank; ++j) row += matrix(i, j) * v(j);
        acc += v(i) * row;
    }
    return acc;
}

MajorantForm build_majorant(const GramLattice& L, const PositivePlane& P) {
    if (P.dim() != L.signature().first)
        throw std::invalid_argument("build_majorant: plane dimension != n_plus");
    const int n = L.rank();
    const Eigen::MatrixXd& Q = L.gram_d();
    const Eigen::MatrixXd& Pi = P.projector();
    Eigen::MatrixXd PiPerp = Eigen::MatrixXd::Identity(n, n) - Pi;
    Eigen::MatrixXd M = Pi.transpose() * Q * Pi - PiPerp.transpose() * Q * PiPerp;
    M = 0.5 * (M + M.transpose().eval());  // scrub rounding asymmetry

    Eigen::LLT<Eigen::MatrixXd> llt(M);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("build_majorant: majorant is not positive definite "
                                 "(non-generic or wrongly dimensioned plane)");
    MajorantForm out;
    out.matrix = std::move(M);
    out.cholesky = llt.matrixU();
    out.rank = n;
    return out;
}

}  // namespace slag
