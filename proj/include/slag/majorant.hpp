#pragma once

#include <Eigen/Dense>

#include "slag/lattice.hpp"

namespace slag {

/// Positive-definite majorant M = Q|_P - Q|_{P^perp} of an indefinite
/// form.  On the isotropic cone M(v) = 2 Q((v)_P), so bounding the
/// projection norm becomes a definite-form ball condition.
struct MajorantForm {
    Eigen::MatrixXd matrix;    // rank x rank, symmetric positive definite
    Eigen::MatrixXd cholesky;  // upper triangular R with M = R^T R
    int rank = 0;

    double value(const VecZ& v) const;
    double value(const Eigen::VectorXd& v) const;
};

/// Requires plane dimension == n_plus so the form is negative definite on
/// the complement.  Cholesky failure reports a non-generic plane.
MajorantForm build_majorant(const GramLattice& L, const PositivePlane& P);

}  // namespace slag
