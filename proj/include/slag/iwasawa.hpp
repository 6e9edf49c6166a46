#pragma once

#include <Eigen/Dense>
#include <random>

#include "slag/lie.hpp"

namespace slag {

/// Matrix realizations of O(p,q) elements in one of two bases:
///  - diagonal: the form is J = diag(I_p, -I_q); K = O(p) x O(q) is
///    block diagonal and Euclidean-orthogonal here.
///  - hyperbolic (flag-ordered): basis f_1..f_p, u_{2p+1}..u_n, f'_p..f'_1
///    with f_i = (u_i + u_{p+i})/sqrt(2), f'_i = (u_i - u_{p+i})/sqrt(2).
///    The torus is diagonal and N is unit upper triangular here.
enum class BasisKind { diagonal, hyperbolic };

struct GroupElement {
    Eigen::MatrixXd matrix;
    GroupSpec spec;
    BasisKind basis = BasisKind::diagonal;
};

/// Orthogonal change of basis S: columns are the flag-ordered hyperbolic
/// basis vectors written in diagonal coordinates.
Eigen::MatrixXd flag_change_of_basis(const GroupSpec& spec);

Eigen::MatrixXd form_matrix(const GroupSpec& spec, BasisKind basis);

GroupElement to_basis(const GroupElement& g, BasisKind target);

/// Validates g^T J g = J (within 1e-9) and wraps the matrix.
GroupElement make_group_element(Eigen::MatrixXd m, const GroupSpec& spec, BasisKind basis);

/// exp(H) as a torus element: diag(e^{H_1},..,e^{H_p}, 1,.., e^{-H_p},..,e^{-H_1})
/// in the hyperbolic basis (converted on request).
GroupElement torus_element(const GroupSpec& spec, const Eigen::VectorXd& H,
                           BasisKind basis = BasisKind::hyperbolic);

/// The boost a_t = exp(t H_1): contracts f'_1 by e^{-t} and expands f_1 by
/// e^{t}.  H(a_t) = t e_1, so rho(H) from the root datum is the decay rate.
GroupElement boost_a_t(const GroupSpec& spec, double t, BasisKind basis = BasisKind::diagonal);

/// Element of the maximal torus of SO(p) x SO(q) in the diagonal basis:
/// one rotation angle per disjoint coordinate pair inside each block
/// (floor(p/2) + floor(q/2) angles).  For dim K <= 2 this is all of K^0.
GroupElement compact_from_angles(const GroupSpec& spec, const std::vector<double>& angles);

/// Random draws for property tests.
GroupElement random_compact(const GroupSpec& spec, std::mt19937_64& rng);
GroupElement random_unipotent(const GroupSpec& spec, std::mt19937_64& rng, double scale = 0.5);

struct IwasawaTriple {
    GroupElement n;    // unit upper triangular, hyperbolic basis
    Eigen::VectorXd H; // torus logarithm, length p
    GroupElement k;    // in K, diagonal basis
};

/// Decomposes g = n a k with a = exp(H(g)).  Supported for p + q <= 6.
/// Computed through a QR factorization of g^{-1} in the flag basis: the
/// unique Q R with positive diagonal is exactly the K (AN) pair there.
IwasawaTriple iwasawa(const GroupElement& g);

/// Core shared with the spherical-function quadrature: H'(h) for h in flag
/// coordinates, where h = k' a' n' and H' = log diag(a').  The H of
/// g := h^{-1} is -H'.
Eigen::VectorXd iwasawa_H_from_flag(const Eigen::MatrixXd& h_flag, int p);

GroupElement compose(const GroupElement& a, const GroupElement& b);

}  // namespace slag
