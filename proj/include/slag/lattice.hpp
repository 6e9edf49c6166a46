#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slag/ratmat.hpp"

namespace slag {

using MatZ = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

/// An integer lattice with a nondegenerate symmetric bilinear form.
class GramLattice {
  public:
    explicit GramLattice(MatZ gram);

    /// Hyperbolic plane, Gram [[0,1],[1,0]].
    static GramLattice U();
    /// E8 with the form negated: even, negative definite, determinant 1.
    /// The Gram matrix is the negated E8 Cartan matrix in Bourbaki ordering.
    static GramLattice E8_minus();
    static GramLattice direct_sum(const std::vector<GramLattice>& parts);
    /// Parses spec strings like "U", "E8m", "3U+2E8m".
    static GramLattice parse(const std::string& spec);

    int rank() const { return rank_; }
    const MatZ& gram() const { return gram_; }
    const Eigen::MatrixXd& gram_d() const { return gram_d_; }
    /// (n_plus, n_minus), computed once by exact symmetric pivoting.
    std::pair<int, int> signature() const { return signature_; }

    long long q_value(const VecZ& v) const;
    long long pairing(const VecZ& v, const VecZ& w) const;
    double pairing_d(const Eigen::VectorXd& v, const Eigen::VectorXd& w) const;

    bool is_even() const;
    Rational determinant() const;

    std::string spec_string() const { return spec_string_; }

  private:
    MatZ gram_;
    Eigen::MatrixXd gram_d_;
    int rank_;
    std::pair<int, int> signature_;
    std::string spec_string_;
};

/// gcd of the coordinates is 1; the zero vector is not primitive.
bool is_primitive(const VecZ& v);
bool is_isotropic(const GramLattice& L, const VecZ& v);

/// A subspace on which the form is positive definite, with projection
/// machinery.  Planes built from integer vectors carry an exact rational
/// mirror of the basis and projector alongside the double one.
class PositivePlane {
  public:
    /// Span of integer vectors given in lattice coordinates.  An empty
    /// list is the 0-plane (valid for definite lattices).
    static PositivePlane from_vectors(const GramLattice& L, const std::vector<VecZ>& vectors);
    /// Seeded random plane of dimension n_plus, Gram-Schmidt orthogonalized
    /// against the form.  Resamples up to 100 times if the draw is not
    /// positive definite.  Fully determined by the seed.
    static PositivePlane from_seed(const GramLattice& L, std::uint64_t seed);
    /// Wraps an explicit real basis (no exact mirror).
    static PositivePlane from_basis(const GramLattice& L, Eigen::MatrixXd basis);

    const GramLattice& lattice() const { return lattice_; }
    int dim() const { return static_cast<int>(basis_.cols()); }
    const Eigen::MatrixXd& basis() const { return basis_; }
    const Eigen::MatrixXd& projector() const { return projector_; }

    bool has_exact() const { return exact_.has_value(); }
    const RatMat& projector_exact() const;

    /// v = v_P + v_perp with v_P in the plane and v_perp Q-orthogonal to it.
    std::pair<Eigen::VectorXd, Eigen::VectorXd> project(const Eigen::VectorXd& v) const;

    /// Squared form-norm of the projection, Q((v)_P).
    double projection_q_norm(const VecZ& v) const;

    /// e' = (e)_P - (e)_perp for isotropic e.  Integer isotropy is checked
    /// exactly before the reflection.
    Eigen::VectorXd reflect_e_prime(const VecZ& e) const;
    RatVec reflect_e_prime_exact(const VecZ& e) const;

    /// The boost A_lambda with A e = lambda^{-1} e, A e' = lambda e',
    /// identity on the orthocomplement of span(e, e').
    Eigen::MatrixXd boost_matrix(const VecZ& e, const Rational& lambda) const;
    RatMat boost_matrix_exact(const VecZ& e, const Rational& lambda) const;
    /// Thin wrapper for numeric use: lambda = exp(t).
    Eigen::MatrixXd boost_from_time(const VecZ& e, double t) const;

  private:
    struct ExactData {
        RatMat basis;      // n x p
        RatMat projector;  // n x n
    };

    PositivePlane(GramLattice L, Eigen::MatrixXd basis, std::optional<ExactData> exact);

    GramLattice lattice_;
    Eigen::MatrixXd basis_;
    Eigen::MatrixXd projector_;
    std::optional<ExactData> exact_;
};

/// Parses comma-separated integer combinations of basis vectors, e.g.
/// "e1+e2, 2e1-3e4", into lattice coordinate vectors of the given rank.
std::vector<VecZ> parse_vector_exprs(const std::string& text, int rank);

/// Exact signature of a symmetric integer matrix by congruence pivoting
/// (Sylvester's law).  Throws std::domain_error on degenerate forms.
std::pair<int, int> exact_signature(const MatZ& gram);

/// Exact determinant by rational Gaussian elimination.
Rational exact_determinant(const MatZ& m);

}  // namespace slag
