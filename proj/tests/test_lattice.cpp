#include <doctest.h>

#include <memory>
#include <random>

#include "slag/lattice.hpp"

using namespace slag;

namespace {

VecZ vec(std::initializer_list<long long> vals) {
    VecZ v(static_cast<int>(vals.size()));
    int i = 0;
    for (long long x : vals) v(i++) = x;
    return v;
}

// small isotropic vectors in U^k: (a, b, -a, b, ...) style constructions
VecZ random_isotropic_Uk(int k, std::mt19937_64& rng) {
    // Q(x1,y1,...,xk,yk) = 2 sum x_i y_i; pair up blocks with opposite products
    std::uniform_int_distribution<long long> d(-4, 4);
    VecZ v = VecZ::Zero(2 * k);
    while (true) {
        for (int i = 0; i < 2 * k; ++i) v(i) = d(rng);
        long long q = 0;
        for (int i = 0; i < k; ++i) q += v(2 * i) * v(2 * i + 1);
        if (q != 0) {
            // force the last block to cancel the rest when divisible
            long long rest = 0;
            for (int i = 0; i < k - 1; ++i) rest += v(2 * i) * v(2 * i + 1);
            if (v(2 * k - 2) != 0 && rest % v(2 * k - 2) == 0) {
                v(2 * k - 1) = -rest / v(2 * k - 2);
            } else {
                continue;
            }
        }
        if (!v.isZero()) return v;
    }
}

}  // namespace

TEST_CASE("q_value on standard lattices") {
    GramLattice U = GramLattice::U();
    CHECK(U.q_value(vec({1, 1})) == 2);
    CHECK(U.q_value(vec({1, 0})) == 0);
    GramLattice K3 = GramLattice::parse("3U+2E8m");
    VecZ e = VecZ::Zero(22);
    e(6) = 1;  // first E8(-1) coordinate vector
    CHECK(K3.q_value(e) == -2);
    CHECK_THROWS_AS(U.q_value(vec({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("signatures by exact pivoting") {
    CHECK(GramLattice::U().signature() == std::pair<int, int>{1, 1});
    CHECK(GramLattice::E8_minus().signature() == std::pair<int, int>{0, 8});
    CHECK(GramLattice::parse("3U+2E8m").signature() == std::pair<int, int>{3, 19});
    CHECK(GramLattice::parse("2U").signature() == std::pair<int, int>{2, 2});
    MatZ degenerate = MatZ::Zero(2, 2);
    degenerate(0, 0) = 1;
    CHECK_THROWS_AS(GramLattice{degenerate}, std::domain_error);
}

TEST_CASE("E8(-1) is even and unimodular") {
    GramLattice E8m = GramLattice::E8_minus();
    CHECK(E8m.is_even());
    CHECK(E8m.determinant() == Rational(1));
    CHECK(GramLattice::U().determinant() == Rational(-1));
    CHECK(GramLattice::parse("3U+2E8m").is_even());
}

TEST_CASE("primitivity and isotropy predicates") {
    CHECK(is_primitive(vec({1, 0})));
    CHECK(is_primitive(vec({3, 2})));
    CHECK_FALSE(is_primitive(vec({2, 4})));
    CHECK_FALSE(is_primitive(vec({0, 0})));
    GramLattice U = GramLattice::U();
    CHECK(is_isotropic(U, vec({1, 0})));
    CHECK(is_isotropic(U, vec({0, 0})));
    CHECK_FALSE(is_isotropic(U, vec({1, 1})));
}

TEST_CASE("projection splits v against the form") {
    GramLattice U = GramLattice::U();
    auto P = PositivePlane::from_vectors(U, {vec({1, 1})});
    auto [vp, vperp] = P.project(Eigen::Vector2d(1, 0));
    CHECK(vp(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(vp(1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(vperp(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(vperp(1) == doctest::Approx(-0.5).epsilon(1e-12));

    // v in the span is fixed
    auto [wp, wperp] = P.project(Eigen::Vector2d(2, 2));
    CHECK((wp - Eigen::Vector2d(2, 2)).norm() < 1e-10);
    CHECK(wperp.norm() < 1e-10);

    // zero maps to zero
    auto [zp, zperp] = P.project(Eigen::Vector2d(0, 0));
    CHECK(zp.norm() == 0.0);
    CHECK(zperp.norm() == 0.0);
}

TEST_CASE("projector idempotence and complementarity") {
    GramLattice L = GramLattice::parse("2U");
    for (std::uint64_t seed : {1ull, 7ull, 42ull}) {
        auto P = PositivePlane::from_seed(L, seed);
        const auto& Pi = P.projector();
        CHECK(((Pi * Pi) - Pi).cwiseAbs().maxCoeff() < 1e-10);
        // Q-orthogonality of the split for random vectors
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> d(-3, 3);
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::VectorXd v(4), w(4);
            for (int i = 0; i < 4; ++i) {
                v(i) = d(rng);
                w(i) = d(rng);
            }
            auto [vp, vperp] = P.project(v);
            auto [wp, wperp] = P.project(w);
            CHECK(std::abs(L.pairing_d(vp, wperp)) < 1e-10);
        }
    }
}

TEST_CASE("plane construction rejects non-positive spans") {
    GramLattice U = GramLattice::U();
    CHECK_THROWS_AS(PositivePlane::from_vectors(U, {vec({1, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(PositivePlane::from_vectors(U, {vec({1, -1})}), std::invalid_argument);
    GramLattice E8m = GramLattice::E8_minus();
    VecZ e1 = VecZ::Zero(8);
    e1(0) = 1;
    CHECK_THROWS_AS(PositivePlane::from_vectors(E8m, {e1}), std::invalid_argument);
}

TEST_CASE("e' reflection: the worked U example") {
    GramLattice U = GramLattice::U();
    auto P = PositivePlane::from_vectors(U, {vec({1, 1})});
    Eigen::VectorXd ep = P.reflect_e_prime(vec({1, 0}));
    CHECK(ep(0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(ep(1) == doctest::Approx(1.0).epsilon(1e-12));
    RatVec epq = P.reflect_e_prime_exact(vec({1, 0}));
    CHECK(epq[0] == Rational(0));
    CHECK(epq[1] == Rational(1));
    CHECK_THROWS_AS(P.reflect_e_prime(vec({1, 1})), std::domain_error);
    // degenerate input: zero is isotropic and fixed
    CHECK(P.reflect_e_prime(vec({0, 0})).norm() == 0.0);
}

TEST_CASE("e' is isotropic with involutive reflection and positive pairing") {
    GramLattice L = GramLattice::parse("2U");
    std::mt19937_64 rng(2024);
    int done = 0;
    while (done < 100) {
        std::uint64_t seed = rng();
        auto P = PositivePlane::from_seed(L, seed);
        VecZ e = random_isotropic_Uk(2, rng);
        Eigen::VectorXd ed = e.cast<double>();
        Eigen::VectorXd ep = P.reflect_e_prime(e);
        CHECK(std::abs(L.pairing_d(ep, ep)) < 1e-9);  // isotropy transferred
        // reflecting twice returns e: e'' = (2 Pi - I) e'
        Eigen::VectorXd e2 = 2.0 * (P.projector() * ep) - ep;
        CHECK((e2 - ed).cwiseAbs().maxCoeff() < 1e-9);
        // pairing <e, e'> = 2 Q((e)_P) >= 0
        auto [epart, eperp] = P.project(ed);
        double pair = L.pairing_d(ed, ep);
        CHECK(pair == doctest::Approx(2.0 * L.pairing_d(epart, epart)).epsilon(1e-9));
        ++done;
    }
}

TEST_CASE("boost matrix: forced diagonal example and identity") {
    GramLattice U = GramLattice::U();
    auto P = PositivePlane::from_vectors(U, {vec({1, 1})});
    Eigen::MatrixXd A = P.boost_matrix(vec({1, 0}), Rational(2));
    CHECK(A(0, 0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(A(1, 1) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::abs(A(0, 1)) < 1e-14);
    CHECK(std::abs(A(1, 0)) < 1e-14);
    RatMat Aq = P.boost_matrix_exact(vec({1, 0}), Rational(2));
    CHECK(Aq(0, 0) == Rational(1, 2));
    CHECK(Aq(1, 1) == Rational(2));
    RatMat I2 = P.boost_matrix_exact(vec({1, 0}), Rational(1));
    CHECK(I2 == RatMat::identity(2));
}

TEST_CASE("boost preserves the form and satisfies the group law, exactly") {
    std::mt19937_64 rng(7);
    GramLattice L = GramLattice::parse("2U");
    RatMat Q(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) Q(i, j) = Rational(L.gram()(i, j));
    std::uniform_int_distribution<long long> coord(-3, 3);
    std::uniform_int_distribution<long long> numden(1, 9);
    int done = 0;
    while (done < 100) {
        // random integer plane vectors with positive-definite span
        std::vector<VecZ> basis;
        for (int j = 0; j < 2; ++j) {
            VecZ v(4);
            for (int i = 0; i < 4; ++i) v(i) = coord(rng);
            basis.push_back(v);
        }
        std::unique_ptr<PositivePlane> P;
        try {
            P = std::make_unique<PositivePlane>(PositivePlane::from_vectors(L, basis));
        } catch (const std::invalid_argument&) {
            continue;
        }
        VecZ e = random_isotropic_Uk(2, rng);
        Rational lam(numden(rng), numden(rng));
        Rational mu(numden(rng), numden(rng));
        RatMat A, B;
        try {
            A = P->boost_matrix_exact(e, lam);
            B = P->boost_matrix_exact(e, mu);
        } catch (const std::domain_error&) {
            continue;  // degenerate pairing for this plane/e combination
        }
        CHECK(A.transpose() * Q * A == Q);
        CHECK(A * B == P->boost_matrix_exact(e, lam * mu));
        ++done;
    }
}

TEST_CASE("seeded boosts preserve the form within tolerance") {
    GramLattice L = GramLattice::parse("2U");
    std::mt19937_64 rng(99);
    const Eigen::MatrixXd& Q = L.gram_d();
    for (int trial = 0; trial < 25; ++trial) {
        auto P = PositivePlane::from_seed(L, rng());
        VecZ e = random_isotropic_Uk(2, rng);
        Eigen::MatrixXd A = P.boost_matrix(e, Rational(3));
        CHECK((A.transpose() * Q * A - Q).cwiseAbs().maxCoeff() < 1e-10);
        Eigen::MatrixXd Ainv = P.boost_matrix(e, Rational(1, 3));
        CHECK((A * Ainv - Eigen::MatrixXd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("lattice spec parsing") {
    CHECK(GramLattice::parse("U").rank() == 2);
    CHECK(GramLattice::parse("3U").rank() == 6);
    CHECK(GramLattice::parse("U+E8m").rank() == 10);
    CHECK(GramLattice::parse("3U+2E8m").rank() == 22);
    CHECK_THROWS_AS(GramLattice::parse("2X"), std::invalid_argument);
    CHECK_THROWS_AS(GramLattice::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(GramLattice::parse("U++U"), std::invalid_argument);
}

TEST_CASE("plane expression parsing") {
    auto vs = parse_vector_exprs("e1+e2", 4);
    REQUIRE(vs.size() == 1);
    CHECK(vs[0] == vec({1, 1, 0, 0}));
    auto two = parse_vector_exprs("2e1-3e4, e2+e3", 4);
    REQUIRE(two.size() == 2);
    CHECK(two[0] == vec({2, 0, 0, -3}));
    CHECK(two[1] == vec({0, 1, 1, 0}));
    CHECK_THROWS_AS(parse_vector_exprs("e5", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_vector_exprs("x1", 4), std::invalid_argument);
}
