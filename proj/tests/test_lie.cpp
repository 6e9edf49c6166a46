#include <doctest.h>

#include "slag/lie.hpp"

using namespace slag;

TEST_CASE("dimension formulas at the anchors") {
    GroupDimensions d = dimensions(GroupSpec(3, 19));
    CHECK(d.dim_G == 231);
    CHECK(d.dim_K == 174);
    CHECK(d.dim_He == 210);
    CHECK(d.dim_X == 231);
    CHECK(d.dim_Y == 210);

    GroupDimensions d11 = dimensions(GroupSpec(1, 1));
    CHECK(d11.dim_G == 1);
    CHECK(d11.dim_K == 0);
    CHECK(d11.dim_Y == 0);

    GroupDimensions d22 = dimensions(GroupSpec(2, 2));
    CHECK(d22.dim_G == 6);
    CHECK(d22.dim_K == 2);
    CHECK(d22.dim_Y == 3);

    CHECK_THROWS_AS(GroupSpec(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec(4, 3), std::invalid_argument);
}

TEST_CASE("root data for small specs") {
    auto b1 = root_datum(GroupSpec(1, 2));
    CHECK(b1.family == 'B');
    REQUIRE(b1.positive_roots.size() == 1);
    CHECK(b1.positive_roots[0].coeffs == std::vector<int>{1});
    CHECK(b1.positive_roots[0].multiplicity == 1);
    CHECK(b1.rho[0] == Rational(1, 2));

    auto d2 = root_datum(GroupSpec(2, 2));
    CHECK(d2.family == 'D');
    CHECK(d2.positive_roots.size() == 2);
    CHECK(d2.rho[0] == Rational(1));
    CHECK(d2.rho[1] == Rational(0));

    auto b3 = root_datum(GroupSpec(3, 19));
    int long_roots = 0, short_roots = 0;
    for (const auto& r : b3.positive_roots) {
        int nonzero = 0;
        for (int c : r.coeffs) nonzero += c != 0;
        if (nonzero == 2) {
            CHECK(r.multiplicity == 1);
            ++long_roots;
        } else {
            CHECK(r.multiplicity == 16);
            ++short_roots;
        }
    }
    CHECK(long_roots == 6);
    CHECK(short_roots == 3);
}

TEST_CASE("rho(H) anchors") {
    CHECK(rho_H(GroupSpec(3, 19)) == Rational(10));
    CHECK(rho_H(GroupSpec(1, 2)) == Rational(1, 2));
    CHECK(rho_H(GroupSpec(2, 2)) == Rational(1));
}

TEST_CASE("datum sweep: closed form, Iwasawa count, dominance") {
    for (int p = 1; p <= 25; ++p) {
        for (int q = p; q <= 25; ++q) {
            GroupSpec spec(p, q);
            auto datum = root_datum(spec);
            auto dims = dimensions(spec);
            CHECK(datum.rho[0] == Rational(p + q - 2, 2));
            CHECK(dims.dim_K + datum.root_count_with_multiplicity() + p == dims.dim_G);
            for (int i = 0; i < p; ++i) {
                CHECK(datum.rho[i] >= Rational(0));
                if (i > 0) CHECK(datum.rho[i - 1] >= datum.rho[i]);
            }
        }
    }
}

TEST_CASE("p(pi) table") {
    CHECK(integrability_constant(GroupSpec(3, 19)) == 20);
    CHECK_FALSE(integrability_constant(GroupSpec(2, 2)).has_value());
    CHECK_FALSE(integrability_constant(GroupSpec(1, 2)).has_value());
    PpiTable t = PpiTable::builtin();
    t.set(GroupSpec(2, 2), 4);
    CHECK(integrability_constant(GroupSpec(2, 2), t) == 4);
    CHECK_THROWS_AS(t.set(GroupSpec(2, 2), 1), std::invalid_argument);
}
