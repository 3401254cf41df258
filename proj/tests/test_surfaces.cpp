#include <doctest.h>

#include "hessk3/surfaces.hpp"

using namespace hessk3;

namespace {
const std::vector<std::string> kNone;
MultiPoly cst(long v) { return MultiPoly::constant(kNone, Rational(v)); }
}  // namespace

TEST_CASE("weighted projective points and scaling equality") {
    CHECK_THROWS_AS(WPPoint({1, 2}, {cst(0), cst(0)}), std::domain_error);
    const WPPoint p({1, 2}, {cst(1), cst(2)});
    const WPPoint q({1, 2}, {cst(2), cst(8)});
    CHECK(wp_eq(p, q, Rational(2)));
    CHECK(!wp_eq(p, q, Rational(3)));
    const WPPoint r({1, 2}, {cst(3), cst(2)});
    CHECK(!wp_eq(p, r, Rational(3)));
}

TEST_CASE("Sylvester invariants evaluate on the unit pentahedron") {
    const WPPoint img = sylvester_invariants({cst(5), cst(10), cst(10), cst(5), cst(1)});
    // sigma of (1,1,1,1,1): image [-15 : 5 : 5 : 10 : 1]
    const WPPoint want({1, 2, 3, 4, 5}, {cst(-15), cst(5), cst(5), cst(10), cst(1)});
    CHECK(wp_eq(img, want, Rational(1)));
    CHECK(sylvester_roundtrip().ok);
}

TEST_CASE("stratum images and their vanishing loci") {
    CHECK(stratum_loci().ok);

    // ns2(-1, 0) = [8 : 1 : 0 : 0 : 0]
    const WPPoint p = ns2_point(cst(-1), cst(0));
    const WPPoint want({1, 2, 3, 4, 5}, {cst(8), cst(1), cst(0), cst(0), cst(0)});
    CHECK(wp_eq(p, want, Rational(1)));

    // Fermat sits at [1 : 0 : 0 : 0 : 0] via the pentahedral coefficients (1,1,1,1,0)
    const WPPoint f = sylvester_invariants({cst(4), cst(6), cst(4), cst(1), cst(0)});
    const WPPoint fw({1, 2, 3, 4, 5}, {cst(1), cst(0), cst(0), cst(0), cst(0)});
    CHECK(wp_eq(f, fw, Rational(1)));
}

TEST_CASE("DvG compatibility rows") {
    CHECK(ns1_dvg_consistency().ok);
    CHECK(dvg_specialize_hps().ok);
    const WPPoint d = dvg_map();
    CHECK(d.weights == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("Hessian determinant on split examples") {
    const std::vector<std::string> xs = {"x0", "x1", "x2", "x3"};
    auto var = [&](std::size_t i) { return MultiPoly::variable(xs, i); };

    // Fermat: second partials diag(6 x_i), determinant 1296 x0 x1 x2 x3
    const MultiPoly fermat = var(0).pow(3) + var(1).pow(3) + var(2).pow(3) + var(3).pow(3);
    const MultiPoly h = hessian_quartic(fermat, {0, 1, 2, 3});
    const MultiPoly target = (var(0) * var(1) * var(2) * var(3)).scale(Rational(1296));
    CHECK(h == target);

    // a singular cubic degenerates: x0^3 alone gives a rank-1 Hessian matrix
    CHECK(hessian_quartic(var(0).pow(3), {0, 1, 2, 3}).is_zero());

    // non-cubic input is rejected
    CHECK_THROWS(hessian_quartic(var(0).pow(2), {0, 1, 2, 3}));
}

TEST_CASE("Hessian proportionality constants") {
    const HessianCheck ns1 = hessian_ns1();
    CHECK(ns1.ok);
    CHECK(ns1.ratio == Rational(-1296));
    const HessianCheck ns2 = hessian_ns2();
    CHECK(ns2.ok);
    CHECK(ns2.ratio == Rational(1296));
    const HessianCheck fer = hessian_fermat();
    CHECK(fer.ok);
    CHECK(fer.ratio == Rational(1296));
    const HessianCheck syl = hessian_sylvester();
    CHECK(syl.ok);
    CHECK(syl.ratio == Rational(1296));
    CHECK(hessian_equivariance().ok);
}

TEST_CASE("toric model restrictions, lines, and singular points") {
    const MultiPoly t = toric_model();
    REQUIRE(t.vars().size() == 9);

    const BoundaryReport b = boundary_lines();
    CHECK(b.ok);
    CHECK(b.line_count == 12);
    CHECK(b.point_count == 8);
    CHECK(b.lines.size() == 12);

    const SingularReport s = singular_points();
    CHECK(s.ok);
    CHECK(s.count == 8);

    CHECK(incidence_matches_lattice().ok);
}
