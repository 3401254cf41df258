#include <doctest.h>

#include "hessk3/multipoly.hpp"
#include "hessk3/rational.hpp"
#include "hessk3/zmatrix.hpp"

using namespace hessk3;

TEST_CASE("Rational stays canonical") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 5) == Rational(0));
    CHECK(Rational(3, 2).to_string() == "3/2");
    CHECK(Rational::from_string("-21/14") == Rational(-3, 2));
    CHECK(Rational::from_string("7") == Rational(7));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("Rational pow covers negative exponents") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("QmodTwo reduces into [0, 2)") {
    CHECK(QmodTwo(Rational(7, 4)) == QmodTwo(Rational(-1, 4)));
    CHECK((QmodTwo(Rational(7, 4)) + QmodTwo(Rational(1, 4))).is_zero());
    CHECK(QmodTwo(Rational(3)) == QmodTwo(Rational(1)));
    CHECK(QmodTwo(Rational(1, 2)) != QmodTwo(Rational(3, 2)));
}

TEST_CASE("ZMatrix exact determinant and rank") {
    ZMatrix m = ZMatrix::from_rows({{2, 0, 1}, {1, 1, 0}, {0, 3, -1}});
    CHECK(m.det() == 1);
    CHECK(m.rank() == 3);

    ZMatrix n = ZMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(n.det() == -2);

    ZMatrix s = ZMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}});
    CHECK(s.det() == 0);
    CHECK(s.rank() == 2);

    std::vector<mpz_class> v = {1, 0, -2};
    const auto mv = m.apply(v);
    CHECK(mv == std::vector<mpz_class>{0, 1, 2});
}

TEST_CASE("ZMatrix signature of an indefinite form") {
    // hyperbolic plane: eigenvalues +1, -1
    ZMatrix u = ZMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK(u.signature() == std::pair<std::size_t, std::size_t>{1, 1});
    ZMatrix d = ZMatrix::from_rows({{2, 0, 0}, {0, -3, 0}, {0, 0, -1}});
    CHECK(d.signature() == std::pair<std::size_t, std::size_t>{1, 2});
}

TEST_CASE("Smith normal form of the U(2) block") {
    ZMatrix m = ZMatrix::from_rows({{0, 2}, {2, 0}});
    SmithForm f = smith_normal_form(m);
    CHECK(f.u * m * f.v == f.s);
    CHECK(abs(f.u.det()) == 1);
    CHECK(abs(f.v.det()) == 1);
    const auto inv = f.invariant_factors();
    REQUIRE(inv.size() == 2);
    CHECK(inv[0] == 2);
    CHECK(inv[1] == 2);
}

TEST_CASE("Smith normal form divisibility chain") {
    ZMatrix m = ZMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
    SmithForm f = smith_normal_form(m);
    CHECK(f.u * m * f.v == f.s);
    const auto inv = f.invariant_factors();
    for (std::size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
}

TEST_CASE("MultiPoly arithmetic and exact division") {
    const std::vector<std::string> xy = {"x", "y"};
    const MultiPoly x = MultiPoly::variable(xy, 0);
    const MultiPoly y = MultiPoly::variable(xy, 1);
    const MultiPoly one = MultiPoly::constant(xy, Rational(1));

    const MultiPoly p = (x + y).pow(3);
    CHECK(p.coeff({2, 1}) == Rational(3));
    CHECK(p.coeff({0, 3}) == Rational(1));
    CHECK(p.total_degree() == 3);
    CHECK(p.is_homogeneous(3));

    const auto q = p.divide_exact(x + y);
    REQUIRE(q.has_value());
    CHECK(*q == (x + y).pow(2));
    CHECK(!p.divide_exact(x - y).has_value());
    CHECK((x * y - y * x).is_zero());
}

TEST_CASE("MultiPoly calculus and evaluation") {
    const std::vector<std::string> xy = {"x", "y"};
    const MultiPoly x = MultiPoly::variable(xy, 0);
    const MultiPoly y = MultiPoly::variable(xy, 1);

    const MultiPoly p = x.pow(2) * y + y.pow(3).scale(Rational(2));
    CHECK(p.derivative(0) == x * y.scale(Rational(2)));
    CHECK(p.derivative(1) == x.pow(2) + y.pow(2).scale(Rational(6)));
    CHECK(p.eval({Rational(2), Rational(3)}) == Rational(66));

    const MultiPoly fixed = p.eval_partial({{1, Rational(1)}});
    CHECK(fixed == x.pow(2) + MultiPoly::constant(xy, Rational(2)));

    const MultiPoly sub = p.substitute(0, y);
    CHECK(sub == y.pow(3).scale(Rational(3)));
}

TEST_CASE("Weighted homogeneity detects the right grading") {
    const std::vector<std::string> uv = {"u", "v"};
    const MultiPoly u = MultiPoly::variable(uv, 0);
    const MultiPoly v = MultiPoly::variable(uv, 1);
    // u has weight 2, v has weight 3: u^3 and v^2 both sit in degree 6
    const MultiPoly p = u.pow(3) + v.pow(2);
    CHECK(p.is_weighted_homogeneous({0, 1}, {2, 3}, 6));
    CHECK(!p.is_weighted_homogeneous({0, 1}, {1, 1}, 3));
    const MultiPoly q = p + u;
    CHECK(!q.is_weighted_homogeneous({0, 1}, {2, 3}, 6));
}

TEST_CASE("truncate_total drops the high grades only") {
    const std::vector<std::string> xy = {"x", "y"};
    const MultiPoly x = MultiPoly::variable(xy, 0);
    const MultiPoly y = MultiPoly::variable(xy, 1);
    const MultiPoly p = (MultiPoly::constant(xy, Rational(1)) + x + y).pow(4);
    const MultiPoly t = p.truncate_total(2);
    CHECK(t.coeff({1, 1}) == p.coeff({1, 1}));
    CHECK(t.coeff({2, 1}) == Rational(0));
    CHECK(t.total_degree() == 2);
}
